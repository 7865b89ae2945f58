#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dsmix/dsm.hpp"

namespace dsmix {

/// Strictly nested chain of index sets. The chain stores the vertex
/// insertion order; mask i is its first i+1 entries, so nesting and the
/// one-vertex-per-step growth hold by construction.
class MaskSequence {
public:
    MaskSequence() = default;
    explicit MaskSequence(std::vector<int> chain) : chain_(std::move(chain)) {}

    int count() const { return static_cast<int>(chain_.size()); }
    bool empty() const { return chain_.empty(); }

    std::span<const int> mask(int i) const {
        return std::span<const int>(chain_.data(), static_cast<std::size_t>(i) + 1);
    }

    std::span<const int> chain() const { return chain_; }

private:
    std::vector<int> chain_;
};

/// The vertex outside `current` with maximal average mutual information
/// to the vertices inside it; ties go to the lowest index. `current`
/// must be nonempty and not cover the whole matrix.
int next_vertex(const Dsm& dsm, std::span<const int> current);

/// Grows a chain one vertex at a time, tracking the summed mutual
/// information from every outside vertex to the chain so each step is
/// linear. The argmax of the sum equals the argmax of the average.
class IlsGrower {
public:
    IlsGrower(const Dsm& dsm, int start);

    std::span<const int> chain() const { return chain_; }
    int size() const { return static_cast<int>(chain_.size()); }
    bool full() const { return size() == dsm_->size(); }

    /// Inserts and returns the best next vertex.
    int grow();

private:
    const Dsm* dsm_;
    std::vector<int> chain_;
    std::vector<char> in_chain_;
    std::vector<double> connection_;
};

/// Greedy chain growth from `start`: the current mask is recorded while
/// the `keep` predicate holds, one more vertex is inserted, and growth
/// stops at the first rejected mask or at full coverage. Returns the
/// recorded masks (possibly none).
MaskSequence grow_ils(const Dsm& dsm, int start,
                      const std::function<bool(std::span<const int>)>& keep);

} // namespace dsmix
