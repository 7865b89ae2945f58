#pragma once

#include <unordered_map>
#include <vector>

#include "dsmix/chromosome.hpp"

namespace dsmix {

/// Ordered collection of chromosomes with a content-keyed multiplicity
/// index, so membership ("is this bit string present?") is answered by
/// value rather than by position. Duplicates are allowed; the index
/// tracks counts.
class Population {
public:
    Population() = default;
    explicit Population(std::vector<Chromosome> members);

    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }

    const Chromosome& operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }

    bool contains(const BitVector& bits) const { return index_.find(bits) != index_.end(); }

    int multiplicity(const BitVector& bits) const {
        auto it = index_.find(bits);
        return it == index_.end() ? 0 : it->second;
    }

    /// Number of distinct bit strings among the members.
    int distinct_count() const { return static_cast<int>(index_.size()); }

    /// Swaps in a new chromosome at position i, keeping the index in sync.
    void replace(int i, Chromosome next);

    /// True when the index matches a fresh rebuild from the members.
    bool index_consistent() const;

private:
    void index_add(const BitVector& bits);
    void index_remove(const BitVector& bits);

    std::vector<Chromosome> members_;
    std::unordered_map<BitVector, int, BitVectorHash> index_;
};

} // namespace dsmix
