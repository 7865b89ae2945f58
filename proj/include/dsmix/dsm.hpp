#pragma once

#include <iosfwd>
#include <vector>

#include "dsmix/population.hpp"

namespace dsmix {

/// Dependency structure matrix: symmetric, non-negative pairwise mutual
/// information (base-2 logarithm) between bit positions, zero diagonal.
class Dsm {
public:
    Dsm() = default;
    explicit Dsm(int n) : n_(n), mi_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

    int size() const { return n_; }
    int source_size() const { return source_; }

    double operator()(int i, int j) const {
        return mi_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(j)];
    }

    /// Symmetric write; the diagonal stays zero.
    void set(int i, int j, double v) {
        if (i == j)
            return;
        mi_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] = v;
        mi_[static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i)] = v;
    }

    void set_source_size(int n) { source_ = n; }

    /// Diagnostic dump, one comma-separated row per variable.
    void write_csv(std::ostream& out) const;

private:
    int n_ = 0;
    int source_ = 0;
    std::vector<double> mi_;
};

/// Empirical mutual information of every pair of bit columns over the
/// selected population, from the 2x2 joint frequency tables. Empty joint
/// cells contribute zero; tiny negative rounding residues are clamped.
Dsm update_matrix(const Population& selected);

/// Mutual information from a 2x2 contingency table of counts.
double mutual_information(int n00, int n01, int n10, int n11);

} // namespace dsmix
