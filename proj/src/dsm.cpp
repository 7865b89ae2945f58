#include "dsmix/dsm.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace dsmix {

double mutual_information(int n00, int n01, int n10, int n11) {
    const double total = n00 + n01 + n10 + n11;
    const double px0 = (n00 + n01) / total;
    const double px1 = (n10 + n11) / total;
    const double py0 = (n00 + n10) / total;
    const double py1 = (n01 + n11) / total;

    auto cell = [](double n, double total_, double px, double py) {
        if (n <= 0)
            return 0.0;
        const double p = n / total_;
        return p * std::log2(p / (px * py));
    };

    double mi = cell(n00, total, px0, py0) + cell(n01, total, px0, py1) +
                cell(n10, total, px1, py0) + cell(n11, total, px1, py1);
    return mi < 0.0 ? 0.0 : mi;
}

Dsm update_matrix(const Population& selected) {
    if (selected.empty())
        throw std::invalid_argument("update_matrix: empty population");

    const int n = selected.size();
    const int ell = selected[0].size();
    const std::size_t words = static_cast<std::size_t>((n + 63) / 64);

    // One packed column of population bits per variable.
    std::vector<std::uint64_t> columns(static_cast<std::size_t>(ell) * words, 0);
    for (int m = 0; m < n; ++m) {
        const Chromosome& c = selected[m];
        const std::size_t word = static_cast<std::size_t>(m) >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (m & 63);
        for (int i = 0; i < ell; ++i)
            if (c.get(i))
                columns[static_cast<std::size_t>(i) * words + word] |= bit;
    }

    std::vector<int> ones(static_cast<std::size_t>(ell), 0);
    for (int i = 0; i < ell; ++i) {
        int count = 0;
        for (std::size_t w = 0; w < words; ++w)
            count += std::popcount(columns[static_cast<std::size_t>(i) * words + w]);
        ones[static_cast<std::size_t>(i)] = count;
    }

    Dsm dsm(ell);
    dsm.set_source_size(n);
    for (int i = 0; i < ell; ++i) {
        const std::uint64_t* ci = &columns[static_cast<std::size_t>(i) * words];
        for (int j = i + 1; j < ell; ++j) {
            const std::uint64_t* cj = &columns[static_cast<std::size_t>(j) * words];
            int n11 = 0;
            for (std::size_t w = 0; w < words; ++w)
                n11 += std::popcount(ci[w] & cj[w]);
            const int n10 = ones[static_cast<std::size_t>(i)] - n11;
            const int n01 = ones[static_cast<std::size_t>(j)] - n11;
            const int n00 = n - n11 - n10 - n01;
            dsm.set(i, j, mutual_information(n00, n01, n10, n11));
        }
    }
    return dsm;
}

void Dsm::write_csv(std::ostream& out) const {
    char buf[32];
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            std::snprintf(buf, sizeof buf, "%.12g", (*this)(i, j));
            if (j)
                out << ',';
            out << buf;
        }
        out << '\n';
    }
}

} // namespace dsmix
