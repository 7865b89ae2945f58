#include "dsmix/traps.hpp"

#include <cmath>
#include <stdexcept>

namespace dsmix {

double trap_block_value(int u, int k) {
    if (u == k)
        return 1.0;
    return static_cast<double>(k - 1 - u) / static_cast<double>(k);
}

double folded_block_value(int u) {
    switch (std::abs(u - 3)) {
    case 3:
        return 1.0;
    case 0:
        return 0.8;
    case 1:
        return 0.4;
    default:
        return 0.0;
    }
}

double eval_trap(const BitVector& x, const TrapConfig& cfg) {
    const int m = cfg.block_count;
    const int k = cfg.block_size;
    if (x.size() != m * k)
        throw std::invalid_argument("eval_trap: length must be block_count * block_size");
    double f = 0.0;
    for (int b = 0; b < m; ++b)
        f += trap_block_value(x.count_ones(b * k, (b + 1) * k), k);
    return f;
}

double eval_cyclic_trap(const BitVector& x, const TrapConfig& cfg) {
    const int m = cfg.block_count;
    const int k = cfg.block_size;
    const int ell = m * (k - 1);
    if (x.size() != ell)
        throw std::invalid_argument("eval_cyclic_trap: length must be block_count * (block_size - 1)");
    double f = 0.0;
    for (int b = 0; b < m; ++b) {
        const int start = b * (k - 1);
        int u = 0;
        for (int j = 0; j < k; ++j) {
            int idx = start + j;
            if (idx >= ell)
                idx -= ell;
            u += x.get(idx);
        }
        f += trap_block_value(u, k);
    }
    return f;
}

double eval_folded_trap(const BitVector& x, const TrapConfig& cfg) {
    if (cfg.block_size != 6)
        throw std::invalid_argument("eval_folded_trap: block_size must be 6");
    const int m = cfg.block_count;
    if (x.size() != m * 6)
        throw std::invalid_argument("eval_folded_trap: length must be block_count * 6");
    double f = 0.0;
    for (int b = 0; b < m; ++b)
        f += folded_block_value(x.count_ones(b * 6, (b + 1) * 6));
    return f;
}

TrapProblem::TrapProblem(int block_count, int block_size) : cfg_{block_count, block_size} {
    if (block_count < 1 || block_size < 2)
        throw std::invalid_argument("TrapProblem: need block_count >= 1 and block_size >= 2");
}

std::string TrapProblem::name() const {
    return "trap_l" + std::to_string(size()) + "_k" + std::to_string(cfg_.block_size);
}

CyclicTrapProblem::CyclicTrapProblem(int block_count, int block_size)
    : cfg_{block_count, block_size} {
    if (block_count < 2 || block_size < 3)
        throw std::invalid_argument("CyclicTrapProblem: need block_count >= 2 and block_size >= 3");
}

std::string CyclicTrapProblem::name() const {
    return "ctrap_l" + std::to_string(size()) + "_k" + std::to_string(cfg_.block_size);
}

FoldedTrapProblem::FoldedTrapProblem(int block_count) : cfg_{block_count, 6} {
    if (block_count < 1)
        throw std::invalid_argument("FoldedTrapProblem: need block_count >= 1");
}

std::string FoldedTrapProblem::name() const { return "ftrap_l" + std::to_string(size()); }

} // namespace dsmix
