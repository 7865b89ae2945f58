#pragma once

#include "dsmix/problem.hpp"

namespace dsmix {

/// Block layout shared by the trap families: m subfunctions of k bits.
struct TrapConfig {
    int block_count = 0; // m
    int block_size = 0;  // k
};

/// Deceptive k-bit trap of a block's unitation: 1 at u = k, otherwise
/// (k-1-u)/k, so the gradient points away from the all-ones block.
double trap_block_value(int u, int k);

/// Bipolar 6-bit block value: 1 at u in {0,6}, 0.8 at u = 3,
/// 0.4 at u in {2,4}, 0 at u in {1,5}.
double folded_block_value(int u);

/// Sum of the k-bit trap over m disjoint blocks; |x| must be m*k.
double eval_trap(const BitVector& x, const TrapConfig& cfg);

/// Sum of the k-bit trap over m windows of k bits that overlap their
/// neighbors by one position and wrap around; |x| must be m*(k-1).
double eval_cyclic_trap(const BitVector& x, const TrapConfig& cfg);

/// Sum of the bipolar block value over m disjoint 6-bit blocks;
/// cfg.block_size must be 6 and |x| must be 6*m.
double eval_folded_trap(const BitVector& x, const TrapConfig& cfg);

class TrapProblem : public ProblemInstance {
public:
    TrapProblem(int block_count, int block_size);
    int size() const override { return cfg_.block_count * cfg_.block_size; }
    double evaluate(const BitVector& x) const override { return eval_trap(x, cfg_); }
    std::optional<double> optimum() const override { return cfg_.block_count; }
    std::string family() const override { return "trap"; }
    std::string name() const override;

private:
    TrapConfig cfg_;
};

class CyclicTrapProblem : public ProblemInstance {
public:
    CyclicTrapProblem(int block_count, int block_size);
    int size() const override { return cfg_.block_count * (cfg_.block_size - 1); }
    double evaluate(const BitVector& x) const override { return eval_cyclic_trap(x, cfg_); }
    std::optional<double> optimum() const override { return cfg_.block_count; }
    std::string family() const override { return "ctrap"; }
    std::string name() const override;

private:
    TrapConfig cfg_;
};

class FoldedTrapProblem : public ProblemInstance {
public:
    explicit FoldedTrapProblem(int block_count);
    int size() const override { return cfg_.block_count * 6; }
    double evaluate(const BitVector& x) const override { return eval_folded_trap(x, cfg_); }
    std::optional<double> optimum() const override { return cfg_.block_count; }
    std::string family() const override { return "ftrap"; }
    std::string name() const override;

private:
    TrapConfig cfg_;
};

} // namespace dsmix
