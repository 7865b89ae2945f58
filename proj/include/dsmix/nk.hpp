#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dsmix/problem.hpp"
#include "dsmix/random.hpp"

namespace dsmix {

/// Chain-structured NK landscape: subfunction i reads the k+1 bits
/// starting at offset i*step, so consecutive windows overlap by
/// k+1-step positions. Each subfunction is a lookup table over its
/// window, indexed most-significant-bit-first in position order, with
/// values in [0,1].
struct NkInstance {
    int length = 0;     // number of variables
    int neighbors = 0;  // k
    int step = 0;       // s, offset between consecutive windows
    std::uint64_t seed = 0;
    std::vector<std::vector<double>> tables; // one per subfunction, size 2^(k+1)

    int arity() const { return neighbors + 1; }
    int subfunction_count() const { return (length - neighbors - 1) / step + 1; }
    int window_start(int i) const { return i * step; }
};

/// Draws every table entry uniformly from [0,1). Requires
/// (length-k-1) divisible by step, k >= 1 and 1 <= step <= k+1.
NkInstance generate_nk(int length, int neighbors, int step, RandomSource& rng);

double eval_nk(const BitVector& x, const NkInstance& inst);

struct NkOptimum {
    double value = 0.0;
    BitVector argmax;
};

/// Exact global maximum by dynamic programming over the bits shared
/// between consecutive windows; also returns one maximizing assignment.
NkOptimum nk_exact_optimum(const NkInstance& inst);

/// Text format: header "nk <length> <k> <s> <seed>", then one line of
/// 2^(k+1) decimal reals per subfunction. Round-trips bit-exactly.
void write_nk(std::ostream& out, const NkInstance& inst);
NkInstance read_nk(std::istream& in);

class NkProblem : public ProblemInstance {
public:
    explicit NkProblem(NkInstance inst);
    int size() const override { return inst_.length; }
    double evaluate(const BitVector& x) const override { return eval_nk(x, inst_); }
    std::optional<double> optimum() const override { return optimum_; }
    std::string family() const override { return "nk"; }
    std::string name() const override;
    const NkInstance& instance() const { return inst_; }

private:
    NkInstance inst_;
    double optimum_;
};

} // namespace dsmix
