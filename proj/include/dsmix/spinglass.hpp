#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dsmix/problem.hpp"
#include "dsmix/random.hpp"

namespace dsmix {

/// Ising spins on an n-by-n grid with free boundaries. Spins are indexed
/// row-major; a chromosome bit b maps to the spin value 2b-1. Couplings
/// are limited to +1/-1 between grid-adjacent spins. The fitness of an
/// assignment is the negated energy, sum of s_i * s_j * J_ij over the
/// declared edges, so maximization searches for the ground state.
struct SpinGlassInstance {
    struct Coupling {
        int a = 0;
        int b = 0;
        int j = 0; // +1 or -1
    };

    int side = 0; // n
    std::uint64_t seed = 0;
    std::vector<Coupling> couplings;
    std::optional<double> ground_energy; // minimal energy = -max fitness

    int spin_count() const { return side * side; }
};

/// All 2n(n-1) grid edges with couplings drawn uniformly from {+1,-1}.
/// The ground-state energy is filled in by brute force for side <= 5.
SpinGlassInstance generate_spinglass(int side, RandomSource& rng);

double eval_spinglass(const BitVector& x, const SpinGlassInstance& inst);

/// Maximal fitness over all assignments by exhaustive search; side <= 5.
double spinglass_brute_force_best(const SpinGlassInstance& inst);

/// Text format: "spin <n>", optional "ground <energy>", then one line
/// "i j J" per edge with 0-based row-major spin indices.
void write_spinglass(std::ostream& out, const SpinGlassInstance& inst);
SpinGlassInstance parse_spinglass(std::istream& in);

class SpinGlassProblem : public ProblemInstance {
public:
    explicit SpinGlassProblem(SpinGlassInstance inst, std::string name = {});
    int size() const override { return inst_.spin_count(); }
    double evaluate(const BitVector& x) const override { return eval_spinglass(x, inst_); }
    std::optional<double> optimum() const override;
    std::string family() const override { return "spin"; }
    std::string name() const override { return name_; }
    const SpinGlassInstance& instance() const { return inst_; }

private:
    SpinGlassInstance inst_;
    std::string name_;
};

} // namespace dsmix
