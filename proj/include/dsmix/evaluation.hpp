#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "dsmix/chromosome.hpp"
#include "dsmix/problem.hpp"

namespace dsmix {

/// Matching slack for the optimum-hit test. Zero for the discrete-valued
/// families; absorbs summation-order noise on table-valued problems.
inline constexpr double kOptimumSlack = 1e-9;

/// Counts fitness-function evaluations: exactly one increment per call,
/// never decremented, shared across every operator of a run.
class NfeCounter {
public:
    std::uint64_t count() const { return count_; }
    void increment() { ++count_; }

private:
    std::uint64_t count_ = 0;
};

/// The single evaluation path of a run. Counts NFE, tracks the best
/// solution seen, and latches the count at the first optimum hit.
/// Operators must check should_stop() before evaluating and unwind
/// promptly once it is set, so the latched NFE is exact.
class Evaluator {
public:
    Evaluator(const ProblemInstance& problem, NfeCounter& counter, std::uint64_t max_nfe = 0)
        : problem_(&problem),
          counter_(&counter),
          target_(problem.optimum()),
          max_nfe_(max_nfe),
          best_(problem.size()) {}

    double evaluate(const BitVector& bits) {
        counter_->increment();
        const double f = problem_->evaluate(bits);
        if (f > best_fitness_) {
            best_fitness_ = f;
            best_ = bits;
        }
        if (!hit_ && target_ && f >= *target_ - kOptimumSlack) {
            hit_ = true;
            hit_nfe_ = counter_->count();
        }
        return f;
    }

    double ensure_evaluated(Chromosome& c) {
        if (!c.evaluated())
            c.set_fitness(evaluate(c.bits()));
        return c.fitness();
    }

    bool should_stop() const {
        return hit_ || (max_nfe_ != 0 && counter_->count() >= max_nfe_);
    }

    bool hit_optimum() const { return hit_; }
    std::uint64_t nfe_at_hit() const { return hit_nfe_; }
    std::uint64_t nfe() const { return counter_->count(); }
    double best_fitness() const { return best_fitness_; }
    const BitVector& best() const { return best_; }
    const ProblemInstance& problem() const { return *problem_; }

private:
    const ProblemInstance* problem_;
    NfeCounter* counter_;
    std::optional<double> target_;
    std::uint64_t max_nfe_;
    bool hit_ = false;
    std::uint64_t hit_nfe_ = 0;
    double best_fitness_ = -std::numeric_limits<double>::infinity();
    BitVector best_;
};

} // namespace dsmix
