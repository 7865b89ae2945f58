#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dsmix/evaluation.hpp"
#include "dsmix/population.hpp"
#include "dsmix/problem.hpp"
#include "dsmix/random.hpp"

namespace testutil {

inline dsmix::BitVector bv(const std::string& s) { return dsmix::BitVector::from_string(s); }

/// Problem defined by a lambda, for operator-level tests.
class FunctionProblem : public dsmix::ProblemInstance {
public:
    FunctionProblem(int size, std::function<double(const dsmix::BitVector&)> fn,
                    std::optional<double> optimum = std::nullopt, std::string name = "fn")
        : size_(size), fn_(std::move(fn)), optimum_(optimum), name_(std::move(name)) {}

    int size() const override { return size_; }
    double evaluate(const dsmix::BitVector& x) const override { return fn_(x); }
    std::optional<double> optimum() const override { return optimum_; }
    std::string family() const override { return "test"; }
    std::string name() const override { return name_; }

private:
    int size_;
    std::function<double(const dsmix::BitVector&)> fn_;
    std::optional<double> optimum_;
    std::string name_;
};

/// Counts evaluations independently of the engine's NfeCounter.
class CountingProblem : public dsmix::ProblemInstance {
public:
    explicit CountingProblem(const dsmix::ProblemInstance& inner) : inner_(&inner) {}

    int size() const override { return inner_->size(); }
    double evaluate(const dsmix::BitVector& x) const override {
        ++calls_;
        return inner_->evaluate(x);
    }
    std::optional<double> optimum() const override { return inner_->optimum(); }
    std::string family() const override { return inner_->family(); }
    std::string name() const override { return inner_->name(); }
    std::uint64_t calls() const { return calls_; }

private:
    const dsmix::ProblemInstance* inner_;
    mutable std::uint64_t calls_ = 0;
};

inline dsmix::Population random_evaluated_population(int count, int length,
                                                     const dsmix::ProblemInstance& problem,
                                                     dsmix::RandomSource& rng) {
    std::vector<dsmix::Chromosome> members;
    members.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        dsmix::Chromosome c = dsmix::Chromosome::random(length, rng);
        c.set_fitness(problem.evaluate(c.bits()));
        members.push_back(std::move(c));
    }
    return dsmix::Population(std::move(members));
}

inline dsmix::Population population_from_strings(const std::vector<std::string>& rows,
                                                 double fitness = 0.0) {
    std::vector<dsmix::Chromosome> members;
    members.reserve(rows.size());
    for (const std::string& row : rows)
        members.emplace_back(bv(row), fitness);
    return dsmix::Population(std::move(members));
}

} // namespace testutil
