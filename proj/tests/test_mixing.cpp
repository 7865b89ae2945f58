#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "dsmix/mixing.hpp"
#include "dsmix/traps.hpp"
#include "helpers.hpp"

using namespace dsmix;
using testutil::bv;
using testutil::FunctionProblem;

namespace {

// Seed whose first draw of below(n) is `want`, so tests can pin the
// random start vertex.
std::uint64_t seed_with_first_draw(int n, int want) {
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        RandomSource rng(seed);
        if (static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) == want)
            return seed;
    }
    FAIL("no seed found");
    return 0;
}

Dsm chain_dsm(int n) {
    // strictly decreasing weights along 0-1-2-...: growth from 0 follows
    // the natural order
    Dsm dsm(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dsm.set(i, j, 1.0 / static_cast<double>(i + j));
    return dsm;
}

} // namespace

TEST_CASE("mask eligibility stops where the complementary pattern dies out") {
    const Population pop =
        testutil::population_from_strings({"01000", "11010", "00111", "10110", "10101"});
    const BitVector receiver = bv("10110");
    const std::vector<int> chain{0, 1, 2, 3, 4};

    for (int size = 1; size <= 4; ++size)
        REQUIRE(complement_exists(pop, receiver,
                                  std::span<const int>(chain.data(), static_cast<std::size_t>(size))));
    REQUIRE_FALSE(complement_exists(pop, receiver, std::span<const int>(chain.data(), 5)));
}

TEST_CASE("a fully converged population yields no trials") {
    const FunctionProblem flat(4, [](const BitVector&) { return 1.0; });
    NfeCounter counter;
    Evaluator eval(flat, counter);
    RandomSource rng(7);

    std::vector<Chromosome> members;
    for (int i = 0; i < 5; ++i)
        members.emplace_back(bv("1010"), 1.0);
    Population pop(std::move(members));

    const Dsm dsm = chain_dsm(4);
    const MixingOutcome outcome = restricted_mixing(pop, 0, dsm, eval, rng);
    REQUIRE_FALSE(outcome.accepted_mask.has_value());
    REQUIRE(outcome.trials == 0);
    REQUIRE(counter.count() == 0);
    REQUIRE(pop[0].bits() == bv("1010"));
}

TEST_CASE("a deceptive block is crossed only by the full-block mask") {
    const TrapProblem trap(2, 5);
    const FunctionProblem problem(10, [&trap](const BitVector& x) { return trap.evaluate(x); });
    NfeCounter counter;
    Evaluator eval(problem, counter);
    RandomSource rng(seed_with_first_draw(10, 0));

    std::vector<Chromosome> members;
    members.emplace_back(bv("0000011111"), problem.evaluate(bv("0000011111")));
    members.emplace_back(bv("1111100000"), problem.evaluate(bv("1111100000")));
    members.emplace_back(bv("0000000000"), problem.evaluate(bv("0000000000")));
    Population pop(std::move(members));

    const Dsm dsm = chain_dsm(10);
    const MixingOutcome outcome = restricted_mixing(pop, 0, dsm, eval, rng);

    REQUIRE(outcome.accepted_mask.has_value());
    REQUIRE(outcome.accepted_mask->size() == 5);
    REQUIRE(outcome.improved);
    REQUIRE(outcome.trials == 5);
    REQUIRE(counter.count() == 5);
    REQUIRE(pop[0].bits() == bv("1111111111"));
    REQUIRE(pop[0].fitness() == 2.0);
    REQUIRE(pop.index_consistent());
}

TEST_CASE("acceptance requires the trial to be new in the population") {
    // flat fitness accepts any unique trial at the first mask
    const FunctionProblem flat(3, [](const BitVector&) { return 0.5; });
    NfeCounter counter;
    Evaluator eval(flat, counter);
    RandomSource rng(seed_with_first_draw(3, 0));

    // flipping bit 0 of the receiver gives 011, already present: the
    // singleton trial must be rejected even though fitness ties
    std::vector<Chromosome> members;
    members.emplace_back(bv("111"), 0.5);
    members.emplace_back(bv("011"), 0.5);
    members.emplace_back(bv("000"), 0.5);
    Population pop(std::move(members));

    const Dsm dsm = chain_dsm(3);
    const MixingOutcome outcome = restricted_mixing(pop, 0, dsm, eval, rng);
    if (outcome.accepted_mask) {
        REQUIRE(outcome.accepted_mask->size() >= 2);
        REQUIRE(pop.multiplicity(pop[0].bits()) == 1);
    }
    REQUIRE(pop.index_consistent());
}

TEST_CASE("restricted mixing never lowers the receiver's fitness") {
    const TrapProblem trap(3, 5);
    const FunctionProblem problem(15, [&trap](const BitVector& x) { return trap.evaluate(x); });
    RandomSource source(404);

    for (int round = 0; round < 50; ++round) {
        Population pop = testutil::random_evaluated_population(8, 15, problem, source);
        const Dsm dsm = update_matrix(pop);
        NfeCounter counter;
        Evaluator eval(problem, counter);
        const int receiver = static_cast<int>(source.below(8));
        const double before = pop[receiver].fitness();
        RandomSource rng(source.next_u64());
        const MixingOutcome outcome = restricted_mixing(pop, receiver, dsm, eval, rng);
        REQUIRE(pop[receiver].fitness() >= before);
        REQUIRE(static_cast<int>(counter.count()) == outcome.trials);
        if (outcome.accepted_mask)
            REQUIRE(pop.multiplicity(pop[receiver].bits()) == 1);
        REQUIRE(pop.index_consistent());
    }
}

TEST_CASE("back mixing skips members that already carry the pattern") {
    const FunctionProblem flat(6, [](const BitVector&) { return 1.0; });
    NfeCounter counter;
    Evaluator eval(flat, counter);

    std::vector<Chromosome> members;
    for (int i = 0; i < 4; ++i)
        members.emplace_back(bv("111000"), 1.0);
    Population pop(std::move(members));

    const std::vector<int> mask{0, 1, 2};
    const BackMixingResult result = back_mixing(pop, 0, mask, eval);
    REQUIRE(result.evaluations == 0);
    REQUIRE(counter.count() == 0);
    REQUIRE(result.strict_replacements == 0);
    REQUIRE(result.sidewalk_replacements == 0);
    for (int i = 0; i < pop.size(); ++i)
        REQUIRE(pop[i].bits() == bv("111000"));
}

TEST_CASE("strict improvements replace immediately and discard the tied pool") {
    const FoldedTrapProblem ftrap(2);
    const FunctionProblem problem(12, [&ftrap](const BitVector& x) { return ftrap.evaluate(x); });
    NfeCounter counter;
    Evaluator eval(problem, counter);

    auto with_fitness = [&problem](const std::string& s) {
        return Chromosome(bv(s), problem.evaluate(bv(s)));
    };
    std::vector<Chromosome> members;
    members.push_back(with_fitness("111111111111")); // donor, f = 2
    members.push_back(with_fitness("000000111000")); // f = 1.8; tie under block-0 overwrite
    members.push_back(with_fitness("110000111111")); // f = 1.4; strict improvement to 2
    Population pop(std::move(members));

    const std::vector<int> mask{0, 1, 2, 3, 4, 5};
    const BackMixingResult result = back_mixing(pop, 0, mask, eval);

    REQUIRE(result.evaluations == 2);
    REQUIRE(result.strict_replacements == 1);
    REQUIRE(result.sidewalk_replacements == 0);
    REQUIRE(pop[1].bits() == bv("000000111000")); // tied trial discarded
    REQUIRE(pop[2].bits() == bv("111111111111")); // strictly improved
    REQUIRE(pop.index_consistent());
}

TEST_CASE("on a pure plateau every tied trial is accepted") {
    const FoldedTrapProblem ftrap(1);
    const FunctionProblem problem(6, [&ftrap](const BitVector& x) { return ftrap.evaluate(x); });
    NfeCounter counter;
    Evaluator eval(problem, counter);

    std::vector<Chromosome> members;
    members.emplace_back(bv("111111"), 1.0); // donor
    members.emplace_back(bv("000000"), 1.0); // plateau twin
    members.emplace_back(bv("000000"), 1.0);
    Population pop(std::move(members));

    const std::vector<int> mask{0, 1, 2, 3, 4, 5};
    const BackMixingResult result = back_mixing(pop, 0, mask, eval);

    REQUIRE(result.evaluations == 2);
    REQUIRE(result.strict_replacements == 0);
    REQUIRE(result.sidewalk_replacements == 2);
    REQUIRE(pop[1].bits() == bv("111111"));
    REQUIRE(pop[2].bits() == bv("111111"));
    REQUIRE(pop.index_consistent());
}

TEST_CASE("mixing sequences never lower the population minimum") {
    const TrapProblem trap(2, 5);
    const FunctionProblem problem(10, [&trap](const BitVector& x) { return trap.evaluate(x); });
    RandomSource source(99);

    for (int round = 0; round < 20; ++round) {
        Population pop = testutil::random_evaluated_population(6, 10, problem, source);
        const Dsm dsm = update_matrix(pop);
        NfeCounter counter;
        Evaluator eval(problem, counter);
        RandomSource rng(source.next_u64());

        auto min_fitness = [&pop] {
            double m = pop[0].fitness();
            for (int i = 1; i < pop.size(); ++i)
                m = std::min(m, pop[i].fitness());
            return m;
        };

        double floor = min_fitness();
        for (int step = 0; step < 10; ++step) {
            const int receiver = static_cast<int>(rng.below(6));
            const MixingOutcome outcome = restricted_mixing(pop, receiver, dsm, eval, rng);
            if (outcome.accepted_mask)
                back_mixing(pop, receiver, *outcome.accepted_mask, eval);
            const double now = min_fitness();
            REQUIRE(now >= floor);
            floor = now;
        }
    }
}

TEST_CASE("back mixing spends at most one evaluation per member") {
    const TrapProblem trap(2, 5);
    const FunctionProblem problem(10, [&trap](const BitVector& x) { return trap.evaluate(x); });
    RandomSource source(1234);

    for (int round = 0; round < 20; ++round) {
        Population pop = testutil::random_evaluated_population(7, 10, problem, source);
        NfeCounter counter;
        Evaluator eval(problem, counter);
        std::vector<int> mask = source.permutation(10);
        mask.resize(1 + source.below(9));
        const BackMixingResult result = back_mixing(pop, 0, mask, eval);
        REQUIRE(result.evaluations <= pop.size());
        REQUIRE(static_cast<std::uint64_t>(result.evaluations) == counter.count());
    }
}
