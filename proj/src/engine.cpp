#include "dsmix/engine.hpp"

#include <cmath>
#include <stdexcept>

#include "dsmix/dsm.hpp"
#include "dsmix/local_search.hpp"
#include "dsmix/mixing.hpp"
#include "dsmix/population.hpp"
#include "dsmix/random.hpp"
#include "dsmix/selection.hpp"

namespace dsmix {

int default_mixing_rounds(int ell) {
    const int r = static_cast<int>(std::lround(ell / 50.0));
    return r < 1 ? 1 : r;
}

namespace {

double population_best(const Population& pop) {
    double best = pop[0].fitness();
    for (int i = 1; i < pop.size(); ++i)
        best = std::max(best, pop[i].fitness());
    return best;
}

} // namespace

RunResult run(const ProblemInstance& problem, const EngineConfig& cfg) {
    if (cfg.population_size < 2)
        throw std::invalid_argument("run: population_size must be at least 2");
    if (cfg.selection_pressure < 2)
        throw std::invalid_argument("run: selection_pressure must be at least 2");
    if (cfg.mixing_rounds < 0)
        throw std::invalid_argument("run: mixing_rounds must be non-negative");
    if (cfg.dsm_interval < 1)
        throw std::invalid_argument("run: dsm_interval must be at least 1");
    if (!problem.optimum() && cfg.max_nfe == 0)
        throw std::invalid_argument("run: need a known optimum or a finite NFE budget");

    const int ell = problem.size();
    const int rounds = cfg.mixing_rounds > 0 ? cfg.mixing_rounds : default_mixing_rounds(ell);

    RandomSource rng(cfg.seed);
    NfeCounter counter;
    Evaluator eval(problem, counter, cfg.max_nfe);
    RunResult result;

    std::vector<Chromosome> members;
    members.reserve(static_cast<std::size_t>(cfg.population_size));
    for (int i = 0; i < cfg.population_size; ++i) {
        Chromosome c = Chromosome::random(ell, rng);
        if (!eval.should_stop())
            eval.ensure_evaluated(c);
        members.push_back(std::move(c));
    }
    Population pop(std::move(members));

    if (!eval.should_stop())
        local_search(pop, eval, rng);

    Dsm dsm;
    double best_seen = eval.should_stop() ? eval.best_fitness() : population_best(pop);

    // Generations in a row without a single accepted change. Any reachable
    // move is found with probability at least 1/ell per mixing call, so a
    // streak this long means the remaining search space is exhausted.
    constexpr int kStagnationLimit = 50;
    int quiet_streak = 0;

    while (!eval.should_stop()) {
        // A fully converged population is an absorbing state: no mask has
        // a complementary pattern left, so no operator can change anything.
        if (pop.distinct_count() == 1 || quiet_streak >= kStagnationLimit)
            break;

        if (result.generations % static_cast<std::uint64_t>(cfg.dsm_interval) == 0) {
            Population selected = tournament_selection(pop, cfg.selection_pressure, rng);
            dsm = update_matrix(selected);
            ++result.dsm_rebuilds;
        }

        int changes = 0;
        for (int k = 0; k < rounds && !eval.should_stop(); ++k) {
            for (int idx : rng.permutation(pop.size())) {
                if (eval.should_stop())
                    break;
                MixingOutcome outcome = restricted_mixing(pop, idx, dsm, eval, rng);
                if (outcome.accepted_mask) {
                    ++changes;
                    result.diagnostics.rm_unique &= pop.multiplicity(pop[idx].bits()) == 1;
                    if (!eval.should_stop()) {
                        BackMixingResult bm = back_mixing(pop, idx, *outcome.accepted_mask, eval);
                        changes += bm.strict_replacements + bm.sidewalk_replacements;
                        result.diagnostics.bm_phases &=
                            !(bm.sidewalk_replacements > 0 && bm.strict_replacements > 0);
                    }
                }
            }
        }
        quiet_streak = changes == 0 ? quiet_streak + 1 : 0;

        ++result.generations;
        const double now_best = population_best(pop);
        result.diagnostics.best_monotone &= now_best >= best_seen;
        best_seen = std::max(best_seen, now_best);
    }

    result.success = eval.hit_optimum();
    result.nfe = result.success ? eval.nfe_at_hit() : counter.count();
    result.best_fitness = eval.best_fitness();
    result.best = eval.best();
    result.total_evaluations = counter.count();
    return result;
}

} // namespace dsmix
