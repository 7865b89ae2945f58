#include "dsmix/mixing.hpp"

#include <cassert>

namespace dsmix {

bool complement_exists(const Population& pop, const BitVector& receiver,
                       std::span<const int> mask) {
    for (int m = 0; m < pop.size(); ++m) {
        const BitVector& bits = pop[m].bits();
        bool all_differ = true;
        for (int pos : mask) {
            if (bits.get(pos) == receiver.get(pos)) {
                all_differ = false;
                break;
            }
        }
        if (all_differ)
            return true;
    }
    return false;
}

MixingOutcome restricted_mixing(Population& pop, int receiver_index, const Dsm& dsm,
                                Evaluator& eval, RandomSource& rng) {
    MixingOutcome outcome;
    const int ell = dsm.size();
    const BitVector receiver = pop[receiver_index].bits();
    const double receiver_fitness = pop[receiver_index].fitness();

    const int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(ell)));

    // Members still carrying the receiver's complement on every chain
    // vertex so far; the chain stops growing once none survive.
    std::vector<int> survivors;
    survivors.reserve(static_cast<std::size_t>(pop.size()));
    for (int m = 0; m < pop.size(); ++m)
        if (pop[m].bits().get(start) != receiver.get(start))
            survivors.push_back(m);
    if (survivors.empty())
        return outcome;

    IlsGrower grower(dsm, start);
    BitVector trial = receiver;
    trial.flip(start);

    while (true) {
        if (eval.should_stop())
            return outcome;
        const double f = eval.evaluate(trial);
        ++outcome.trials;
        if (f >= receiver_fitness && !pop.contains(trial)) {
            outcome.accepted_mask.emplace(grower.chain().begin(), grower.chain().end());
            outcome.improved = f > receiver_fitness;
            pop.replace(receiver_index, Chromosome(trial, f));
            return outcome;
        }

        if (grower.full())
            return outcome;
        const int v = grower.grow();
        std::size_t keep = 0;
        for (int m : survivors)
            if (pop[m].bits().get(v) != receiver.get(v))
                survivors[keep++] = m;
        survivors.resize(keep);
        if (survivors.empty())
            return outcome;
        trial.flip(v);
    }
}

BackMixingResult back_mixing(Population& pop, int donor_index, std::span<const int> mask,
                             Evaluator& eval) {
    assert(!mask.empty());
    BackMixingResult result;

    // Fixed copy of the donor's pattern; the donor member itself is never
    // replaced during the pass (its own trial is a no-op and is skipped).
    std::vector<std::pair<int, bool>> pattern;
    pattern.reserve(mask.size());
    const BitVector& donor = pop[donor_index].bits();
    for (int pos : mask)
        pattern.emplace_back(pos, donor.get(pos));

    bool improved = false;
    std::vector<std::pair<int, Chromosome>> sidewalks;

    for (int j = 0; j < pop.size(); ++j) {
        const Chromosome& member = pop[j];
        bool identical = true;
        for (const auto& [pos, bit] : pattern) {
            if (member.get(pos) != bit) {
                identical = false;
                break;
            }
        }
        if (identical)
            continue;

        if (eval.should_stop())
            return result;

        BitVector trial = member.bits();
        for (const auto& [pos, bit] : pattern)
            trial.set(pos, bit);
        const double f = eval.evaluate(trial);
        ++result.evaluations;

        if (f > member.fitness()) {
            pop.replace(j, Chromosome(std::move(trial), f));
            improved = true;
            ++result.strict_replacements;
        } else if (f == member.fitness()) {
            sidewalks.emplace_back(j, Chromosome(std::move(trial), f));
        }
    }

    if (!improved) {
        for (auto& [j, c] : sidewalks) {
            pop.replace(j, std::move(c));
            ++result.sidewalk_replacements;
        }
    }
    return result;
}

} // namespace dsmix
