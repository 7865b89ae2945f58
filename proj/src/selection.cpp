#include "dsmix/selection.hpp"

#include <stdexcept>

namespace dsmix {

Population tournament_selection(const Population& pop, int pressure, RandomSource& rng) {
    if (pop.empty())
        throw std::invalid_argument("tournament_selection: empty population");
    if (pressure < 2)
        throw std::invalid_argument("tournament_selection: pressure must be at least 2");

    const int n = pop.size();
    std::vector<Chromosome> winners;
    winners.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        int best = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        for (int c = 1; c < pressure; ++c) {
            const int challenger = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (pop[challenger].fitness() > pop[best].fitness())
                best = challenger;
        }
        winners.push_back(pop[best]);
    }
    return Population(std::move(winners));
}

} // namespace dsmix
