#pragma once

#include "dsmix/population.hpp"
#include "dsmix/random.hpp"

namespace dsmix {

/// Tournament selection with replacement: |P| independent tournaments,
/// each drawing `pressure` members uniformly; the best of each tournament
/// is copied out, ties going to the first-drawn candidate. The returned
/// population feeds model building only.
Population tournament_selection(const Population& pop, int pressure, RandomSource& rng);

} // namespace dsmix
