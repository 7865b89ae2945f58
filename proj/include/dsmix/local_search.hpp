#pragma once

#include "dsmix/evaluation.hpp"
#include "dsmix/population.hpp"
#include "dsmix/random.hpp"

namespace dsmix {

/// First-improvement bit-flip hill climbing: visit positions in a fresh
/// random order each pass, keep a flip on strict improvement, and stop
/// after a full pass without change. The result is a 1-flip local optimum
/// unless the evaluator stopped the climb early.
Chromosome hill_climb(Chromosome c, Evaluator& eval, RandomSource& rng);

/// Applies hill_climb to every member in order.
void local_search(Population& pop, Evaluator& eval, RandomSource& rng);

} // namespace dsmix
