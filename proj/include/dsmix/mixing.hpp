#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dsmix/dsm.hpp"
#include "dsmix/evaluation.hpp"
#include "dsmix/ils.hpp"
#include "dsmix/population.hpp"
#include "dsmix/random.hpp"

namespace dsmix {

struct MixingOutcome {
    /// Present exactly when a trial was accepted and the receiver changed.
    std::optional<std::vector<int>> accepted_mask;
    /// Accepted trial was strictly better (as opposed to an equal-fitness move).
    bool improved = false;
    /// Trial evaluations spent in the call.
    int trials = 0;
};

/// True when some member carries the bitwise complement of `receiver` on
/// every position of `mask` (a linear scan; the building-block supply test).
bool complement_exists(const Population& pop, const BitVector& receiver,
                       std::span<const int> mask);

/// Flips the receiver's bits under successively larger chain masks grown
/// from a random start vertex. A mask qualifies for a trial only while
/// the receiver's complementary pattern under it survives somewhere in
/// the population; trials run in ascending mask size and the first one
/// that does not lose fitness and is absent from the population is kept,
/// ending the call.
MixingOutcome restricted_mixing(Population& pop, int receiver_index, const Dsm& dsm,
                                Evaluator& eval, RandomSource& rng);

struct BackMixingResult {
    int evaluations = 0;
    int strict_replacements = 0;
    int sidewalk_replacements = 0;
};

/// Broadcasts the donor's pattern under `mask` to every member. Members
/// already matching the pattern are skipped without evaluation. Strict
/// improvements are applied immediately; equal-fitness trials are held
/// back and applied only if the whole pass produced no strict
/// improvement.
BackMixingResult back_mixing(Population& pop, int donor_index, std::span<const int> mask,
                             Evaluator& eval);

} // namespace dsmix
