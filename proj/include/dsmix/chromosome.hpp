#pragma once

#include <cassert>

#include "dsmix/bitvector.hpp"

namespace dsmix {

/// Bit string with a cached fitness value. Mutating any bit invalidates
/// the cache; the cache can only be filled with an evaluation of the
/// current bits, so a stale value is never read back.
class Chromosome {
public:
    Chromosome() = default;
    explicit Chromosome(BitVector bits) : bits_(std::move(bits)) {}
    Chromosome(BitVector bits, double fitness)
        : bits_(std::move(bits)), fitness_(fitness), evaluated_(true) {}

    static Chromosome random(int length, RandomSource& rng) {
        return Chromosome(random_bits(length, rng));
    }

    const BitVector& bits() const { return bits_; }
    int size() const { return bits_.size(); }
    bool get(int i) const { return bits_.get(i); }

    void flip(int i) {
        bits_.flip(i);
        evaluated_ = false;
    }

    void set(int i, bool value) {
        bits_.set(i, value);
        evaluated_ = false;
    }

    bool evaluated() const { return evaluated_; }

    double fitness() const {
        assert(evaluated_);
        return fitness_;
    }

    void set_fitness(double f) {
        fitness_ = f;
        evaluated_ = true;
    }

private:
    BitVector bits_;
    double fitness_ = 0.0;
    bool evaluated_ = false;
};

} // namespace dsmix
