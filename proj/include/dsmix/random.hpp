#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace dsmix {

/// Seeded PRNG with platform-independent bounded draws. The engine is
/// std::mt19937_64 (its raw output sequence is fixed by the standard);
/// bounded integers use rejection sampling instead of the
/// implementation-defined std::uniform_int_distribution, so a seed yields
/// the same stream everywhere.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        std::uint64_t r;
        do {
            r = engine_();
        } while (r < threshold);
        return r % n;
    }

    /// Uniform in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform_real01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool coin() { return engine_() >> 63; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        shuffle(p);
        return p;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace dsmix
