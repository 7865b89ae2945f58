#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dsmix {

class RandomSource;

/// Fixed-length bit string packed into 64-bit words. Unused high bits of
/// the last word are kept zero, so word-wise equality and popcounts are
/// valid without masking.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int length);

    int size() const { return length_; }
    bool empty() const { return length_ == 0; }

    bool get(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void set(int i, bool value) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        std::uint64_t& w = words_[static_cast<std::size_t>(i) >> 6];
        if (value)
            w |= bit;
        else
            w &= ~bit;
    }

    void flip(int i) { words_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63); }

    int count_ones() const;
    /// Ones in the half-open index range [begin, end).
    int count_ones(int begin, int end) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Overwrites word w; bits beyond the length are cleared.
    void set_word(int w, std::uint64_t value);

    bool operator==(const BitVector& other) const = default;

    std::size_t hash() const;

    std::string to_string() const;
    static BitVector from_string(const std::string& s);

private:
    int length_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& b) const { return b.hash(); }
};

BitVector random_bits(int length, RandomSource& rng);

} // namespace dsmix
