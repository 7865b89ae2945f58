#include "dsmix/bitvector.hpp"

#include <bit>
#include <stdexcept>

#include "dsmix/random.hpp"

namespace dsmix {

BitVector::BitVector(int length)
    : length_(length), words_(static_cast<std::size_t>((length + 63) / 64), 0) {}

int BitVector::count_ones() const {
    int n = 0;
    for (std::uint64_t w : words_)
        n += std::popcount(w);
    return n;
}

int BitVector::count_ones(int begin, int end) const {
    int n = 0;
    int i = begin;
    while (i < end && (i & 63) != 0) {
        n += get(i);
        ++i;
    }
    while (end - i >= 64) {
        n += std::popcount(words_[static_cast<std::size_t>(i) >> 6]);
        i += 64;
    }
    while (i < end) {
        n += get(i);
        ++i;
    }
    return n;
}

std::size_t BitVector::hash() const {
    // FNV-1a over the packed words plus the length.
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(length_));
    for (std::uint64_t w : words_)
        mix(w);
    return static_cast<std::size_t>(h);
}

std::string BitVector::to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i)
        if (get(i))
            s[static_cast<std::size_t>(i)] = '1';
    return s;
}

BitVector BitVector::from_string(const std::string& s) {
    BitVector b(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            b.set(static_cast<int>(i), true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string may contain only 0 and 1");
    }
    return b;
}

void BitVector::set_word(int w, std::uint64_t value) {
    const int tail = length_ - 64 * w;
    if (tail < 64)
        value &= (std::uint64_t{1} << tail) - 1;
    words_[static_cast<std::size_t>(w)] = value;
}

BitVector random_bits(int length, RandomSource& rng) {
    BitVector b(length);
    for (int w = 0; w * 64 < length; ++w)
        b.set_word(w, rng.next_u64());
    return b;
}

} // namespace dsmix
