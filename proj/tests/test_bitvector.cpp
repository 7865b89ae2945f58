#include <catch2/catch_amalgamated.hpp>

#include "dsmix/bitvector.hpp"
#include "dsmix/random.hpp"

using dsmix::BitVector;
using dsmix::RandomSource;

TEST_CASE("bit access and flips") {
    BitVector b(70);
    REQUIRE(b.size() == 70);
    REQUIRE(b.count_ones() == 0);

    b.set(0, true);
    b.set(69, true);
    b.flip(33);
    REQUIRE(b.get(0));
    REQUIRE(b.get(33));
    REQUIRE(b.get(69));
    REQUIRE(b.count_ones() == 3);

    b.flip(33);
    REQUIRE_FALSE(b.get(33));
    REQUIRE(b.count_ones() == 2);
}

TEST_CASE("range popcount matches a bit loop") {
    RandomSource rng(11);
    const BitVector b = dsmix::random_bits(130, rng);
    for (auto [lo, hi] : {std::pair{0, 130}, {0, 64}, {64, 130}, {5, 97}, {63, 65}, {40, 40}}) {
        int expected = 0;
        for (int i = lo; i < hi; ++i)
            expected += b.get(i);
        REQUIRE(b.count_ones(lo, hi) == expected);
    }
}

TEST_CASE("string round trip and equality by content") {
    const std::string s = "10110001110";
    const BitVector b = BitVector::from_string(s);
    REQUIRE(b.to_string() == s);
    REQUIRE(b == BitVector::from_string(s));
    REQUIRE_FALSE(b == BitVector::from_string("10110001111"));
    REQUIRE_THROWS_AS(BitVector::from_string("10x"), std::invalid_argument);
}

TEST_CASE("random bits keep the tail clear") {
    RandomSource rng(3);
    for (int len : {1, 63, 64, 65, 100}) {
        const BitVector b = dsmix::random_bits(len, rng);
        int ones = 0;
        for (int i = 0; i < len; ++i)
            ones += b.get(i);
        REQUIRE(ones == b.count_ones());
    }
}
