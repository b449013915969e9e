#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wavephy/bits.hpp"
#include "wavephy/rng.hpp"
#include "wavephy/scrambler.hpp"

using namespace wavephy;

TEST_CASE("free-run prefix from the all-ones register (golden)") {
    // First 16 feedback bits of the x^7+x^4+1 register seeded 1111111,
    // worked by hand one shift at a time.
    const BitSeq golden = {0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1, 0};
    const BitSeq out = scramble(BitSeq(16, 0), 0x7f);
    CHECK(out == golden);
}

TEST_CASE("free-run period is exactly 127") {
    const BitSeq out = scramble(BitSeq(254, 0), 0x7f);
    for (std::size_t i = 0; i < 127; ++i) CHECK(out[i] == out[i + 127]);
    // 127 is prime, so the only shorter period would be a constant output
    bool constant = true;
    for (std::size_t i = 1; i < 127; ++i)
        if (out[i] != out[0]) constant = false;
    CHECK_FALSE(constant);
}

TEST_CASE("free-run sequence is balanced within one bit per period") {
    const BitSeq out = scramble(BitSeq(127, 0), 0x7f);
    int ones = 0;
    for (auto b : out) ones += b;
    CHECK(ones == 64);  // maximal-length property: 64 ones, 63 zeros
}

TEST_CASE("scrambling twice with the same seed is the identity") {
    std::mt19937_64 rng = make_engine(42);
    for (std::uint8_t seed : {std::uint8_t{0x7f}, std::uint8_t{0x01}, std::uint8_t{0x5a}}) {
        const BitSeq x = random_bits(301, rng);
        CHECK(descramble(scramble(x, seed), seed) == x);
    }
}

TEST_CASE("every nonzero seed keeps the involution property") {
    std::mt19937_64 rng = make_engine(7);
    const BitSeq x = random_bits(200, rng);
    for (int seed = 1; seed < 128; ++seed) {
        const auto s = static_cast<std::uint8_t>(seed);
        REQUIRE(scramble(scramble(x, s), s) == x);
    }
}

TEST_CASE("output length always equals input length") {
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{127}, std::size_t{1000}})
        CHECK(scramble(BitSeq(n, 1), 0x7f).size() == n);
}

TEST_CASE("the all-zero register is rejected") {
    CHECK_THROWS_AS(Scrambler(0x00), std::invalid_argument);
    CHECK_THROWS_AS((void)scramble(BitSeq(8, 0), 0x00), std::invalid_argument);
    // seeds are 7-bit: 0x80 masks down to zero and must also be rejected
    CHECK_THROWS_AS(Scrambler(0x80), std::invalid_argument);
}
