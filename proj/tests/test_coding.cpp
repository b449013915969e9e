#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wavephy/bits.hpp"
#include "wavephy/convolutional.hpp"
#include "wavephy/rng.hpp"

using namespace wavephy;

namespace {

BitSeq with_tail(BitSeq msg) {
    msg.insert(msg.end(), 6, 0);
    return msg;
}

}  // namespace

TEST_CASE("encoder impulse response (golden, generators 133/171 octal)") {
    // Worked by hand: a single 1 through the 7-cell register, output pair
    // (A, B) per step.
    const BitSeq impulse = {1, 0, 0, 0, 0, 0, 0};
    const BitSeq golden = {1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 1, 0, 1, 1};
    CHECK(conv_encode(impulse) == golden);
}

TEST_CASE("encoder basics") {
    CHECK(conv_encode(BitSeq(40, 0)) == BitSeq(80, 0));  // linear code, zero state
    CHECK(conv_encode(BitSeq(24, 1)).size() == 48);      // length contract
    CHECK(conv_encode(BitSeq{}).empty());
}

TEST_CASE("encoder is linear over GF(2)") {
    std::mt19937_64 rng = make_engine(11);
    for (int trial = 0; trial < 20; ++trial) {
        const BitSeq x = random_bits(63, rng);
        const BitSeq y = random_bits(63, rng);
        BitSeq x_xor_y(63);
        for (std::size_t i = 0; i < 63; ++i) x_xor_y[i] = x[i] ^ y[i];
        const BitSeq ex = conv_encode(x), ey = conv_encode(y);
        BitSeq ex_xor_ey(ex.size());
        for (std::size_t i = 0; i < ex.size(); ++i) ex_xor_ey[i] = ex[i] ^ ey[i];
        REQUIRE(conv_encode(x_xor_y) == ex_xor_ey);
    }
}

TEST_CASE("puncturing patterns") {
    std::mt19937_64 rng = make_engine(3);

    SUBCASE("rate 1/2 is the identity") {
        const BitSeq x = random_bits(60, rng);
        CHECK(puncture(x, CodeRate::half) == x);
    }
    SUBCASE("rate 2/3 keeps (a,b,c) of every (a,b,c,d)") {
        const BitSeq x = random_bits(4 * 25, rng);
        const BitSeq y = puncture(x, CodeRate::two_thirds);
        REQUIRE(y.size() == 3 * 25);
        for (std::size_t g = 0; g < 25; ++g) {
            CHECK(y[3 * g + 0] == x[4 * g + 0]);
            CHECK(y[3 * g + 1] == x[4 * g + 1]);
            CHECK(y[3 * g + 2] == x[4 * g + 2]);
        }
    }
    SUBCASE("rate 3/4 keeps (a,b,d,f) of every (a,b,c,d,e,f)") {
        const BitSeq x = random_bits(6 * 25, rng);
        const BitSeq y = puncture(x, CodeRate::three_quarters);
        REQUIRE(y.size() == 4 * 25);
        for (std::size_t g = 0; g < 25; ++g) {
            CHECK(y[4 * g + 0] == x[6 * g + 0]);
            CHECK(y[4 * g + 1] == x[6 * g + 1]);
            CHECK(y[4 * g + 2] == x[6 * g + 3]);
            CHECK(y[4 * g + 3] == x[6 * g + 5]);
        }
    }
    SUBCASE("partial periods are rejected") {
        CHECK_THROWS_AS((void)puncture(BitSeq(6, 0), CodeRate::two_thirds), std::invalid_argument);
        CHECK_THROWS_AS((void)puncture(BitSeq(8, 0), CodeRate::three_quarters), std::invalid_argument);
    }
}

TEST_CASE("depuncturing restores length with erasures at dropped slots") {
    SUBCASE("rate 1/2: no erasures") {
        const BitSeq x = {1, 0, 0, 1};
        const TernarySeq y = depuncture(x, CodeRate::half);
        REQUIRE(y.size() == 4);
        CHECK(y == TernarySeq{Ternary::one, Ternary::zero, Ternary::zero, Ternary::one});
    }
    SUBCASE("rate 2/3: (a,b,c) -> (a,b,c,ERASED)") {
        const TernarySeq y = depuncture(BitSeq{1, 0, 1}, CodeRate::two_thirds);
        CHECK(y == TernarySeq{Ternary::one, Ternary::zero, Ternary::one, Ternary::erased});
    }
    SUBCASE("rate 3/4: (a,b,d,f) -> (a,b,ERASED,d,ERASED,f)") {
        const TernarySeq y = depuncture(BitSeq{1, 1, 0, 1}, CodeRate::three_quarters);
        CHECK(y == TernarySeq{Ternary::one, Ternary::one, Ternary::erased, Ternary::zero,
                              Ternary::erased, Ternary::one});
    }
    SUBCASE("composition: depuncture(puncture(x)) keeps kept bits in place") {
        std::mt19937_64 rng = make_engine(5);
        for (CodeRate r : {CodeRate::two_thirds, CodeRate::three_quarters}) {
            const BitSeq x = random_bits(12 * 10, rng);
            const TernarySeq y = depuncture(puncture(x, r), r);
            REQUIRE(y.size() == x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                if (y[i] != Ternary::erased) REQUIRE(y[i] == to_ternary(x[i]));
        }
    }
    SUBCASE("bad lengths are rejected") {
        CHECK_THROWS_AS((void)depuncture(BitSeq(4, 0), CodeRate::two_thirds), std::invalid_argument);
        CHECK_THROWS_AS((void)depuncture(BitSeq(6, 0), CodeRate::three_quarters), std::invalid_argument);
    }
}

TEST_CASE("viterbi inverts the encoder on clean terminated streams") {
    std::mt19937_64 rng = make_engine(17);
    SUBCASE("short message") {
        const BitSeq msg = with_tail(random_bits(100, rng));
        CHECK(viterbi_decode(to_ternary_seq(conv_encode(msg))) == msg);
    }
    SUBCASE("10^4 bits") {
        const BitSeq msg = with_tail(random_bits(10000, rng));
        CHECK(viterbi_decode(to_ternary_seq(conv_encode(msg))) == msg);
    }
}

TEST_CASE("single bit flips never defeat the decoder (free distance 10)") {
    std::mt19937_64 rng = make_engine(23);
    const BitSeq msg = with_tail(random_bits(100, rng));
    const BitSeq coded = conv_encode(msg);
    for (std::size_t flip = 0; flip < coded.size(); ++flip) {
        BitSeq corrupted = coded;
        corrupted[flip] ^= 1;
        REQUIRE(viterbi_decode(to_ternary_seq(corrupted)) == msg);
    }
}

TEST_CASE("punctured round trips decode cleanly") {
    std::mt19937_64 rng = make_engine(29);
    SUBCASE("rate 2/3") {
        const BitSeq msg = with_tail(random_bits(100, rng));  // 106 bits, 212 coded
        const TernarySeq soft = depuncture(puncture(conv_encode(msg), CodeRate::two_thirds),
                                           CodeRate::two_thirds);
        CHECK(viterbi_decode(soft) == msg);
    }
    SUBCASE("rate 3/4") {
        const BitSeq msg = with_tail(random_bits(99, rng));  // 105 bits, 210 coded
        const TernarySeq soft = depuncture(puncture(conv_encode(msg), CodeRate::three_quarters),
                                           CodeRate::three_quarters);
        CHECK(viterbi_decode(soft) == msg);
    }
}

TEST_CASE("random erasures are neutral, not biased") {
    std::mt19937_64 rng = make_engine(31);
    const BitSeq msg = with_tail(random_bits(200, rng));
    TernarySeq soft = to_ternary_seq(conv_encode(msg));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (auto& t : soft)
        if (uni(rng) < 0.2) t = Ternary::erased;
    CHECK(viterbi_decode(soft) == msg);
}

TEST_CASE("best-state traceback decodes unterminated streams") {
    std::mt19937_64 rng = make_engine(37);
    const BitSeq msg = random_bits(200, rng);  // no tail
    CHECK(viterbi_decode(to_ternary_seq(conv_encode(msg)), ViterbiTermination::best_state) == msg);
}

TEST_CASE("odd-length streams are rejected") {
    CHECK_THROWS_AS((void)viterbi_decode(TernarySeq(7, Ternary::zero)), std::invalid_argument);
}
