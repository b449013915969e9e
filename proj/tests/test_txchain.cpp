#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wavephy/rng.hpp"
#include "wavephy/txchain.hpp"

using namespace wavephy;

TEST_CASE("frame capacity accounting") {
    CHECK(frame_capacity_bits(mcs_table()[0], 30) == 698);    // 24*30 - 22
    CHECK(frame_capacity_bits(mcs_table()[7], 30) == 6458);   // 216*30 - 22
    CHECK(frame_capacity_bits(mcs_table()[0], 1) == 2);
    CHECK(frame_capacity_bits(mcs_table()[7], 100) == 21578);
}

TEST_CASE("a 30-symbol frame is exactly 2800 samples") {
    std::mt19937_64 rng = make_engine(71);
    const auto& mode = mcs_table()[0];
    const BitSeq payload = random_bits(frame_capacity_bits(mode, 30), rng);
    const TxFrame frame = transmit_frame(payload, mode, 30);
    CHECK(frame.preamble.size() == 320);
    CHECK(frame.data_symbols.size() == 30);
    CHECK(frame_samples(frame).size() == 2800);
    CHECK(frame.payload_bits == payload.size());
}

TEST_CASE("an empty payload still makes a valid minimal frame") {
    const TxFrame frame = transmit_frame({}, mcs_table()[0], 1);
    CHECK(frame_samples(frame).size() == 480);
    CHECK(frame.payload_bits == 0);
}

TEST_CASE("payload beyond capacity is rejected") {
    const auto& mode = mcs_table()[2];
    const std::size_t cap = frame_capacity_bits(mode, 5);
    CHECK_THROWS_AS((void)transmit_frame(BitSeq(cap + 1, 1), mode, 5), std::invalid_argument);
    CHECK_NOTHROW((void)transmit_frame(BitSeq(cap, 1), mode, 5));
}

TEST_CASE("every emitted symbol satisfies the cyclic-prefix invariant") {
    std::mt19937_64 rng = make_engine(73);
    for (const auto& mode : mcs_table()) {
        const BitSeq payload = random_bits(frame_capacity_bits(mode, 3), rng);
        const TxFrame frame = transmit_frame(payload, mode, 3);
        for (std::size_t i = 0; i < 16; ++i)
            REQUIRE(frame.signal_symbol.samples[i] == frame.signal_symbol.samples[64 + i]);
        for (const OfdmSymbol& s : frame.data_symbols)
            for (std::size_t i = 0; i < 16; ++i) REQUIRE(s.samples[i] == s.samples[64 + i]);
    }
}

TEST_CASE("frame layout: preamble, header, data in order") {
    std::mt19937_64 rng = make_engine(79);
    const auto& mode = mcs_table()[1];
    const BitSeq payload = random_bits(frame_capacity_bits(mode, 2), rng);
    const TxFrame frame = transmit_frame(payload, mode, 2);
    const auto all = frame_samples(frame);
    for (std::size_t i = 0; i < 320; ++i) REQUIRE(all[i] == frame.preamble[i]);
    for (std::size_t i = 0; i < 80; ++i) REQUIRE(all[320 + i] == frame.signal_symbol.samples[i]);
    for (std::size_t i = 0; i < 80; ++i) {
        REQUIRE(all[400 + i] == frame.data_symbols[0].samples[i]);
        REQUIRE(all[480 + i] == frame.data_symbols[1].samples[i]);
    }
}

TEST_CASE("transmission is deterministic in the payload and seed") {
    std::mt19937_64 rng = make_engine(83);
    const auto& mode = mcs_table()[4];
    const BitSeq payload = random_bits(frame_capacity_bits(mode, 4), rng);
    const auto a = frame_samples(transmit_frame(payload, mode, 4));
    const auto b = frame_samples(transmit_frame(payload, mode, 4));
    REQUIRE(a == b);
    // a different scrambling seed must move the data samples
    const auto c = frame_samples(transmit_frame(payload, mode, 4, 0x35));
    bool differs = false;
    for (std::size_t i = 400; i < c.size(); ++i)
        if (a[i] != c[i]) differs = true;
    CHECK(differs);
}

TEST_CASE("constant-modulus modes give every data symbol the same body energy") {
    std::mt19937_64 rng = make_engine(89);
    for (const auto& mode : {mcs_table()[0], mcs_table()[2]}) {  // BPSK, QPSK
        const BitSeq payload = random_bits(frame_capacity_bits(mode, 20), rng);
        const TxFrame frame = transmit_frame(payload, mode, 20);
        for (const OfdmSymbol& s : frame.data_symbols) {
            double energy = 0.0;
            for (std::size_t i = 16; i < 80; ++i) energy += std::norm(s.samples[i]);
            // 48 unit data tones + 4 unit pilots through the 1/64 inverse
            REQUIRE(energy == doctest::Approx(52.0 / 64.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("QAM modes keep the average symbol power on target statistically") {
    std::mt19937_64 rng = make_engine(97);
    const auto& mode = mcs_table()[6];  // 64QAM 2/3
    std::vector<double> energies;
    for (int f = 0; f < 40; ++f) {
        const BitSeq payload = random_bits(frame_capacity_bits(mode, 30), rng);
        const TxFrame frame = transmit_frame(payload, mode, 30);
        for (const OfdmSymbol& s : frame.data_symbols) {
            double e = 0.0;
            for (std::size_t i = 16; i < 80; ++i) e += std::norm(s.samples[i]);
            energies.push_back(e);
        }
    }
    // 1200 symbols: the batch mean must sit within 3 standard errors of 52/64
    const double n = static_cast<double>(energies.size());
    double mean = 0.0;
    for (double e : energies) mean += e;
    mean /= n;
    double var = 0.0;
    for (double e : energies) var += (e - mean) * (e - mean);
    var /= (n - 1.0);
    const double stderr_mean = std::sqrt(var / n);
    REQUIRE(energies.size() >= 1000);
    CHECK(std::abs(mean - 52.0 / 64.0) <= 3.0 * stderr_mean);
}

TEST_CASE("data symbols rotate through the pilot polarity sequence") {
    // Two frames differing only in payload keep identical pilot bins; the
    // header symbol uses index 0 and data symbol n uses index n+1.
    std::mt19937_64 rng = make_engine(101);
    const auto& mode = mcs_table()[0];
    const BitSeq payload = random_bits(frame_capacity_bits(mode, 6), rng);
    const TxFrame frame = transmit_frame(payload, mode, 6);
    const PhyParams& p = phy_params();
    const auto header_spec = ofdm_demodulate(frame.signal_symbol.body());
    CHECK(std::abs(header_spec[bin_slot(-21)] - cplx(pilot_polarity(0), 0)) < 1e-9);
    for (std::size_t n = 0; n < 6; ++n) {
        const auto spec = ofdm_demodulate(frame.data_symbols[n].body());
        const double pol = pilot_polarity(n + 1);
        CHECK(std::abs(spec[bin_slot(-21)] - cplx(pol, 0)) < 1e-9);
        CHECK(std::abs(spec[bin_slot(-7)] - cplx(pol, 0)) < 1e-9);
        CHECK(std::abs(spec[bin_slot(7)] - cplx(pol, 0)) < 1e-9);
        CHECK(std::abs(spec[bin_slot(21)] + cplx(pol, 0)) < 1e-9);
        (void)p;
    }
}
