#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wavephy/numerology.hpp"

using namespace wavephy;

TEST_CASE("mode table: 8 modes in ascending data-rate order") {
    const auto& table = mcs_table();
    REQUIRE(table.size() == 8);
    const double expected_mbps[8] = {3, 4.5, 6, 9, 12, 18, 24, 27};
    const int expected_dbps[8] = {24, 36, 48, 72, 96, 144, 192, 216};
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(data_rate(table[i]) == doctest::Approx(expected_mbps[i] * 1e6).epsilon(1e-12));
        CHECK(table[i].n_dbps == expected_dbps[i]);
        CHECK(table[i].n_cbps == 48 * table[i].n_bpsc);
        CHECK(table[i].n_bpsc == bits_per_subcarrier(table[i].modulation));
    }
}

TEST_CASE("mode table: coded bits per symbol follow the code rate") {
    for (const auto& m : mcs_table())
        CHECK(m.n_dbps * code_rate_den(m.code_rate) == m.n_cbps * code_rate_num(m.code_rate));
}

TEST_CASE("mode lookup by name") {
    CHECK(mode_from_name("bpsk12") == mcs_table()[0]);
    CHECK(mode_from_name("qpsk34") == mcs_table()[3]);
    CHECK(mode_from_name("64qam34") == mcs_table()[7]);
    CHECK_THROWS_AS((void)mode_from_name("qam256"), std::invalid_argument);
    for (const auto& m : mcs_table()) CHECK(mode_from_name(m.name) == m);
}

TEST_CASE("fixed numerology") {
    const PhyParams& p = phy_params();
    CHECK(p.fft_size == 64);
    CHECK(p.cp_length == 16);
    CHECK(p.sample_rate == 1.0e7);
    CHECK(p.subcarrier_spacing == doctest::Approx(156250.0).epsilon(1e-15));
    // the 8 us symbol is exactly 80 samples at 10 Msample/s
    CHECK(p.symbol_duration * p.sample_rate == 80.0);
    CHECK(p.gi_duration * p.sample_rate == 16.0);
    CHECK(p.carrier_frequency == 5.9e9);
}

TEST_CASE("subcarrier layout: 48 data + 4 pilots, DC and guards empty") {
    const PhyParams& p = phy_params();
    std::set<int> seen;
    for (int k : p.data_bins) {
        CHECK(k != 0);
        CHECK(k >= -26);
        CHECK(k <= 26);
        seen.insert(k);
    }
    CHECK(seen.size() == 48);  // all distinct
    for (int k : p.pilot_bins) {
        CHECK(seen.count(k) == 0);  // pilots are not data bins
        seen.insert(k);
    }
    CHECK(seen.size() == 52);
    CHECK(p.pilot_bins == std::array<int, 4>{{-21, -7, 7, 21}});
    // ascending order
    for (std::size_t i = 1; i < p.data_bins.size(); ++i)
        CHECK(p.data_bins[i] > p.data_bins[i - 1]);
}

TEST_CASE("frame sample counts") {
    CHECK(frame_sample_count(0) == 400);   // preamble + header only
    CHECK(frame_sample_count(1) == 480);
    CHECK(frame_sample_count(30) == 2800);
    CHECK(frame_sample_count(100) == 8400);
}
