#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wavephy {

enum class Modulation { bpsk, qpsk, qam16, qam64 };

enum class CodeRate { half, two_thirds, three_quarters };

constexpr int code_rate_num(CodeRate r) {
    switch (r) {
        case CodeRate::half: return 1;
        case CodeRate::two_thirds: return 2;
        case CodeRate::three_quarters: return 3;
    }
    return 0;
}

constexpr int code_rate_den(CodeRate r) {
    switch (r) {
        case CodeRate::half: return 2;
        case CodeRate::two_thirds: return 3;
        case CodeRate::three_quarters: return 4;
    }
    return 0;
}

constexpr int bits_per_subcarrier(Modulation m) {
    switch (m) {
        case Modulation::bpsk: return 1;
        case Modulation::qpsk: return 2;
        case Modulation::qam16: return 4;
        case Modulation::qam64: return 6;
    }
    return 0;
}

// One modulation/coding configuration of the 10 MHz PHY.
struct McsMode {
    Modulation modulation;
    CodeRate code_rate;
    int n_bpsc;  // coded bits per subcarrier
    int n_cbps;  // coded bits per OFDM symbol (48 * n_bpsc)
    int n_dbps;  // data bits per OFDM symbol (n_cbps * rate)
    const char* name;

    bool operator==(const McsMode& o) const {
        return modulation == o.modulation && code_rate == o.code_rate;
    }
};

namespace detail {
constexpr McsMode make_mode(Modulation m, CodeRate r, const char* name) {
    const int bpsc = bits_per_subcarrier(m);
    const int cbps = 48 * bpsc;
    return {m, r, bpsc, cbps, cbps * code_rate_num(r) / code_rate_den(r), name};
}
}  // namespace detail

// The 8 valid modes in ascending data-rate order: 3 .. 27 Mb/s.
inline const std::array<McsMode, 8>& mcs_table() {
    static const std::array<McsMode, 8> table = {{
        detail::make_mode(Modulation::bpsk, CodeRate::half, "bpsk12"),
        detail::make_mode(Modulation::bpsk, CodeRate::three_quarters, "bpsk34"),
        detail::make_mode(Modulation::qpsk, CodeRate::half, "qpsk12"),
        detail::make_mode(Modulation::qpsk, CodeRate::three_quarters, "qpsk34"),
        detail::make_mode(Modulation::qam16, CodeRate::half, "16qam12"),
        detail::make_mode(Modulation::qam16, CodeRate::three_quarters, "16qam34"),
        detail::make_mode(Modulation::qam64, CodeRate::two_thirds, "64qam23"),
        detail::make_mode(Modulation::qam64, CodeRate::three_quarters, "64qam34"),
    }};
    return table;
}

inline const McsMode& mode_from_name(std::string_view name) {
    for (const auto& m : mcs_table())
        if (name == m.name) return m;
    throw std::invalid_argument("unknown MCS mode '" + std::string(name) +
                                "' (valid: bpsk12 bpsk34 qpsk12 qpsk34 16qam12 16qam34 64qam23 64qam34)");
}

// Fixed numerology of the 10 MHz vehicular PHY.
struct PhyParams {
    int fft_size = 64;
    double sample_rate = 1.0e7;  // samples/second
    int cp_length = 16;          // fft_size / 4
    int n_data_subcarriers = 48;
    int n_pilot_subcarriers = 4;
    std::array<int, 4> pilot_bins{{-21, -7, 7, 21}};
    std::array<int, 48> data_bins{};  // signed indices, ascending
    double subcarrier_spacing = 1.0e7 / 64;  // 156.25 kHz
    double symbol_duration = 80 / 1.0e7;     // 8 us = 80 samples
    double gi_duration = 16 / 1.0e7;         // 1.6 us
    double carrier_frequency = 5.9e9;        // U.S. band; 5.8 GHz is a config override
};

inline const PhyParams& phy_params() {
    static const PhyParams params = [] {
        PhyParams p;
        std::size_t n = 0;
        for (int k = -26; k <= 26; ++k) {
            if (k == 0 || k == -21 || k == -7 || k == 7 || k == 21) continue;
            p.data_bins[n++] = k;
        }
        return p;
    }();
    return params;
}

inline double data_rate(const McsMode& mode) {
    return mode.n_dbps / phy_params().symbol_duration;
}

// Samples in a frame: 320 preamble + 80 SIGNAL + 80 per data symbol.
inline std::size_t frame_sample_count(std::size_t n_ofdm_symbols) {
    return 320 + 80 + 80 * n_ofdm_symbols;
}

}  // namespace wavephy
