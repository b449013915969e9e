#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wavephy/bits.hpp"
#include "wavephy/convolutional.hpp"
#include "wavephy/dft.hpp"
#include "wavephy/interleaver.hpp"
#include "wavephy/mapper.hpp"
#include "wavephy/numerology.hpp"
#include "wavephy/scrambler.hpp"

namespace wavephy {

// One cyclic-prefixed OFDM symbol: 16 CP samples followed by the 64-sample
// body.  The CP is always an exact copy of the body's tail.
struct OfdmSymbol {
    std::array<cplx, 80> samples{};

    const cplx* body() const { return samples.data() + 16; }
};

// Signed subcarrier index -> slot in the 64-point transform input.
inline std::size_t bin_slot(int k) {
    return static_cast<std::size_t>(k >= 0 ? k : 64 + k);
}

// The 52 occupied subcarriers in ascending signed order (DC excluded).
inline const std::array<int, 52>& occupied_bins() {
    static const std::array<int, 52> bins = [] {
        std::array<int, 52> b{};
        std::size_t n = 0;
        for (int k = -26; k <= 26; ++k)
            if (k != 0) b[n++] = k;
        return b;
    }();
    return bins;
}

// Pilot amplitudes before per-symbol polarity, aligned with
// phy_params().pilot_bins = {-21, -7, 7, 21}.
inline constexpr std::array<int, 4> kPilotPattern{+1, +1, +1, -1};

// 127-long pilot polarity sequence: the free-running output of the
// scrambling register seeded all-ones, with bit 0 -> +1 and bit 1 -> -1.
inline const std::array<int, 127>& pilot_polarity_sequence() {
    static const std::array<int, 127> seq = [] {
        std::array<int, 127> s{};
        Scrambler lfsr(0x7f);
        for (auto& v : s) v = lfsr.next_bit() ? -1 : +1;
        return s;
    }();
    return seq;
}

inline int pilot_polarity(std::size_t symbol_index) {
    return pilot_polarity_sequence()[symbol_index % 127];
}

// Place 48 constellation points on the data subcarriers (ascending signed
// order) and the four polarity-modulated pilots on theirs; DC and guards
// stay zero.  Returns the transform input in FFT slot order.
inline std::array<cplx, 64> assemble_bins(const std::vector<cplx>& points,
                                          std::size_t symbol_index) {
    if (points.size() != 48)
        throw std::invalid_argument("assemble_bins: expected 48 data points");
    const PhyParams& p = phy_params();
    std::array<cplx, 64> bins{};
    for (std::size_t i = 0; i < 48; ++i) bins[bin_slot(p.data_bins[i])] = points[i];
    const int pol = pilot_polarity(symbol_index);
    for (std::size_t i = 0; i < 4; ++i)
        bins[bin_slot(p.pilot_bins[i])] = cplx(pol * kPilotPattern[i], 0.0);
    return bins;
}

// Inverse transform + cyclic prefix.
inline OfdmSymbol modulate_bins(const std::array<cplx, 64>& bins) {
    std::vector<cplx> body = ifft(std::vector<cplx>(bins.begin(), bins.end()));
    OfdmSymbol sym;
    for (std::size_t i = 0; i < 16; ++i) sym.samples[i] = body[48 + i];
    for (std::size_t i = 0; i < 64; ++i) sym.samples[16 + i] = body[i];
    return sym;
}

inline OfdmSymbol ofdm_modulate(const std::vector<cplx>& points, std::size_t symbol_index) {
    return modulate_bins(assemble_bins(points, symbol_index));
}

// Forward transform of one 64-sample symbol body.
inline std::array<cplx, 64> ofdm_demodulate(const cplx* body) {
    std::vector<cplx> spec = fft(std::vector<cplx>(body, body + 64));
    std::array<cplx, 64> out;
    for (std::size_t i = 0; i < 64; ++i) out[i] = spec[i];
    return out;
}

// Short-training frequency sequence: 12 loaded subcarriers at multiples of
// 4, scaled so the field carries the same energy as a data symbol.
inline const std::array<cplx, 64>& short_training_bins() {
    static const std::array<cplx, 64> bins = [] {
        std::array<cplx, 64> b{};
        const double a = std::sqrt(13.0 / 6.0);
        const cplx pp(a, a), mm(-a, -a);
        b[bin_slot(-24)] = pp;
        b[bin_slot(-20)] = mm;
        b[bin_slot(-16)] = pp;
        b[bin_slot(-12)] = mm;
        b[bin_slot(-8)] = mm;
        b[bin_slot(-4)] = pp;
        b[bin_slot(4)] = mm;
        b[bin_slot(8)] = mm;
        b[bin_slot(12)] = pp;
        b[bin_slot(16)] = pp;
        b[bin_slot(20)] = pp;
        b[bin_slot(24)] = pp;
        return b;
    }();
    return bins;
}

// Long-training frequency sequence: +/-1 on all 52 occupied bins, 0 at DC.
inline const std::array<cplx, 64>& long_training_bins() {
    static const std::array<cplx, 64> bins = [] {
        static constexpr std::array<int, 53> seq = {
            // k = -26 .. -1
            1, 1, -1, -1, 1, 1, -1, 1, -1, 1, 1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1, 1, 1, 1,
            // k = 0
            0,
            // k = +1 .. +26
            1, -1, -1, 1, 1, -1, 1, -1, 1, -1, -1, -1, -1, -1, 1, 1, -1, -1, 1, -1, 1, -1, 1, 1, 1, 1};
        std::array<cplx, 64> b{};
        for (int k = -26; k <= 26; ++k) b[bin_slot(k)] = cplx(seq[k + 26], 0.0);
        return b;
    }();
    return bins;
}

// Value of the long-training sequence on signed bin k.
inline double lts_bin(int k) { return long_training_bins()[bin_slot(k)].real(); }

// 320-sample preamble: 160 samples of the 16-sample-periodic short
// training waveform, a 32-sample double guard interval, then two identical
// 64-sample long training bodies.  The guard is the tail of the long body.
inline const std::vector<cplx>& generate_preamble() {
    static const std::vector<cplx> pre = [] {
        const auto& sts = short_training_bins();
        const auto& lts = long_training_bins();
        std::vector<cplx> sts_body = ifft(std::vector<cplx>(sts.begin(), sts.end()));
        std::vector<cplx> lts_body = ifft(std::vector<cplx>(lts.begin(), lts.end()));
        std::vector<cplx> out(320);
        for (std::size_t i = 0; i < 160; ++i) out[i] = sts_body[i % 64];
        for (std::size_t i = 0; i < 32; ++i) out[160 + i] = lts_body[32 + i];
        for (std::size_t i = 0; i < 64; ++i) {
            out[192 + i] = lts_body[i];
            out[256 + i] = lts_body[i];
        }
        return out;
    }();
    return pre;
}

// 4-bit header code for each data rate, most significant bit first.
inline unsigned rate_code(const McsMode& mode) {
    switch (mode.n_dbps) {
        case 24: return 0b1101;   // 3 Mb/s
        case 36: return 0b1111;   // 4.5 Mb/s
        case 48: return 0b0101;   // 6 Mb/s
        case 72: return 0b0111;   // 9 Mb/s
        case 96: return 0b1001;   // 12 Mb/s
        case 144: return 0b1011;  // 18 Mb/s
        case 192: return 0b0001;  // 24 Mb/s
        case 216: return 0b0011;  // 27 Mb/s
    }
    throw std::invalid_argument("rate_code: unknown mode");
}

// The 24 header bits: RATE (4), reserved 0, LENGTH in octets (12, LSB
// first), even parity over bits 0..17, and 6 zero tail bits.
inline BitSeq signal_field_bits(const McsMode& mode, std::size_t payload_octets) {
    if (payload_octets >= 4096)
        throw std::invalid_argument("signal field: length exceeds 12 bits");
    BitSeq bits(24, 0);
    const unsigned rc = rate_code(mode);
    for (std::size_t i = 0; i < 4; ++i) bits[i] = (rc >> (3 - i)) & 1u;
    bits[4] = 0;  // reserved
    for (std::size_t i = 0; i < 12; ++i) bits[5 + i] = (payload_octets >> i) & 1u;
    std::uint8_t parity = 0;
    for (std::size_t i = 0; i < 17; ++i) parity ^= bits[i];
    bits[17] = parity;
    // bits 18..23 stay 0 (tail)
    return bits;
}

// Header symbol: always BPSK rate 1/2, never scrambled, pilot polarity
// index 0.
inline OfdmSymbol build_signal_field(const McsMode& mode, std::size_t payload_octets) {
    const BitSeq bits = signal_field_bits(mode, payload_octets);
    const BitSeq coded = conv_encode(bits);  // 48 bits, no puncturing
    const McsMode& bpsk = mcs_table()[0];
    const BitSeq inter = interleave(coded, bpsk);
    return ofdm_modulate(map_bits(inter, Modulation::bpsk), 0);
}

}  // namespace wavephy
