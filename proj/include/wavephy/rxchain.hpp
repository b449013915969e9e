#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wavephy/bits.hpp"
#include "wavephy/convolutional.hpp"
#include "wavephy/interleaver.hpp"
#include "wavephy/mapper.hpp"
#include "wavephy/numerology.hpp"
#include "wavephy/ofdm.hpp"
#include "wavephy/scrambler.hpp"
#include "wavephy/txchain.hpp"

namespace wavephy {

// Per-subcarrier complex gains over the 52 occupied bins, stored in
// ascending signed-index order (-26..-1, 1..26).
struct ChannelEstimate {
    std::array<cplx, 52> gains{};

    static std::size_t index_of(int k) {
        if (k == 0 || k < -26 || k > 26) throw std::invalid_argument("bin not occupied");
        return static_cast<std::size_t>(k < 0 ? k + 26 : k + 25);
    }

    cplx at(int k) const { return gains[index_of(k)]; }
    cplx& at(int k) { return gains[index_of(k)]; }
};

// Average the forward transforms of the two long-training bodies and
// divide by the known +/-1 training values.
inline ChannelEstimate estimate_channel(const cplx* lts_rx) {
    const auto y1 = ofdm_demodulate(lts_rx);
    const auto y2 = ofdm_demodulate(lts_rx + 64);
    ChannelEstimate est;
    for (int k : occupied_bins()) {
        const std::size_t slot = bin_slot(k);
        est.at(k) = (y1[slot] + y2[slot]) / (2.0 * lts_bin(k));
    }
    return est;
}

// Single-body variant (first LTS only); exists so the two-body averaging
// gain is measurable.
inline ChannelEstimate estimate_channel_single(const cplx* lts_rx) {
    const auto y1 = ofdm_demodulate(lts_rx);
    ChannelEstimate est;
    for (int k : occupied_bins())
        est.at(k) = y1[bin_slot(k)] / lts_bin(k);
    return est;
}

struct EqualizedSymbol {
    std::vector<cplx> data;        // 48 points, data-bin ascending order
    std::array<cplx, 4> pilots{};  // bins -21, -7, 7, 21
    bool unreliable = false;       // a data bin had a vanishing channel estimate
};

// One-tap zero-forcing: divide every occupied bin by its estimated gain.
inline EqualizedSymbol equalize(const std::array<cplx, 64>& spectrum,
                                const ChannelEstimate& est) {
    constexpr double kMinGain = 1e-12;
    const PhyParams& p = phy_params();
    EqualizedSymbol out;
    out.data.resize(48);
    for (std::size_t i = 0; i < 48; ++i) {
        const int k = p.data_bins[i];
        const cplx h = est.at(k);
        if (std::abs(h) < kMinGain) {
            out.data[i] = cplx(0.0, 0.0);
            out.unreliable = true;
        } else {
            out.data[i] = spectrum[bin_slot(k)] / h;
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        const int k = p.pilot_bins[i];
        const cplx h = est.at(k);
        out.pilots[i] = std::abs(h) < kMinGain ? cplx(0.0, 0.0) : spectrum[bin_slot(k)] / h;
    }
    return out;
}

// Frame-start estimator: slide a 128-sample window looking for the
// 16-sample short-training periodicity via normalized lag-16
// autocorrelation, then refine with a cross-correlation against the known
// long-training body (which peaks at both body starts, 64 samples apart).
inline std::optional<std::size_t> synchronize(const std::vector<cplx>& rx,
                                              double threshold = 0.6) {
    constexpr std::size_t kWindow = 128;
    constexpr std::size_t kLag = 16;
    if (rx.size() < 320 + 80) return std::nullopt;

    const std::size_t d_max = rx.size() - (kWindow + kLag);
    std::optional<std::size_t> coarse;
    for (std::size_t d = 0; d <= d_max; ++d) {
        cplx corr(0.0, 0.0);
        double energy = 0.0;
        for (std::size_t i = 0; i < kWindow; ++i) {
            corr += rx[d + i] * std::conj(rx[d + i + kLag]);
            energy += std::norm(rx[d + i + kLag]);
        }
        if (energy < 1e-30) continue;
        if (std::abs(corr) / energy >= threshold) {
            coarse = d;
            break;
        }
    }
    if (!coarse) return std::nullopt;

    // The coarse hit lands somewhere on the short-training plateau.  Score
    // candidate long-training positions by the summed correlation against
    // both expected bodies; the true frame start wins because only there do
    // the two peaks line up 64 samples apart.
    const auto& ltb = long_training_bins();
    const std::vector<cplx> lts_body =
        ifft(std::vector<cplx>(ltb.begin(), ltb.end()));

    auto xcorr = [&](std::size_t pos) {
        cplx acc(0.0, 0.0);
        for (std::size_t i = 0; i < 64; ++i) acc += rx[pos + i] * std::conj(lts_body[i]);
        return std::abs(acc);
    };

    if (*coarse + 320 > rx.size()) return std::nullopt;
    const std::size_t s_hi = std::min(*coarse + 320, rx.size() - 320);
    std::size_t best_start = *coarse;
    double best_score = -1.0;
    for (std::size_t s = *coarse; s <= s_hi; ++s) {
        const double score = xcorr(s + 192) + xcorr(s + 256);
        if (score > best_score) {
            best_score = score;
            best_start = s;
        }
    }
    return best_start;
}

// Full receiver.  The frame start is genie-aided by default (offset 0 or
// whatever the caller knows); run synchronize() first for blind operation.
// Returns the first payload_bits decoded payload bits; payload_bits
// defaults to the full frame capacity (any padding included).
inline BitSeq receive_frame(const std::vector<cplx>& rx, const McsMode& mode,
                            std::size_t n_symbols, std::size_t payload_bits = SIZE_MAX,
                            std::uint8_t scramble_seed = 0x7f, std::size_t offset = 0) {
    const std::size_t capacity = frame_capacity_bits(mode, n_symbols);
    if (payload_bits == SIZE_MAX) payload_bits = capacity;
    if (payload_bits > capacity)
        throw std::invalid_argument("receive_frame: payload exceeds frame capacity");
    if (offset + frame_sample_count(n_symbols) > rx.size())
        throw std::invalid_argument("receive_frame: stream too short for frame");

    const ChannelEstimate est = estimate_channel(rx.data() + offset + 192);

    BitSeq hard;
    hard.reserve(n_symbols * static_cast<std::size_t>(mode.n_cbps));
    for (std::size_t n = 0; n < n_symbols; ++n) {
        const std::size_t sym_off = offset + 320 + 80 + 80 * n + 16;  // skip preamble, header, CP
        const auto spectrum = ofdm_demodulate(rx.data() + sym_off);
        const EqualizedSymbol eq = equalize(spectrum, est);
        const BitSeq bits = demap_bits(eq.data, mode.modulation);
        hard.insert(hard.end(), bits.begin(), bits.end());
    }

    const BitSeq deinter = deinterleave(hard, mode);
    const TernarySeq soft = depuncture(deinter, mode.code_rate);
    const BitSeq decoded = viterbi_decode(soft, ViterbiTermination::zero_state);
    const BitSeq descrambled = descramble(decoded, scramble_seed);

    BitSeq payload(descrambled.begin() + kServiceBits,
                   descrambled.begin() + static_cast<std::ptrdiff_t>(kServiceBits + payload_bits));
    return payload;
}

}  // namespace wavephy
