#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wavephy/bits.hpp"
#include "wavephy/convolutional.hpp"
#include "wavephy/interleaver.hpp"
#include "wavephy/mapper.hpp"
#include "wavephy/numerology.hpp"
#include "wavephy/ofdm.hpp"
#include "wavephy/scrambler.hpp"

namespace wavephy {

inline constexpr std::size_t kServiceBits = 16;
inline constexpr std::size_t kTailBits = 6;

// Payload bits that fit in a frame of n_symbols once the service field and
// encoder tail are accounted for.
inline std::size_t frame_capacity_bits(const McsMode& mode, std::size_t n_symbols) {
    const std::size_t total = n_symbols * static_cast<std::size_t>(mode.n_dbps);
    if (total < kServiceBits + kTailBits + 1)
        throw std::invalid_argument("frame too small for service and tail fields");
    return total - kServiceBits - kTailBits;
}

struct TxFrame {
    std::vector<cplx> preamble;  // 320 samples
    OfdmSymbol signal_symbol;
    std::vector<OfdmSymbol> data_symbols;
    McsMode mode;
    std::size_t payload_bits = 0;
};

// Flatten a frame to its baseband sample stream.
inline std::vector<cplx> frame_samples(const TxFrame& frame) {
    std::vector<cplx> out;
    out.reserve(frame_sample_count(frame.data_symbols.size()));
    out.insert(out.end(), frame.preamble.begin(), frame.preamble.end());
    out.insert(out.end(), frame.signal_symbol.samples.begin(), frame.signal_symbol.samples.end());
    for (const OfdmSymbol& s : frame.data_symbols)
        out.insert(out.end(), s.samples.begin(), s.samples.end());
    return out;
}

// Full transmitter: scramble, encode, puncture, interleave, map, OFDM-
// modulate, then prepend the header symbol and the training preamble.
//
// The data field is laid out as SERVICE (16 zero bits), the payload,
// zero padding, and finally 6 tail bits.  Everything is scrambled, after
// which the tail positions are forced back to zero so the convolutional
// encoder ends in the all-zero state and the decoder can terminate there.
inline TxFrame transmit_frame(const BitSeq& payload, const McsMode& mode,
                              std::size_t n_symbols, std::uint8_t scramble_seed = 0x7f) {
    const std::size_t capacity = frame_capacity_bits(mode, n_symbols);
    if (payload.size() > capacity)
        throw std::invalid_argument("payload exceeds frame capacity");
    const std::size_t total_bits = n_symbols * static_cast<std::size_t>(mode.n_dbps);

    BitSeq data(total_bits, 0);
    for (std::size_t i = 0; i < payload.size(); ++i) data[kServiceBits + i] = payload[i] & 1u;

    BitSeq scrambled = scramble(data, scramble_seed);
    for (std::size_t i = total_bits - kTailBits; i < total_bits; ++i) scrambled[i] = 0;

    const BitSeq coded = puncture(conv_encode(scrambled), mode.code_rate);
    const BitSeq inter = interleave(coded, mode);
    const std::vector<cplx> points = map_bits(inter, mode.modulation);

    TxFrame frame;
    frame.mode = mode;
    frame.payload_bits = payload.size();
    frame.preamble = generate_preamble();
    frame.signal_symbol = build_signal_field(mode, (payload.size() + 7) / 8);
    frame.data_symbols.reserve(n_symbols);
    for (std::size_t n = 0; n < n_symbols; ++n) {
        std::vector<cplx> sym(points.begin() + static_cast<std::ptrdiff_t>(48 * n),
                              points.begin() + static_cast<std::ptrdiff_t>(48 * (n + 1)));
        frame.data_symbols.push_back(ofdm_modulate(sym, n + 1));
    }
    return frame;
}

}  // namespace wavephy
