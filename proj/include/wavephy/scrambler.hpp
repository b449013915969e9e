#pragma once

#include <cstdint>
#include <stdexcept>

#include "wavephy/bits.hpp"

namespace wavephy {

// Self-synchronizing scrambler built on the x^7 + x^4 + 1 LFSR.  The same
// operation both scrambles and descrambles: XOR the input with the feedback
// stream.  The state must be nonzero or the output degenerates to a copy of
// the input.
class Scrambler {
public:
    explicit Scrambler(std::uint8_t seed = 0x7f) : state_(seed & 0x7f) {
        if (state_ == 0) throw std::invalid_argument("scrambler seed must be nonzero");
    }

    // One step of the generator: feedback = x7 ^ x4 of the current state.
    std::uint8_t next_bit() {
        std::uint8_t fb = static_cast<std::uint8_t>(((state_ >> 6) & 1u) ^ ((state_ >> 3) & 1u));
        state_ = static_cast<std::uint8_t>(((state_ << 1) & 0x7e) | fb);
        return fb;
    }

    std::uint8_t scramble_bit(std::uint8_t in) {
        return static_cast<std::uint8_t>(next_bit() ^ (in & 1u));
    }

    BitSeq scramble(const BitSeq& in) {
        BitSeq out(in.size());
        for (std::size_t i = 0; i < in.size(); ++i) out[i] = scramble_bit(in[i]);
        return out;
    }

    std::uint8_t state() const { return state_; }

private:
    std::uint8_t state_;
};

// Convenience one-shot form.
inline BitSeq scramble(const BitSeq& in, std::uint8_t seed = 0x7f) {
    Scrambler s(seed);
    return s.scramble(in);
}

// Descrambling is the identical operation with the identical seed.
inline BitSeq descramble(const BitSeq& in, std::uint8_t seed = 0x7f) {
    return scramble(in, seed);
}

}  // namespace wavephy
