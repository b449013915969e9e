#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace wavephy {

// Bit values are stored one per byte, always 0 or 1.
using BitSeq = std::vector<std::uint8_t>;

// Ternary symbol used after depuncturing: 0, 1, or an erased position
// that must not bias the decoder metric.
enum class Ternary : std::uint8_t { zero = 0, one = 1, erased = 2 };

using TernarySeq = std::vector<Ternary>;

inline Ternary to_ternary(std::uint8_t bit) {
    return bit ? Ternary::one : Ternary::zero;
}

inline TernarySeq to_ternary_seq(const BitSeq& bits) {
    TernarySeq out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) out[i] = to_ternary(bits[i]);
    return out;
}

inline BitSeq random_bits(std::size_t n, std::mt19937_64& rng) {
    BitSeq out(n);
    std::uint64_t word = 0;
    int left = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (left == 0) {
            word = rng();
            left = 64;
        }
        out[i] = static_cast<std::uint8_t>(word & 1u);
        word >>= 1;
        --left;
    }
    return out;
}

inline std::size_t count_bit_errors(const BitSeq& a, const BitSeq& b) {
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    std::size_t errors = a.size() > b.size() ? a.size() - n : b.size() - n;
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) ++errors;
    return errors;
}

}  // namespace wavephy
