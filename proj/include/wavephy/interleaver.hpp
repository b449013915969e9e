#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wavephy/bits.hpp"
#include "wavephy/numerology.hpp"

namespace wavephy {

// Block interleaver over one OFDM symbol's coded bits.  Two permutations:
// the first spreads adjacent bits across subcarriers (row/column write with
// 16 rows), the second rotates bits within a subcarrier so neighbours
// alternate between more and less significant constellation positions.
//
// Returns, for each input index k, the output index it lands on.
inline std::vector<std::size_t> interleave_map(unsigned n_cbps, unsigned n_bpsc) {
    if (n_cbps % 16 != 0) throw std::invalid_argument("interleaver: block size must be a multiple of 16");
    const std::size_t s = n_bpsc / 2 > 1 ? n_bpsc / 2 : 1;
    std::vector<std::size_t> map(n_cbps);
    for (std::size_t k = 0; k < n_cbps; ++k) {
        const std::size_t i = (n_cbps / 16) * (k % 16) + k / 16;
        const std::size_t j = s * (i / s) + (i + n_cbps - 16 * i / n_cbps) % s;
        map[k] = j;
    }
    return map;
}

inline BitSeq interleave(const BitSeq& in, const McsMode& mode) {
    const unsigned n_cbps = mode.n_cbps;
    if (in.size() % n_cbps != 0)
        throw std::invalid_argument("interleave: input not a whole number of symbols");
    const auto map = interleave_map(n_cbps, mode.n_bpsc);
    BitSeq out(in.size());
    for (std::size_t base = 0; base < in.size(); base += n_cbps) {
        for (std::size_t k = 0; k < n_cbps; ++k) out[base + map[k]] = in[base + k];
    }
    return out;
}

inline BitSeq deinterleave(const BitSeq& in, const McsMode& mode) {
    const unsigned n_cbps = mode.n_cbps;
    if (in.size() % n_cbps != 0)
        throw std::invalid_argument("deinterleave: input not a whole number of symbols");
    const auto map = interleave_map(n_cbps, mode.n_bpsc);
    BitSeq out(in.size());
    for (std::size_t base = 0; base < in.size(); base += n_cbps) {
        for (std::size_t k = 0; k < n_cbps; ++k) out[base + k] = in[base + map[k]];
    }
    return out;
}

}  // namespace wavephy
