#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wavephy/bits.hpp"
#include "wavephy/numerology.hpp"

namespace wavephy {

// Rate-1/2 convolutional mother code, constraint length 7, generators
// 133/171 (octal).  The shift register is modelled as a 7-bit word with the
// newest input bit at bit 6; the 6-bit trellis state is the register after
// the shift, i.e. previous inputs with the newest at bit 5.
inline constexpr unsigned kGenA = 0x5b;  // 133 octal
inline constexpr unsigned kGenB = 0x79;  // 171 octal
inline constexpr unsigned kNumStates = 64;

namespace detail {

inline std::uint8_t parity7(unsigned v) {
    return static_cast<std::uint8_t>(std::popcount(v & 0x7fu) & 1u);
}

// Puncturing period and kept positions for each rate.  '1' keeps the bit,
// '0' drops it.
struct PuncturePattern {
    unsigned period;
    unsigned mask;  // bit i set => position i within the period is kept
    unsigned kept;
};

inline PuncturePattern puncture_pattern(CodeRate rate) {
    switch (rate) {
        case CodeRate::half: return {2, 0b11u, 2};
        case CodeRate::two_thirds: return {4, 0b0111u, 3};      // keep positions 0,1,2
        case CodeRate::three_quarters: return {6, 0b101011u, 4};  // keep positions 0,1,3,5
    }
    throw std::invalid_argument("unknown code rate");
}

}  // namespace detail

// Encode from the all-zero state.  Output holds two bits per input bit,
// generator A first.  Tail bits, if the caller wants a terminated stream,
// must already be part of `in`.
inline BitSeq conv_encode(const BitSeq& in) {
    BitSeq out;
    out.reserve(2 * in.size());
    unsigned state = 0;
    for (std::uint8_t b : in) {
        unsigned reg = ((b & 1u) << 6) | state;
        out.push_back(detail::parity7(reg & kGenA));
        out.push_back(detail::parity7(reg & kGenB));
        state = reg >> 1;
    }
    return out;
}

// Drop bits from a rate-1/2 stream according to the rate's pattern.  The
// input must consist of whole puncturing periods.
inline BitSeq puncture(const BitSeq& in, CodeRate rate) {
    const auto pat = detail::puncture_pattern(rate);
    if (in.size() % pat.period != 0)
        throw std::invalid_argument("puncture: input not a whole number of periods");
    if (rate == CodeRate::half) return in;
    BitSeq out;
    out.reserve(in.size() / pat.period * pat.kept);
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (pat.mask & (1u << (i % pat.period))) out.push_back(in[i]);
    }
    return out;
}

// Re-inflate a punctured stream to mother-code length, marking the dropped
// positions as erased so the decoder can ignore them.
inline TernarySeq depuncture(const BitSeq& in, CodeRate rate) {
    const auto pat = detail::puncture_pattern(rate);
    if (in.size() % pat.kept != 0)
        throw std::invalid_argument("depuncture: input not a whole number of periods");
    TernarySeq out;
    out.reserve(in.size() / pat.kept * pat.period);
    std::size_t next = 0;
    const std::size_t periods = in.size() / pat.kept;
    for (std::size_t p = 0; p < periods; ++p) {
        for (unsigned pos = 0; pos < pat.period; ++pos) {
            if (pat.mask & (1u << pos))
                out.push_back(in[next++] ? Ternary::one : Ternary::zero);
            else
                out.push_back(Ternary::erased);
        }
    }
    return out;
}

enum class ViterbiTermination {
    zero_state,  // encoder was driven back to state 0 by tail bits
    best_state,  // free-running stream: trace back from the best metric
};

// Hard-decision Viterbi decoder over the 64-state trellis.  Erased input
// positions contribute nothing to any branch metric.  Ties in the add-
// compare-select step keep the lower-numbered predecessor.  Returns one
// decoded bit per trellis step (tail bits included; callers strip them).
inline BitSeq viterbi_decode(const TernarySeq& coded,
                             ViterbiTermination term = ViterbiTermination::zero_state) {
    if (coded.size() % 2 != 0)
        throw std::invalid_argument("viterbi_decode: stream must hold bit pairs");
    const std::size_t n_steps = coded.size() / 2;
    if (n_steps == 0) return {};

    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

    // Expected output pair for (state, input), precomputed.
    std::array<std::uint8_t, 2 * kNumStates> exp_a{}, exp_b{};
    for (unsigned s = 0; s < kNumStates; ++s) {
        for (unsigned b = 0; b < 2; ++b) {
            unsigned reg = (b << 6) | s;
            exp_a[2 * s + b] = detail::parity7(reg & kGenA);
            exp_b[2 * s + b] = detail::parity7(reg & kGenB);
        }
    }

    std::vector<std::uint32_t> metric(kNumStates, kInf), next_metric(kNumStates);
    metric[0] = 0;  // the encoder starts from the all-zero state
    std::vector<std::uint8_t> survivor(n_steps * kNumStates);

    for (std::size_t t = 0; t < n_steps; ++t) {
        const Ternary ra = coded[2 * t];
        const Ternary rb = coded[2 * t + 1];
        std::fill(next_metric.begin(), next_metric.end(), kInf);
        std::uint8_t* surv = survivor.data() + t * kNumStates;
        for (unsigned p = 0; p < kNumStates; ++p) {
            if (metric[p] >= kInf) continue;
            for (unsigned b = 0; b < 2; ++b) {
                std::uint32_t cost = metric[p];
                if (ra != Ternary::erased &&
                    static_cast<std::uint8_t>(ra) != exp_a[2 * p + b])
                    ++cost;
                if (rb != Ternary::erased &&
                    static_cast<std::uint8_t>(rb) != exp_b[2 * p + b])
                    ++cost;
                const unsigned n = (b << 5) | (p >> 1);
                if (cost < next_metric[n]) {  // strict: first (lowest) predecessor wins ties
                    next_metric[n] = cost;
                    surv[n] = static_cast<std::uint8_t>(p);
                }
            }
        }
        metric.swap(next_metric);
    }

    unsigned state = 0;
    if (term == ViterbiTermination::best_state) {
        std::uint32_t best = metric[0];
        for (unsigned s = 1; s < kNumStates; ++s) {
            if (metric[s] < best) {
                best = metric[s];
                state = s;
            }
        }
    }

    BitSeq out(n_steps);
    for (std::size_t t = n_steps; t-- > 0;) {
        out[t] = static_cast<std::uint8_t>((state >> 5) & 1u);
        state = survivor[t * kNumStates + state];
    }
    return out;
}

}  // namespace wavephy
