#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wavephy/bits.hpp"
#include "wavephy/numerology.hpp"

namespace wavephy {

using cplx = std::complex<double>;

// Normalization factor giving every constellation unit average energy.
inline double modulation_scale(Modulation m) {
    switch (m) {
        case Modulation::bpsk: return 1.0;
        case Modulation::qpsk: return 1.0 / std::sqrt(2.0);
        case Modulation::qam16: return 1.0 / std::sqrt(10.0);
        case Modulation::qam64: return 1.0 / std::sqrt(42.0);
    }
    throw std::invalid_argument("unknown modulation");
}

namespace detail {

// Gray-coded amplitude for one axis, in integer units (before scaling).
// `label` packs the axis bits most-significant-first.
inline int gray_axis_level(unsigned label, unsigned bits_per_axis) {
    switch (bits_per_axis) {
        case 1:
            return label ? 1 : -1;
        case 2:
            switch (label) {
                case 0b00: return -3;
                case 0b01: return -1;
                case 0b11: return 1;
                case 0b10: return 3;
            }
            break;
        case 3:
            switch (label) {
                case 0b000: return -7;
                case 0b001: return -5;
                case 0b011: return -3;
                case 0b010: return -1;
                case 0b110: return 1;
                case 0b111: return 3;
                case 0b101: return 5;
                case 0b100: return 7;
            }
            break;
    }
    throw std::invalid_argument("bad axis label");
}

// Nearest-level hard decision along one axis.  Labels are scanned in
// ascending order with a strict-less update, so an input equidistant from
// two levels resolves to the smaller (lexicographically earlier) label.
inline unsigned gray_axis_decide(double x, unsigned bits_per_axis, double scale) {
    unsigned best_label = 0;
    double best_dist = 0;
    const unsigned n = 1u << bits_per_axis;
    for (unsigned label = 0; label < n; ++label) {
        const double level = gray_axis_level(label, bits_per_axis) * scale;
        const double d = (x - level) * (x - level);
        if (label == 0 || d < best_dist) {
            best_dist = d;
            best_label = label;
        }
    }
    return best_label;
}

inline unsigned axis_bits(Modulation m) {
    switch (m) {
        case Modulation::bpsk: return 1;
        case Modulation::qpsk: return 1;
        case Modulation::qam16: return 2;
        case Modulation::qam64: return 3;
    }
    throw std::invalid_argument("unknown modulation");
}

}  // namespace detail

// Map a bit stream to constellation symbols.  Each symbol consumes the
// modulation's bit count; the first half of the group selects the in-phase
// level, the second half the quadrature level (BPSK leaves Q at zero).
inline std::vector<cplx> map_bits(const BitSeq& in, Modulation m) {
    const unsigned bpsc = bits_per_subcarrier(m);
    if (in.size() % bpsc != 0)
        throw std::invalid_argument("map_bits: input not a whole number of symbols");
    const double scale = modulation_scale(m);
    const unsigned ab = detail::axis_bits(m);
    std::vector<cplx> out;
    out.reserve(in.size() / bpsc);
    for (std::size_t base = 0; base < in.size(); base += bpsc) {
        unsigned ilabel = 0, qlabel = 0;
        for (unsigned b = 0; b < ab; ++b) ilabel = (ilabel << 1) | (in[base + b] & 1u);
        double q = 0.0;
        if (m != Modulation::bpsk) {
            for (unsigned b = 0; b < ab; ++b) qlabel = (qlabel << 1) | (in[base + ab + b] & 1u);
            q = detail::gray_axis_level(qlabel, ab) * scale;
        }
        out.emplace_back(detail::gray_axis_level(ilabel, ab) * scale, q);
    }
    return out;
}

// Hard nearest-symbol demapping, the exact inverse of map_bits on clean
// input.  Equidistant ties resolve to the lexicographically smallest bit
// label, axis by axis.
inline BitSeq demap_bits(const std::vector<cplx>& in, Modulation m) {
    const unsigned bpsc = bits_per_subcarrier(m);
    const double scale = modulation_scale(m);
    const unsigned ab = detail::axis_bits(m);
    BitSeq out;
    out.reserve(in.size() * bpsc);
    for (const cplx& sym : in) {
        const unsigned ilabel = detail::gray_axis_decide(sym.real(), ab, scale);
        for (unsigned b = ab; b-- > 0;) out.push_back((ilabel >> b) & 1u);
        if (m != Modulation::bpsk) {
            const unsigned qlabel = detail::gray_axis_decide(sym.imag(), ab, scale);
            for (unsigned b = ab; b-- > 0;) out.push_back((qlabel >> b) & 1u);
        }
    }
    return out;
}

// Full constellation in label order; handy for validation sweeps.
inline std::vector<cplx> constellation(Modulation m) {
    const unsigned bpsc = bits_per_subcarrier(m);
    std::vector<cplx> pts;
    pts.reserve(1u << bpsc);
    for (unsigned v = 0; v < (1u << bpsc); ++v) {
        BitSeq bits(bpsc);
        for (unsigned b = 0; b < bpsc; ++b) bits[b] = (v >> (bpsc - 1 - b)) & 1u;
        pts.push_back(map_bits(bits, m)[0]);
    }
    return pts;
}

}  // namespace wavephy
