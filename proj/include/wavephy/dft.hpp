#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wavephy {

using cplx = std::complex<double>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 Cooley-Tukey.  sign = -1 for the forward
// transform, +1 for the inverse.  No scaling here; callers decide.
inline void fft_core(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

}  // namespace detail

// Forward DFT, unscaled: X[k] = sum_n x[n] e^{-j 2 pi k n / N}.
inline std::vector<cplx> fft(std::vector<cplx> x) {
    detail::fft_core(x, -1);
    return x;
}

// Inverse DFT with 1/N: x[n] = (1/N) sum_k X[k] e^{+j 2 pi k n / N}.
// Round-tripping ifft(fft(x)) therefore reproduces x exactly (up to
// floating-point error), and a unit tone placed in one bin comes out of
// the inverse with per-sample magnitude 1/N.
inline std::vector<cplx> ifft(std::vector<cplx> x) {
    detail::fft_core(x, +1);
    const double inv = 1.0 / static_cast<double>(x.size());
    for (auto& v : x) v *= inv;
    return x;
}

}  // namespace wavephy
