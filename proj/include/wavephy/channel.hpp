#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wavephy/dft.hpp"
#include "wavephy/numerology.hpp"
#include "wavephy/rng.hpp"

namespace wavephy {

inline constexpr double kSpeedOfLight = 299792458.0;

enum class ChannelFamily { awgn, rayleigh, rician };

inline const char* channel_family_name(ChannelFamily f) {
    switch (f) {
        case ChannelFamily::awgn: return "awgn";
        case ChannelFamily::rayleigh: return "rayleigh";
        case ChannelFamily::rician: return "rician";
    }
    throw std::invalid_argument("unknown channel family");
}

inline ChannelFamily channel_family_from_name(std::string_view name) {
    if (name == "awgn") return ChannelFamily::awgn;
    if (name == "rayleigh") return ChannelFamily::rayleigh;
    if (name == "rician") return ChannelFamily::rician;
    throw std::invalid_argument("unknown channel '" + std::string(name) +
                                "' (valid: awgn rayleigh rician)");
}

// Maximum Doppler shift for a vehicle moving at `speed_kmh` relative to a
// carrier at `carrier_hz`.
inline double doppler_shift(double speed_kmh, double carrier_hz) {
    if (speed_kmh < 0) throw std::invalid_argument("doppler_shift: negative speed");
    return (speed_kmh / 3.6) * carrier_hz / kSpeedOfLight;
}

struct ChannelScenario {
    ChannelFamily family = ChannelFamily::awgn;
    double snr_db = 0.0;
    double speed_kmh = 0.0;
    double rician_k_db = 6.0;
    double carrier_frequency = 5.9e9;
    std::uint64_t seed = 0;
};

inline double measure_power(const std::vector<cplx>& x) {
    double acc = 0.0;
    for (const cplx& v : x) acc += std::norm(v);
    return x.empty() ? 0.0 : acc / static_cast<double>(x.size());
}

// Add circularly-symmetric complex Gaussian noise of total per-sample
// variance n0 (n0/2 per component).
inline std::vector<cplx> add_noise(std::vector<cplx> x, double n0, std::uint64_t seed) {
    std::mt19937_64 rng = make_engine(seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(n0 / 2.0));
    for (cplx& v : x) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v += cplx(re, im);
    }
    return x;
}

// AWGN at a target SNR relative to the measured mean power of the input;
// an all-zero input is treated as unit-power reference.
inline std::vector<cplx> apply_awgn(const std::vector<cplx>& x, double snr_db,
                                    std::uint64_t seed) {
    if (x.empty()) throw std::invalid_argument("apply_awgn: empty input");
    double p_sig = measure_power(x);
    if (p_sig == 0.0) p_sig = 1.0;
    const double n0 = p_sig * std::pow(10.0, -snr_db / 10.0);
    return add_noise(x, n0, seed);
}

struct FadingRealization {
    std::vector<cplx> gains;  // one per sample
    double doppler_hz = 0.0;
};

namespace detail {

inline constexpr int kNumSinusoids = 64;

// Sum-of-sinusoids diffuse process with complex Gaussian amplitudes: each
// of the 64 spectral lines sits at f_d*cos(angle) with an independent
// CN(0, 1/64) weight, so the marginal distribution of the sum is exactly
// CN(0, 1) and the autocorrelation converges to J0(2*pi*f_d*tau).
// Zero Doppler collapses every line to DC: the gain is one CN(0,1) draw
// held for the whole realization.
inline std::vector<cplx> diffuse_gains(std::size_t n, double doppler_hz, double sample_rate,
                                       std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
    std::normal_distribution<double> gauss(0.0, std::sqrt(1.0 / (2.0 * kNumSinusoids)));
    std::vector<cplx> phasor(kNumSinusoids), rot(kNumSinusoids);
    for (int m = 0; m < kNumSinusoids; ++m) {
        const double angle = uni(rng);
        const double freq = doppler_hz * std::cos(angle);
        const double step = 2.0 * std::numbers::pi * freq / sample_rate;
        rot[m] = cplx(std::cos(step), std::sin(step));
        phasor[m] = cplx(gauss(rng), gauss(rng));
    }
    std::vector<cplx> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc(0.0, 0.0);
        for (int m = 0; m < kNumSinusoids; ++m) {
            acc += phasor[m];
            phasor[m] *= rot[m];
        }
        g[i] = acc;
    }
    return g;
}

}  // namespace detail

// Unit-mean-power flat fading gain process at the PHY sample rate.
inline FadingRealization make_fading(ChannelFamily family, std::size_t n_samples,
                                     double doppler_hz, double rician_k_db,
                                     std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("make_fading: need at least one sample");
    if (doppler_hz < 0) throw std::invalid_argument("make_fading: negative Doppler");
    if (family == ChannelFamily::awgn)
        throw std::invalid_argument("make_fading: AWGN has no fading process");

    const double fs = phy_params().sample_rate;
    std::mt19937_64 rng = make_engine(seed);

    FadingRealization real;
    real.doppler_hz = doppler_hz;
    real.gains = detail::diffuse_gains(n_samples, doppler_hz, fs, rng);

    if (family == ChannelFamily::rician) {
        const double k = std::pow(10.0, rician_k_db / 10.0);
        const double los_amp = std::sqrt(k / (k + 1.0));
        const double diff_amp = std::sqrt(1.0 / (k + 1.0));
        std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
        const double phase0 = uni(rng);
        const double step = 2.0 * std::numbers::pi * doppler_hz / fs;
        const cplx rot(std::cos(step), std::sin(step));
        cplx los(los_amp * std::cos(phase0), los_amp * std::sin(phase0));
        for (std::size_t i = 0; i < n_samples; ++i) {
            real.gains[i] = los + diff_amp * real.gains[i];
            los *= rot;
        }
    }
    return real;
}

// Full scenario application.  Fading multiplies the stream pointwise; the
// noise level is then set against the *pre-fading* input power (the fading
// process has unit mean power, so this is the long-run average SNR rather
// than the per-realization instantaneous one).
inline std::vector<cplx> apply_channel(const std::vector<cplx>& x,
                                       const ChannelScenario& sc) {
    if (x.empty()) throw std::invalid_argument("apply_channel: empty input");
    const std::uint64_t noise_seed = derive_seed(sc.seed, 2);
    if (sc.family == ChannelFamily::awgn) {
        return apply_awgn(x, sc.snr_db, noise_seed);
    }
    const double fd = doppler_shift(sc.speed_kmh, sc.carrier_frequency);
    const FadingRealization fading =
        make_fading(sc.family, x.size(), fd, sc.rician_k_db, derive_seed(sc.seed, 1));
    std::vector<cplx> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * fading.gains[i];
    double p_sig = measure_power(x);
    if (p_sig == 0.0) p_sig = 1.0;
    const double n0 = p_sig * std::pow(10.0, -sc.snr_db / 10.0);
    return add_noise(std::move(y), n0, noise_seed);
}

}  // namespace wavephy
