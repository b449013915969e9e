#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "wavephy/bits.hpp"
#include "wavephy/channel.hpp"
#include "wavephy/numerology.hpp"
#include "wavephy/rng.hpp"
#include "wavephy/rxchain.hpp"
#include "wavephy/txchain.hpp"

namespace wavephy {

// Closed-form references used to calibrate the channel implementations.
enum class TheoreticalKind { bpsk_awgn_uncoded, bpsk_rayleigh_uncoded };

inline double theoretical_ber(TheoreticalKind kind, double snr_db) {
    const double g = std::pow(10.0, snr_db / 10.0);
    switch (kind) {
        case TheoreticalKind::bpsk_awgn_uncoded:
            return 0.5 * std::erfc(std::sqrt(g));  // Q(sqrt(2g))
        case TheoreticalKind::bpsk_rayleigh_uncoded:
            return 0.5 * (1.0 - std::sqrt(g / (1.0 + g)));
    }
    throw std::invalid_argument("unknown theoretical kind");
}

struct StopRule {
    std::size_t min_bits = 100000;
    std::size_t min_errors = 100;
    std::size_t max_frames = 100000;
};

struct BerPoint {
    std::string scenario;
    std::string mode;
    ChannelFamily channel = ChannelFamily::awgn;
    double speed_kmh = 0.0;
    std::size_t symbols_per_frame = 0;
    double snr_db = 0.0;
    std::size_t bits = 0;
    std::size_t bit_errors = 0;
    std::size_t frames = 0;
    std::size_t frame_errors = 0;
    double ber = 0.0;
    double ci95 = 0.0;
};

inline double binomial_ci95(double p, std::size_t n) {
    if (n == 0) return 0.0;
    return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// One grid point, fully resolved.
struct PointSpec {
    std::string scenario = "custom";
    McsMode mode = mcs_table()[0];
    ChannelFamily channel = ChannelFamily::awgn;
    double speed_kmh = 0.0;
    std::size_t symbols_per_frame = 30;
    double snr_db = 0.0;
    double rician_k_db = 6.0;
    double carrier_frequency = 5.9e9;
};

// Monte-Carlo loop for one point: random payload -> transmit -> channel ->
// receive -> count.  Stops once both floors are met or the frame cap is
// hit.  Every frame's randomness derives only from (point_seed, frame
// index), so a point is reproducible in isolation.  When per_frame_errors
// is given it receives one error count per simulated frame (errors arrive
// in bursts, so frame-level counts are what honest uncertainty estimates
// need).
inline BerPoint run_ber_point(const PointSpec& spec, const StopRule& stop,
                              std::uint64_t point_seed,
                              std::vector<std::size_t>* per_frame_errors = nullptr) {
    const std::size_t capacity = frame_capacity_bits(spec.mode, spec.symbols_per_frame);
    BerPoint pt;
    pt.scenario = spec.scenario;
    pt.mode = spec.mode.name;
    pt.channel = spec.channel;
    pt.speed_kmh = spec.speed_kmh;
    pt.symbols_per_frame = spec.symbols_per_frame;
    pt.snr_db = spec.snr_db;

    while (pt.frames < stop.max_frames &&
           !(pt.bit_errors >= stop.min_errors && pt.bits >= stop.min_bits)) {
        std::mt19937_64 payload_rng = make_engine(derive_seed(point_seed, pt.frames, 1));
        const BitSeq payload = random_bits(capacity, payload_rng);
        const TxFrame frame = transmit_frame(payload, spec.mode, spec.symbols_per_frame);

        ChannelScenario sc;
        sc.family = spec.channel;
        sc.snr_db = spec.snr_db;
        sc.speed_kmh = spec.speed_kmh;
        sc.rician_k_db = spec.rician_k_db;
        sc.carrier_frequency = spec.carrier_frequency;
        sc.seed = derive_seed(point_seed, pt.frames, 2);
        const std::vector<cplx> rx = apply_channel(frame_samples(frame), sc);

        const BitSeq decoded = receive_frame(rx, spec.mode, spec.symbols_per_frame);
        const std::size_t errors = count_bit_errors(payload, decoded);

        pt.bits += capacity;
        pt.bit_errors += errors;
        pt.frames += 1;
        if (errors > 0) pt.frame_errors += 1;
        if (per_frame_errors != nullptr) per_frame_errors->push_back(errors);
    }
    pt.ber = pt.bits ? static_cast<double>(pt.bit_errors) / static_cast<double>(pt.bits) : 0.0;
    pt.ci95 = binomial_ci95(pt.ber, pt.bits);
    return pt;
}

struct SweepConfig {
    std::string scenario = "custom";
    std::vector<McsMode> modes;
    std::vector<ChannelFamily> channels{ChannelFamily::awgn};
    std::vector<double> speeds{0.0};
    std::vector<std::size_t> symbols_per_frame{30};
    std::vector<double> snr_grid;
    double rician_k_db = 6.0;
    double carrier_frequency = 5.9e9;
    StopRule stop;
    std::uint64_t seed = 1;

    void validate() const {
        if (modes.empty()) throw std::invalid_argument("sweep: no modes selected");
        if (channels.empty()) throw std::invalid_argument("sweep: no channels selected");
        if (speeds.empty()) throw std::invalid_argument("sweep: no speeds given");
        if (symbols_per_frame.empty()) throw std::invalid_argument("sweep: no frame sizes given");
        if (snr_grid.empty()) throw std::invalid_argument("sweep: empty SNR grid");
        for (std::size_t i = 1; i < snr_grid.size(); ++i)
            if (!(snr_grid[i] > snr_grid[i - 1]))
                throw std::invalid_argument("sweep: SNR grid must be strictly increasing");
        for (double s : speeds)
            if (s < 0) throw std::invalid_argument("sweep: negative speed");
        for (std::size_t n : symbols_per_frame)
            if (n < 1) throw std::invalid_argument("sweep: frame must hold at least one symbol");
        if (stop.min_bits < 1) throw std::invalid_argument("sweep: min_bits must be >= 1");
    }
};

// Expand a config to its point list in deterministic product order:
// modes (outer) x channels x speeds x symbols_per_frame x snr_grid (inner).
inline std::vector<PointSpec> sweep_points(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<PointSpec> out;
    out.reserve(cfg.modes.size() * cfg.channels.size() * cfg.speeds.size() *
                cfg.symbols_per_frame.size() * cfg.snr_grid.size());
    for (const McsMode& m : cfg.modes)
        for (ChannelFamily ch : cfg.channels)
            for (double sp : cfg.speeds)
                for (std::size_t sym : cfg.symbols_per_frame)
                    for (double snr : cfg.snr_grid) {
                        PointSpec p;
                        p.scenario = cfg.scenario;
                        p.mode = m;
                        p.channel = ch;
                        p.speed_kmh = sp;
                        p.symbols_per_frame = sym;
                        p.snr_db = snr;
                        p.rician_k_db = cfg.rician_k_db;
                        p.carrier_frequency = cfg.carrier_frequency;
                        out.push_back(std::move(p));
                    }
    return out;
}

// Run every point of the sweep.  Points are independent (each is seeded
// from (config.seed, point index) alone), so any number of worker threads
// produces the same result vector in the same order.
inline std::vector<BerPoint> run_sweep(const SweepConfig& cfg, unsigned jobs = 1) {
    const std::vector<PointSpec> specs = sweep_points(cfg);
    std::vector<BerPoint> results(specs.size());
    auto run_one = [&](std::size_t i) {
        results[i] = run_ber_point(specs[i], cfg.stop, derive_seed(cfg.seed, i));
    };
    if (jobs <= 1 || specs.size() <= 1) {
        for (std::size_t i = 0; i < specs.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1))
                run_one(i);
        };
        std::vector<std::thread> pool;
        const unsigned n = jobs < specs.size() ? jobs : static_cast<unsigned>(specs.size());
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

// Scenario presets mirroring the experiment families the simulator is
// built around.  A "-<mode>" suffix (e.g. "fig7-bpsk12") restricts any
// preset to a single MCS mode.
inline SweepConfig preset(std::string_view name) {
    const auto all_modes = [] {
        return std::vector<McsMode>(mcs_table().begin(), mcs_table().end());
    };
    const auto snr_0_30 = [] {
        std::vector<double> g;
        for (int s = 0; s <= 30; s += 2) g.push_back(s);
        return g;
    };

    std::string_view base = name;
    std::string_view mode_suffix;
    if (const auto dash = name.find('-'); dash != std::string_view::npos) {
        base = name.substr(0, dash);
        mode_suffix = name.substr(dash + 1);
    }

    SweepConfig cfg;
    cfg.scenario = std::string(name);
    cfg.modes = all_modes();
    if (base == "fig5") {
        cfg.channels = {ChannelFamily::rician};
        cfg.speeds = {0, 20, 50};
        cfg.symbols_per_frame = {30};
        cfg.snr_grid = snr_0_30();
    } else if (base == "fig6") {
        cfg.modes = {mcs_table()[0]};  // BPSK 1/2 only
        cfg.channels = {ChannelFamily::rician};
        cfg.speeds = {0, 20, 50};
        cfg.symbols_per_frame = {30};
        cfg.snr_grid = snr_0_30();
    } else if (base == "fig7") {
        cfg.channels = {ChannelFamily::awgn, ChannelFamily::rayleigh, ChannelFamily::rician};
        cfg.speeds = {50};
        cfg.symbols_per_frame = {30};
        cfg.snr_grid = snr_0_30();
    } else if (base == "fig8") {
        cfg.channels = {ChannelFamily::rician};
        cfg.speeds = {50};
        cfg.symbols_per_frame = {1, 5, 10, 20, 30, 50, 100};
        cfg.snr_grid = {10};
    } else {
        throw std::invalid_argument("unknown preset '" + std::string(name) +
                                    "' (valid: fig5 fig6 fig7 fig8, optionally with a "
                                    "-<mode> suffix such as fig7-bpsk12)");
    }
    if (!mode_suffix.empty()) cfg.modes = {mode_from_name(mode_suffix)};
    return cfg;
}

// ---------------------------------------------------------------------------
// Uncoded antipodal-BPSK reference simulations.  These bypass the OFDM
// chain entirely: one unit-energy real symbol per bit, complex noise, and
// (for Rayleigh) an independent CN(0,1) gain per bit with coherent
// detection.  They exist to pin the channel implementations against the
// closed forms of theoretical_ber.

struct UncodedResult {
    std::size_t bits = 0;
    std::size_t errors = 0;
    double ber = 0.0;
    double ci95 = 0.0;
};

inline UncodedResult uncoded_bpsk_ber(ChannelFamily family, double snr_db,
                                      std::size_t n_bits, std::uint64_t seed) {
    if (family == ChannelFamily::rician)
        throw std::invalid_argument("uncoded reference covers awgn and rayleigh only");
    std::mt19937_64 rng = make_engine(seed);
    const double n0 = std::pow(10.0, -snr_db / 10.0);
    std::normal_distribution<double> noise(0.0, std::sqrt(n0 / 2.0));
    std::normal_distribution<double> gain(0.0, std::sqrt(0.5));
    std::uniform_int_distribution<int> coin(0, 1);

    UncodedResult r;
    r.bits = n_bits;
    for (std::size_t i = 0; i < n_bits; ++i) {
        const int bit = coin(rng);
        const double x = bit ? 1.0 : -1.0;
        double metric;
        if (family == ChannelFamily::awgn) {
            metric = x + noise(rng);
        } else {
            const cplx h(gain(rng), gain(rng));
            const cplx y = h * x + cplx(noise(rng), noise(rng));
            metric = (std::conj(h) * y).real();
        }
        const int decided = metric > 0.0 ? 1 : 0;
        if (decided != bit) ++r.errors;
    }
    r.ber = static_cast<double>(r.errors) / static_cast<double>(r.bits);
    r.ci95 = binomial_ci95(r.ber, r.bits);
    return r;
}

// ---------------------------------------------------------------------------
// CSV output

inline std::string format_g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline void write_csv(const std::vector<BerPoint>& points, std::ostream& os,
                      std::uint64_t seed) {
    os << "# snr_convention=average-snr-over-occupied-baseband-samples"
          " (signal power measured on the transmitted frame before fading;"
          " fading has unit mean power); seed=" << seed << "\n";
    os << "scenario,mode,channel,speed_kmh,symbols_per_frame,snr_db,bits,bit_errors,"
          "frames,frame_errors,ber,ci95\n";
    for (const BerPoint& p : points) {
        os << p.scenario << ',' << p.mode << ',' << channel_family_name(p.channel) << ','
           << format_g6(p.speed_kmh) << ',' << p.symbols_per_frame << ','
           << format_g6(p.snr_db) << ',' << p.bits << ',' << p.bit_errors << ','
           << p.frames << ',' << p.frame_errors << ',' << format_g6(p.ber) << ','
           << format_g6(p.ci95) << "\n";
    }
}

inline void write_csv(const std::vector<BerPoint>& points, const std::string& path,
                      std::uint64_t seed) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    write_csv(points, f, seed);
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace wavephy
