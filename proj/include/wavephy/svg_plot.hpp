#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavephy/harness.hpp"

namespace wavephy {

// Minimal static line plot: BER on a log axis against SNR (or against the
// frame size when the sweep varied frame size at a single SNR).  One
// polyline per (mode, channel, speed, frame-size) combination.  Zero-BER
// points cannot appear on a log axis and are skipped.
inline void write_sweep_svg(const std::vector<BerPoint>& points, const std::string& path) {
    if (points.empty()) throw std::invalid_argument("plot: no points");

    std::vector<double> snrs, xs_frame;
    for (const BerPoint& p : points) {
        snrs.push_back(p.snr_db);
        xs_frame.push_back(static_cast<double>(p.symbols_per_frame));
    }
    std::sort(snrs.begin(), snrs.end());
    snrs.erase(std::unique(snrs.begin(), snrs.end()), snrs.end());
    std::sort(xs_frame.begin(), xs_frame.end());
    xs_frame.erase(std::unique(xs_frame.begin(), xs_frame.end()), xs_frame.end());
    const bool x_is_frame_size = snrs.size() == 1 && xs_frame.size() > 1;
    const std::string x_label = x_is_frame_size ? "OFDM symbols per frame" : "SNR (dB)";

    // series key -> sorted (x, ber)
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    for (const BerPoint& p : points) {
        std::ostringstream key;
        key << p.mode << ' ' << channel_family_name(p.channel) << ' ' << format_g6(p.speed_kmh)
            << "km/h";
        if (!x_is_frame_size) key << ' ' << p.symbols_per_frame << "sym";
        const double x = x_is_frame_size ? static_cast<double>(p.symbols_per_frame) : p.snr_db;
        series[key.str()].emplace_back(x, p.ber);
    }
    for (auto& [key, pts] : series) std::sort(pts.begin(), pts.end());

    double x_lo = 1e300, x_hi = -1e300, ber_lo = 1.0;
    for (const auto& [key, pts] : series) {
        for (const auto& [x, ber] : pts) {
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            if (ber > 0) ber_lo = std::min(ber_lo, ber);
        }
    }
    if (x_hi <= x_lo) x_hi = x_lo + 1;
    const double ymax_log = 0.0;  // BER 1
    double ymin_log = std::floor(std::log10(std::max(ber_lo, 1e-12))) - 1.0;
    if (ymin_log > -2.0) ymin_log = -2.0;

    const double w = 760, h = 520, ml = 70, mr = 200, mt = 30, mb = 60;
    const double pw = w - ml - mr, ph = h - mt - mb;
    auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double ber) {
        const double l = std::log10(std::max(ber, 1e-300));
        return mt + (ymax_log - l) / (ymax_log - ymin_log) * ph;
    };

    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                     "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"};
    constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h
        << "' viewBox='0 0 " << w << ' ' << h << "'>\n"
        << "<rect width='100%' height='100%' fill='white'/>\n";

    // axes frame + grid
    svg << "<rect x='" << ml << "' y='" << mt << "' width='" << pw << "' height='" << ph
        << "' fill='none' stroke='black'/>\n";
    for (double l = ymax_log; l >= ymin_log - 0.5; l -= 1.0) {
        const double y = py(std::pow(10.0, l));
        svg << "<line x1='" << ml << "' y1='" << y << "' x2='" << ml + pw << "' y2='" << y
            << "' stroke='#dddddd'/>\n"
            << "<text x='" << ml - 8 << "' y='" << y + 4
            << "' text-anchor='end' font-size='12' font-family='sans-serif'>1e" << int(l)
            << "</text>\n";
    }
    const std::vector<double>& xticks = x_is_frame_size ? xs_frame : snrs;
    for (double x : xticks) {
        const double xp = px(x);
        svg << "<line x1='" << xp << "' y1='" << mt << "' x2='" << xp << "' y2='" << mt + ph
            << "' stroke='#eeeeee'/>\n"
            << "<text x='" << xp << "' y='" << mt + ph + 18
            << "' text-anchor='middle' font-size='12' font-family='sans-serif'>" << format_g6(x)
            << "</text>\n";
    }
    svg << "<text x='" << ml + pw / 2 << "' y='" << h - 15
        << "' text-anchor='middle' font-size='13' font-family='sans-serif'>" << x_label
        << "</text>\n"
        << "<text x='18' y='" << mt + ph / 2
        << "' text-anchor='middle' font-size='13' font-family='sans-serif' transform='rotate(-90 18 "
        << mt + ph / 2 << ")'>BER</text>\n";

    std::size_t idx = 0;
    for (const auto& [key, pts] : series) {
        const char* color = kPalette[idx % kPaletteSize];
        std::ostringstream poly;
        bool open = false;
        for (const auto& [x, ber] : pts) {
            if (ber <= 0) continue;  // not representable on the log axis
            poly << (open ? " " : "") << px(x) << ',' << py(ber);
            open = true;
            svg << "<circle cx='" << px(x) << "' cy='" << py(ber) << "' r='3' fill='" << color
                << "'/>\n";
        }
        if (open)
            svg << "<polyline points='" << poly.str() << "' fill='none' stroke='" << color
                << "' stroke-width='1.5'/>\n";
        const double ly = mt + 16 + 16 * static_cast<double>(idx);
        svg << "<line x1='" << ml + pw + 10 << "' y1='" << ly - 4 << "' x2='" << ml + pw + 30
            << "' y2='" << ly - 4 << "' stroke='" << color << "' stroke-width='2'/>\n"
            << "<text x='" << ml + pw + 35 << "' y='" << ly
            << "' font-size='11' font-family='sans-serif'>" << key << "</text>\n";
        ++idx;
    }
    svg << "</svg>\n";

    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << svg.str();
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace wavephy
