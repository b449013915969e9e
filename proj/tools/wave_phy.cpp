// wave-phy: command-line front end for the 10 MHz vehicular PHY simulator.
//
//   wave-phy sweep  --config cfg.json --out points.csv [--plot dir] [--jobs N]
//   wave-phy preset fig7 --out points.csv [stop-rule overrides] [--jobs N]
//   wave-phy validate             closed-form BER oracle self-check
//   wave-phy encode --iq f.iq     build one frame and dump its samples
//   wave-phy decode --iq f.iq     decode a dumped frame back to bits

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wavephy/wavephy.hpp"

namespace {

using namespace wavephy;

void emit_outputs(const std::vector<BerPoint>& points, const SweepConfig& cfg,
                  const std::string& out_csv, const std::string& plot_dir) {
    write_csv(points, out_csv, cfg.seed);
    std::cout << "wrote " << points.size() << " points to " << out_csv << "\n";
    if (!plot_dir.empty()) {
        std::filesystem::create_directories(plot_dir);
        const std::string svg = plot_dir + "/" + cfg.scenario + ".svg";
        write_sweep_svg(points, svg);
        std::cout << "wrote plot " << svg << "\n";
    }
}

int cmd_validate(std::uint64_t seed, std::size_t bits) {
    struct Case {
        TheoreticalKind kind;
        ChannelFamily family;
        double snr_db;
    };
    const Case cases[] = {
        {TheoreticalKind::bpsk_awgn_uncoded, ChannelFamily::awgn, 4.0},
        {TheoreticalKind::bpsk_awgn_uncoded, ChannelFamily::awgn, 6.0},
        {TheoreticalKind::bpsk_awgn_uncoded, ChannelFamily::awgn, 8.0},
        {TheoreticalKind::bpsk_rayleigh_uncoded, ChannelFamily::rayleigh, 0.0},
        {TheoreticalKind::bpsk_rayleigh_uncoded, ChannelFamily::rayleigh, 10.0},
        {TheoreticalKind::bpsk_rayleigh_uncoded, ChannelFamily::rayleigh, 20.0},
    };
    bool all_ok = true;
    std::printf("%-22s %8s %12s %12s %8s  %s\n", "channel", "snr_db", "simulated", "closed_form",
                "sigmas", "verdict");
    int i = 0;
    for (const Case& c : cases) {
        const UncodedResult r = uncoded_bpsk_ber(c.family, c.snr_db, bits, derive_seed(seed, i++));
        const double p = theoretical_ber(c.kind, c.snr_db);
        const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(bits));
        const double dev = sigma > 0 ? std::abs(r.ber - p) / sigma : 0.0;
        const bool ok = dev <= 3.0;
        all_ok = all_ok && ok;
        std::printf("%-22s %8.6g %12.5g %12.5g %8.2f  %s\n",
                    c.family == ChannelFamily::awgn ? "uncoded-bpsk-awgn" : "uncoded-bpsk-rayleigh",
                    c.snr_db, r.ber, p, dev, ok ? "PASS" : "FAIL");
    }
    std::printf("%s\n", all_ok ? "all oracles PASS" : "oracle check FAILED");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"10 MHz vehicular OFDM PHY simulator"};
    app.require_subcommand(1);

    // --- sweep ---
    auto* sweep = app.add_subcommand("sweep", "run a Monte-Carlo sweep from a JSON config");
    std::string cfg_path, out_csv, plot_dir;
    unsigned jobs = 1;
    sweep->add_option("--config", cfg_path, "JSON sweep configuration")
        ->required()
        ->check(CLI::ExistingFile);
    sweep->add_option("--out", out_csv, "output CSV path")->required();
    sweep->add_option("--plot", plot_dir, "also write an SVG plot into this directory");
    sweep->add_option("--jobs", jobs, "worker threads (default 1)");

    // --- preset ---
    auto* pre = app.add_subcommand("preset", "run a built-in scenario preset");
    std::string preset_name, pre_out, pre_plot;
    unsigned pre_jobs = 1;
    std::uint64_t pre_seed = 1;
    std::size_t ov_min_bits = 0, ov_min_errors = 0, ov_max_frames = 0;
    pre->add_option("name", preset_name,
                    "fig5 | fig6 | fig7 | fig8, optionally with -<mode> (e.g. fig7-bpsk12)")
        ->required();
    pre->add_option("--out", pre_out, "output CSV path")->required();
    pre->add_option("--plot", pre_plot, "also write an SVG plot into this directory");
    pre->add_option("--jobs", pre_jobs, "worker threads (default 1)");
    pre->add_option("--seed", pre_seed, "sweep seed (default 1)");
    pre->add_option("--min-bits", ov_min_bits, "override stop rule: minimum bits per point");
    pre->add_option("--min-errors", ov_min_errors, "override stop rule: minimum bit errors per point");
    pre->add_option("--max-frames", ov_max_frames, "override stop rule: frame cap per point");

    // --- validate ---
    auto* val = app.add_subcommand("validate", "check channels against closed-form BER oracles");
    std::uint64_t val_seed = 1;
    std::size_t val_bits = 1000000;
    val->add_option("--seed", val_seed, "oracle simulation seed (default 1)");
    val->add_option("--bits", val_bits, "bits per oracle point (default 1e6)");

    // --- encode ---
    auto* enc = app.add_subcommand("encode", "transmit one frame into an I/Q sample file");
    std::string enc_iq, enc_mode = "bpsk12", enc_bits_in, enc_bits_out;
    std::size_t enc_symbols = 30;
    std::uint64_t enc_seed = 1;
    enc->add_option("--iq", enc_iq, "output I/Q file (interleaved float32 LE)")->required();
    enc->add_option("--mode", enc_mode, "MCS mode name (default bpsk12)");
    enc->add_option("--symbols", enc_symbols, "data OFDM symbols per frame (default 30)");
    enc->add_option("--seed", enc_seed, "payload RNG seed when --bits-in is absent");
    enc->add_option("--bits-in", enc_bits_in, "payload bits from this text file instead of random")
        ->check(CLI::ExistingFile);
    enc->add_option("--bits-out", enc_bits_out, "record the transmitted payload bits here");

    // --- decode ---
    auto* dec = app.add_subcommand("decode", "decode an I/Q sample file back to payload bits");
    std::string dec_iq, dec_mode = "bpsk12", dec_bits_out;
    std::size_t dec_symbols = 30, dec_offset = 0;
    bool dec_sync = false;
    dec->add_option("--iq", dec_iq, "input I/Q file")->required()->check(CLI::ExistingFile);
    dec->add_option("--mode", dec_mode, "MCS mode name (default bpsk12)");
    dec->add_option("--symbols", dec_symbols, "data OFDM symbols per frame (default 30)");
    dec->add_option("--offset", dec_offset, "known frame start sample (default 0)");
    dec->add_flag("--sync", dec_sync, "estimate the frame start instead of using --offset");
    dec->add_option("--bits-out", dec_bits_out, "write decoded bits here (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep) {
            const SweepConfig cfg = load_sweep_config(cfg_path);
            emit_outputs(run_sweep(cfg, jobs), cfg, out_csv, plot_dir);
        } else if (*pre) {
            SweepConfig cfg = preset(preset_name);
            cfg.seed = pre_seed;
            if (ov_min_bits) cfg.stop.min_bits = ov_min_bits;
            if (ov_min_errors) cfg.stop.min_errors = ov_min_errors;
            if (ov_max_frames) cfg.stop.max_frames = ov_max_frames;
            emit_outputs(run_sweep(cfg, pre_jobs), cfg, pre_out, pre_plot);
        } else if (*val) {
            return cmd_validate(val_seed, val_bits);
        } else if (*enc) {
            const McsMode& mode = mode_from_name(enc_mode);
            const std::size_t capacity = frame_capacity_bits(mode, enc_symbols);
            BitSeq payload;
            if (!enc_bits_in.empty()) {
                payload = read_bits(enc_bits_in);
                if (payload.size() > capacity)
                    throw std::invalid_argument("payload file exceeds frame capacity of " +
                                                std::to_string(capacity) + " bits");
            } else {
                std::mt19937_64 rng = make_engine(enc_seed);
                payload = random_bits(capacity, rng);
            }
            const TxFrame frame = transmit_frame(payload, mode, enc_symbols);
            write_iq(enc_iq, frame_samples(frame));
            if (!enc_bits_out.empty()) write_bits(enc_bits_out, payload);
            std::cout << "wrote " << frame_sample_count(enc_symbols) << " samples (" << enc_mode
                      << ", " << payload.size() << " payload bits) to " << enc_iq << "\n";
        } else if (*dec) {
            const McsMode& mode = mode_from_name(dec_mode);
            const std::vector<cplx> rx = read_iq(dec_iq);
            std::size_t offset = dec_offset;
            if (dec_sync) {
                const auto found = synchronize(rx);
                if (!found) throw std::runtime_error("no frame detected in " + dec_iq);
                offset = *found;
                std::cout << "frame start estimated at sample " << offset << "\n";
            }
            const BitSeq bits = receive_frame(rx, mode, dec_symbols, SIZE_MAX, 0x7f, offset);
            if (!dec_bits_out.empty()) {
                write_bits(dec_bits_out, bits);
                std::cout << "wrote " << bits.size() << " bits to " << dec_bits_out << "\n";
            } else {
                for (std::size_t i = 0; i < bits.size(); ++i) {
                    std::cout << int(bits[i]);
                    if ((i + 1) % 64 == 0) std::cout << "\n";
                }
                if (bits.size() % 64 != 0) std::cout << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
