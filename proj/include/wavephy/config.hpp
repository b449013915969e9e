#pragma once

#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wavephy/channel.hpp"
#include "wavephy/harness.hpp"
#include "wavephy/numerology.hpp"

namespace wavephy {

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj, const std::set<std::string>& known,
                                const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!known.count(key))
            throw std::invalid_argument("config: unknown key '" + key + "' in " + where);
    }
}

}  // namespace detail

// Build a SweepConfig from its JSON form.  Every field is optional and
// falls back to the SweepConfig default; unknown keys are rejected so a
// typo cannot silently run the wrong experiment.
inline SweepConfig parse_sweep_config(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
    detail::reject_unknown_keys(
        j,
        {"scenario", "modes", "channel", "channels", "rician_k_db", "carrier_frequency",
         "snr_grid", "speeds", "symbols_per_frame", "stop_rule", "seed"},
        "top level");
    if (j.contains("channel") && j.contains("channels"))
        throw std::invalid_argument("config: give either 'channel' or 'channels', not both");

    SweepConfig cfg;
    cfg.modes.assign(mcs_table().begin(), mcs_table().end());

    if (j.contains("scenario")) cfg.scenario = j.at("scenario").get<std::string>();
    if (j.contains("modes")) {
        const auto& m = j.at("modes");
        cfg.modes.clear();
        if (m.is_string()) {
            if (m.get<std::string>() == "all")
                cfg.modes.assign(mcs_table().begin(), mcs_table().end());
            else
                cfg.modes.push_back(mode_from_name(m.get<std::string>()));
        } else if (m.is_array()) {
            for (const auto& name : m) cfg.modes.push_back(mode_from_name(name.get<std::string>()));
        } else {
            throw std::invalid_argument("config: 'modes' must be a name, an array of names, or \"all\"");
        }
    }
    if (j.contains("channel"))
        cfg.channels = {channel_family_from_name(j.at("channel").get<std::string>())};
    if (j.contains("channels")) {
        cfg.channels.clear();
        for (const auto& name : j.at("channels"))
            cfg.channels.push_back(channel_family_from_name(name.get<std::string>()));
    }
    if (j.contains("rician_k_db")) cfg.rician_k_db = j.at("rician_k_db").get<double>();
    if (j.contains("carrier_frequency")) cfg.carrier_frequency = j.at("carrier_frequency").get<double>();
    if (j.contains("snr_grid")) cfg.snr_grid = j.at("snr_grid").get<std::vector<double>>();
    if (j.contains("speeds")) cfg.speeds = j.at("speeds").get<std::vector<double>>();
    if (j.contains("symbols_per_frame"))
        cfg.symbols_per_frame = j.at("symbols_per_frame").get<std::vector<std::size_t>>();
    if (j.contains("stop_rule")) {
        const auto& s = j.at("stop_rule");
        if (!s.is_object()) throw std::invalid_argument("config: 'stop_rule' must be an object");
        detail::reject_unknown_keys(s, {"min_bits", "min_errors", "max_frames"}, "stop_rule");
        if (s.contains("min_bits")) cfg.stop.min_bits = s.at("min_bits").get<std::size_t>();
        if (s.contains("min_errors")) cfg.stop.min_errors = s.at("min_errors").get<std::size_t>();
        if (s.contains("max_frames")) cfg.stop.max_frames = s.at("max_frames").get<std::size_t>();
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();

    cfg.validate();
    return cfg;
}

inline SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config: " + path + " is not valid JSON: " + e.what());
    }
    return parse_sweep_config(j);
}

}  // namespace wavephy
