// config.cpp — RunConfig parsing and validation

#include "bjlab/config.hpp"

#include "bjlab/errors.hpp"
#include "bjlab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace bjlab {

namespace {

using Kind = ValidationError::Kind;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        auto t = trim(item);
        if (!t.empty()) out.push_back(std::move(t));
    }
    return out;
}

double parse_double(const std::string& key, const std::string& text) {
    const auto t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw ValidationError(Kind::BadArgument, key, key + ": expected a number, got '" + text + "'");
    }
    return v;
}

long long parse_integer(const std::string& key, const std::string& text) {
    const auto t = trim(text);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw ValidationError(Kind::BadArgument, key, key + ": expected an integer, got '" + text + "'");
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
    const auto t = trim(text);
    if (t == "true" || t == "1" || t == "yes") return true;
    if (t == "false" || t == "0" || t == "no") return false;
    throw ValidationError(Kind::BadArgument, key, key + ": expected true/false, got '" + text + "'");
}

} // namespace

void apply_setting(RunConfig& cfg, const std::string& raw_key, const std::string& value) {
    const std::string key = trim(raw_key);
    if (key == "m") {
        const auto v = parse_integer(key, value);
        if (v < 0 || v > 100000) throw ValidationError(Kind::NegativeHalfWidth, key, "m must be in [0, 100000]");
        cfg.model.m = static_cast<int>(v);
    } else if (key == "vbar") {
        cfg.model.vbar = parse_double(key, value);
    } else if (key == "epsilon") {
        cfg.model.epsilon = parse_double(key, value);
    } else if (key == "omega_s") {
        cfg.model.omega_s = parse_double(key, value);
    } else if (key == "t_final") {
        cfg.t_final = parse_double(key, value);
    } else if (key == "dt_max") {
        cfg.dt_max = parse_double(key, value);
    } else if (key == "sample_stride") {
        const auto v = parse_integer(key, value);
        if (v < 1) throw ValidationError(Kind::BadArgument, key, "sample_stride must be >= 1");
        cfg.sample_stride = static_cast<std::size_t>(v);
    } else if (key == "tracked_k") {
        std::vector<int> ks;
        for (const auto& item : split_list(value)) ks.push_back(static_cast<int>(parse_integer(key, item)));
        cfg.tracked_k = std::move(ks);
    } else if (key == "fit_window") {
        const auto items = split_list(value);
        if (items.size() != 2) throw ValidationError(Kind::BadArgument, key, "fit_window needs two values: lo, hi");
        cfg.fit_window = FitWindow{parse_double(key, items[0]), parse_double(key, items[1])};
    } else if (key == "peak_prominence") {
        cfg.peak_prominence = parse_double(key, value);
    } else if (key == "allow_coarse") {
        cfg.allow_coarse = parse_bool(key, value);
    } else {
        throw ValidationError(Kind::BadArgument, key, "unknown config key '" + key + "'");
    }
}

void load_config_file(RunConfig& cfg, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(Kind::BadArgument, "config", "cannot open config file " + path.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ValidationError(Kind::BadArgument, "config",
                                  path.string() + ":" + std::to_string(lineno) + ": expected key = value");
        }
        apply_setting(cfg, body.substr(0, eq), body.substr(eq + 1));
    }
}

void validate(const RunConfig& cfg) {
    validate(cfg.model);
    if (!std::isfinite(cfg.t_final) || !(cfg.t_final > 0.0)) {
        throw ValidationError(Kind::BadArgument, "t_final", "t_final must be finite and > 0");
    }
    if (!std::isfinite(cfg.dt_max) || !(cfg.dt_max > 0.0)) {
        throw ValidationError(Kind::BadArgument, "dt_max", "dt_max must be finite and > 0");
    }
    if (cfg.dt_max > kDefaultDtMax && !cfg.allow_coarse) {
        throw ValidationError(Kind::BadArgument, "dt_max", "dt_max above 0.001 requires --allow-coarse");
    }
    if (cfg.sample_stride < 1) throw ValidationError(Kind::BadArgument, "sample_stride", "sample_stride must be >= 1");
    if (cfg.tracked_k) {
        for (int k : *cfg.tracked_k) {
            if (!StateIndex::dark(k).valid_for(cfg.model)) {
                throw ValidationError(Kind::BadIndex, "tracked_k",
                                      "tracked k = " + std::to_string(k) + " outside [-m, m]");
            }
        }
    }
    if (cfg.fit_window) {
        const auto w = *cfg.fit_window;
        if (!std::isfinite(w.lo) || !std::isfinite(w.hi) || !(w.lo < w.hi)) {
            throw ValidationError(Kind::BadArgument, "fit_window", "fit_window must satisfy lo < hi");
        }
    }
    if (!std::isfinite(cfg.peak_prominence) || cfg.peak_prominence < 0.0) {
        throw ValidationError(Kind::BadArgument, "peak_prominence", "peak_prominence must be >= 0");
    }
}

std::vector<int> tracked_states(const RunConfig& cfg) {
    if (cfg.tracked_k) return *cfg.tracked_k;
    std::vector<int> ks;
    for (int k : {0, 1, 2}) {
        if (k <= cfg.model.m) ks.push_back(k);
    }
    return ks;
}

IntegrateOptions integrate_options(const RunConfig& cfg) {
    IntegrateOptions o;
    o.dt_max = cfg.dt_max;
    o.sample_stride = cfg.sample_stride;
    o.allow_coarse = cfg.allow_coarse;
    return o;
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("m", std::to_string(cfg.model.m));
    e.emplace_back("vbar", format_number(cfg.model.vbar));
    e.emplace_back("epsilon", format_number(cfg.model.epsilon));
    e.emplace_back("omega_s", format_number(cfg.model.omega_s));
    e.emplace_back("t_final", format_number(cfg.t_final));
    e.emplace_back("dt_max", format_number(cfg.dt_max));
    e.emplace_back("sample_stride", std::to_string(cfg.sample_stride));
    std::string ks;
    for (int k : tracked_states(cfg)) ks += (ks.empty() ? "" : ", ") + std::to_string(k);
    e.emplace_back("tracked_k", ks);
    if (cfg.fit_window) {
        e.emplace_back("fit_window", format_number(cfg.fit_window->lo) + ", " + format_number(cfg.fit_window->hi));
    }
    e.emplace_back("peak_prominence", format_number(cfg.peak_prominence));
    e.emplace_back("allow_coarse", cfg.allow_coarse ? "true" : "false");
    return e;
}

} // namespace bjlab
