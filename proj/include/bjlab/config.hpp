// config.hpp — Run configuration: flat key/value files plus flag overrides
//
// File format, one setting per line:
//
//   # comment
//   m = 12
//   vbar = 0.10
//   tracked_k = 0, 1, 2
//   fit_window = 1.0, 20.0
//
// Keys: m, vbar, epsilon, omega_s, t_final, dt_max, sample_stride, tracked_k,
// fit_window, peak_prominence, allow_coarse.

#pragma once

#include "bjlab/analysis.hpp"
#include "bjlab/model.hpp"
#include "bjlab/ode.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bjlab {

struct RunConfig {
    ModelParams model{};
    double t_final{60.0};
    double dt_max{kDefaultDtMax};
    std::size_t sample_stride{kDefaultSampleStride};
    // Unset means {0, 1, 2} clipped to [-m, m].
    std::optional<std::vector<int>> tracked_k;
    std::optional<FitWindow> fit_window;
    double peak_prominence{kDefaultPeakProminence};
    bool allow_coarse{false};
};

// Applies one key/value setting. Throws ValidationError on an unknown key or
// a malformed value.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// Applies every setting in a config file, in file order.
void load_config_file(RunConfig& cfg, const std::filesystem::path& path);

// Full range and consistency check. Throws ValidationError.
void validate(const RunConfig& cfg);

// Dark states written to trajectory CSVs.
std::vector<int> tracked_states(const RunConfig& cfg);

IntegrateOptions integrate_options(const RunConfig& cfg);

// Settings as ordered (key, value) text pairs; feeding them back through
// apply_setting reproduces cfg.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg);

} // namespace bjlab
