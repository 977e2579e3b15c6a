// commands.cpp — Runs, sweeps and artifact writers behind the bjlab tool

#include "bjlab/commands.hpp"

#include "bjlab/errors.hpp"
#include "bjlab/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>

namespace bjlab {

namespace {

using json = nlohmann::json;

json window_json(const std::optional<DecayFit>& fit) {
    if (!fit) return nullptr;
    return json::array({fit->window.lo, fit->window.hi});
}

json peak_json(const Peak& p) { return json{{"t", p.time}, {"value", p.value}}; }

json peaks_json(const PeakList& peaks) {
    json arr = json::array();
    for (const auto& p : peaks) arr.push_back(peak_json(p));
    return arr;
}

} // namespace

SimulationResult run_simulation(const RunConfig& cfg) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();

    SimulationResult r;
    r.config = cfg;
    r.trajectory = integrate(cfg.model, cfg.t_final, integrate_options(cfg));
    r.gamma_theory = golden_rule_gamma(cfg.model);
    r.max_conservation_dev = conservation_report(r.trajectory);

    const auto ps = probability_series(r.trajectory, StateIndex::bright());
    try {
        const FitWindow window =
            cfg.fit_window ? *cfg.fit_window : default_fit_window(ps, recurrence_time(cfg.model));
        r.fit = fit_exponential(ps, window);
    } catch (const FitError& e) {
        r.fit_error = e.what();
    }
    r.peaks = detect_peaks(ps, cfg.peak_prominence);

    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::optional<Peak> second_peak(const PeakList& peaks) {
    if (peaks.empty()) return std::nullopt;
    return *std::max_element(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) { return a.value < b.value; });
}

json config_json(const RunConfig& cfg) {
    json j{{"m", cfg.model.m},
           {"n", cfg.model.n()},
           {"vbar", cfg.model.vbar},
           {"epsilon", cfg.model.epsilon},
           {"omega_s", cfg.model.omega_s},
           {"t_final", cfg.t_final},
           {"dt_max", cfg.dt_max},
           {"sample_stride", cfg.sample_stride},
           {"tracked_k", tracked_states(cfg)},
           {"peak_prominence", cfg.peak_prominence},
           {"allow_coarse", cfg.allow_coarse}};
    j["fit_window"] = cfg.fit_window ? json::array({cfg.fit_window->lo, cfg.fit_window->hi}) : json(nullptr);
    return j;
}

json summary_json(const SimulationResult& r, bool record_runtime) {
    json j;
    j["config"] = config_json(r.config);
    j["gamma_theory"] = r.gamma_theory;
    j["gamma_fit"] = r.fit ? json(r.fit->gamma) : json(nullptr);
    j["fit_window"] = window_json(r.fit);
    j["rms_residual"] = r.fit ? json(r.fit->rms_residual) : json(nullptr);
    j["peaks"] = peaks_json(r.peaks);
    j["max_conservation_dev"] = r.max_conservation_dev;
    j["runtime_seconds"] = record_runtime ? json(r.runtime_seconds) : json(nullptr);
    return j;
}

SimulateOutcome cmd_simulate(const RunConfig& cfg, const OutputOptions& opts) {
    SimulateOutcome out;
    out.result = run_simulation(cfg);
    out.csv_path = opts.out_dir / "trajectory.csv";
    out.json_path = opts.out_dir / "summary.json";
    write_file_atomic(out.csv_path, trajectory_csv(cfg, out.result.trajectory));
    write_file_atomic(out.json_path, summary_json(out.result, opts.record_runtime).dump(2) + "\n");
    out.exit_code = out.result.fit ? kExitOk : kExitFitFailure;
    return out;
}

std::vector<SweepRow> run_sweep(const std::vector<RunConfig>& configs) {
    for (const auto& c : configs) validate(c);

    auto run_row = [](RunConfig cfg) {
        SweepRow row;
        row.config = cfg;
        row.gamma_theory = golden_rule_gamma(cfg.model);
        try {
            auto r = run_simulation(cfg);
            row.fit = r.fit;
            row.peaks = std::move(r.peaks);
            row.max_conservation_dev = r.max_conservation_dev;
            row.error = r.fit_error;
        } catch (const ConservationError& e) {
            row.error = e.what();
            row.conservation_violated = true;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        return row;
    };

    std::vector<std::future<SweepRow>> jobs;
    jobs.reserve(configs.size());
    for (const auto& c : configs) jobs.push_back(std::async(std::launch::async, run_row, c));
    std::vector<SweepRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

std::vector<RunConfig> sweep_n_configs(const RunConfig& base, const std::vector<int>& n_list) {
    std::vector<RunConfig> out;
    for (int n : n_list) {
        if (n < 2 || n % 2 != 0) {
            throw ValidationError(ValidationError::Kind::BadArgument, "n_list",
                                  "n must be even and >= 2 (n = 2m + 2), got " + std::to_string(n));
        }
        RunConfig c = base;
        c.model.m = n / 2 - 1;
        c.tracked_k.reset(); // sweeps emit no trajectories
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<RunConfig> sweep_v_configs(const RunConfig& base, const std::vector<double>& vbar_list) {
    std::vector<RunConfig> out;
    for (double v : vbar_list) {
        RunConfig c = base;
        c.model.vbar = v;
        out.push_back(std::move(c));
    }
    return out;
}

json sweep_json(const std::string& kind, const RunConfig& base, const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["n"] = r.config.model.n();
        j["m"] = r.config.model.m;
        j["vbar"] = r.config.model.vbar;
        j["gamma_theory"] = r.gamma_theory;
        j["gamma_fit"] = r.fit ? json(r.fit->gamma) : json(nullptr);
        j["fit_window"] = window_json(r.fit);
        j["rms_residual"] = r.fit ? json(r.fit->rms_residual) : json(nullptr);
        j["first_interior_peak"] = r.peaks.empty() ? json(nullptr) : peak_json(r.peaks.front());
        const auto second = second_peak(r.peaks);
        j["second_peak"] = second ? peak_json(*second) : json(nullptr);
        j["peaks"] = peaks_json(r.peaks);
        j["max_conservation_dev"] = r.max_conservation_dev;
        j["error"] = r.error.empty() ? json(nullptr) : json(r.error);
        arr.push_back(std::move(j));
    }
    return json{{"sweep", kind}, {"base_config", config_json(base)}, {"rows", std::move(arr)}};
}

namespace {

SweepOutcome finish_sweep(const std::string& kind, const RunConfig& base, std::vector<RunConfig> configs,
                          const OutputOptions& opts) {
    SweepOutcome out;
    out.rows = run_sweep(configs);
    out.json_path = opts.out_dir / (kind + ".json");
    write_file_atomic(out.json_path, sweep_json(kind, base, out.rows).dump(2) + "\n");
    for (const auto& r : out.rows) {
        if (r.conservation_violated) out.exit_code = kExitConservation;
    }
    return out;
}

} // namespace

SweepOutcome cmd_sweep_n(const RunConfig& base, const std::vector<int>& n_list, const OutputOptions& opts) {
    return finish_sweep("sweep_n", base, sweep_n_configs(base, n_list), opts);
}

SweepOutcome cmd_sweep_v(const RunConfig& base, const std::vector<double>& vbar_list, const OutputOptions& opts) {
    return finish_sweep("sweep_v", base, sweep_v_configs(base, vbar_list), opts);
}

double table1_t_final(const ModelParams& params) {
    const double gamma = golden_rule_gamma(params);
    if (!(gamma > 0.0)) return kTable1MaxTime;
    return std::min(kTable1MaxTime, 5.0 / gamma);
}

double Table1Row::ratio() const {
    if (!fit || !(gamma_theory > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return fit->gamma / gamma_theory;
}

std::vector<Table1Row> run_table1(const RunConfig& base, double epsilon, const std::vector<double>& vbar_list) {
    std::vector<RunConfig> configs;
    for (double v : vbar_list) {
        RunConfig c = base;
        c.model.epsilon = epsilon;
        c.model.vbar = v;
        c.fit_window.reset();
        c.t_final = table1_t_final(c.model);
        configs.push_back(std::move(c));
    }
    const auto rows = run_sweep(configs);

    std::vector<Table1Row> out;
    for (const auto& r : rows) {
        Table1Row t;
        t.vbar = r.config.model.vbar;
        t.gamma_theory = r.gamma_theory;
        t.t_final = r.config.t_final;
        t.fit = r.fit;
        if (!r.error.empty()) t.status = r.error;
        out.push_back(std::move(t));
    }
    return out;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
    std::ostringstream out;
    out << "vbar,gamma_fit,gamma_theory,ratio,t_final,fit_lo,fit_hi,status\n";
    const auto nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& r : rows) {
        std::string status = r.status;
        std::replace(status.begin(), status.end(), ',', ';');
        std::replace(status.begin(), status.end(), '\n', ' ');
        out << format_number(r.vbar) << ',' << format_number(r.fit ? r.fit->gamma : nan) << ','
            << format_number(r.gamma_theory) << ',' << format_number(r.ratio()) << ',' << format_number(r.t_final)
            << ',' << format_number(r.fit ? r.fit->window.lo : nan) << ','
            << format_number(r.fit ? r.fit->window.hi : nan) << ',' << status << '\n';
    }
    return out.str();
}

Table1Outcome cmd_table1(const RunConfig& base, double epsilon, const std::vector<double>& vbar_list,
                         const OutputOptions& opts) {
    Table1Outcome out;
    out.rows = run_table1(base, epsilon, vbar_list);
    out.csv_path = opts.out_dir / "table1.csv";
    write_file_atomic(out.csv_path, table1_csv(out.rows));
    return out;
}

std::string spectrum_csv(const RunConfig& cfg, const ArrowheadSpectrum& spectrum) {
    double total = 0.0;
    for (double w : spectrum.bright_weights) total += w;
    std::ostringstream out;
    for (const auto& [key, value] : config_entries(cfg)) out << "# " << key << " = " << value << '\n';
    out << "# sum_weights = " << format_number(total) << '\n';
    out << "j,eigenvalue,bright_weight\n";
    for (std::size_t j = 0; j < spectrum.eigenvalues.size(); ++j) {
        out << j << ',' << format_number(spectrum.eigenvalues[j]) << ',' << format_number(spectrum.bright_weights[j])
            << '\n';
    }
    return out.str();
}

SpectrumOutcome cmd_spectrum(const RunConfig& cfg, const OutputOptions& opts) {
    validate(cfg);
    SpectrumOutcome out;
    out.spectrum = solve_spectrum(cfg.model);
    out.csv_path = opts.out_dir / "spectrum.csv";
    write_file_atomic(out.csv_path, spectrum_csv(cfg, out.spectrum));
    return out;
}

} // namespace bjlab
