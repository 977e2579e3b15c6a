// commands.hpp — Simulation runs, parameter sweeps and their file artifacts
//
// Each cmd_* function validates its inputs before touching the output
// directory, and writes every artifact through write_file_atomic.

#pragma once

#include "bjlab/analysis.hpp"
#include "bjlab/config.hpp"
#include "bjlab/ode.hpp"
#include "bjlab/spectral.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace bjlab {

// Exit codes of the bjlab tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidConfig = 2,
    kExitConservation = 3,
    kExitFitFailure = 4,
};

struct SimulationResult {
    RunConfig config;
    Trajectory trajectory;
    double gamma_theory{0.0};
    std::optional<DecayFit> fit;
    std::string fit_error; // set when fit is empty
    PeakList peaks;        // of p_s
    double max_conservation_dev{0.0};
    double runtime_seconds{0.0};
};

// Integrates, then fits p_s (config window, else default_fit_window with the
// recurrence time as horizon) and detects p_s peaks. Fit failures are
// recorded, not thrown. ValidationError / ConservationError propagate.
SimulationResult run_simulation(const RunConfig& cfg);

// The p_s maximum at t = 0 is the first peak; the second is the tallest
// interior peak, i.e. the main revival.
std::optional<Peak> second_peak(const PeakList& peaks);

struct OutputOptions {
    std::filesystem::path out_dir{"."};
    bool record_runtime{true}; // false writes runtime_seconds as null
};

nlohmann::json config_json(const RunConfig& cfg);
nlohmann::json summary_json(const SimulationResult& result, bool record_runtime = true);

struct SimulateOutcome {
    SimulationResult result;
    std::filesystem::path csv_path;
    std::filesystem::path json_path;
    int exit_code{kExitOk}; // kExitFitFailure when the decay fit failed
};

// trajectory.csv + summary.json in opts.out_dir.
SimulateOutcome cmd_simulate(const RunConfig& cfg, const OutputOptions& opts);

struct SweepRow {
    RunConfig config;
    double gamma_theory{0.0};
    std::optional<DecayFit> fit;
    PeakList peaks;
    double max_conservation_dev{0.0};
    std::string error; // empty on success
    bool conservation_violated{false};
};

// Independent runs in parallel; rows come back in input order.
std::vector<SweepRow> run_sweep(const std::vector<RunConfig>& configs);

// One run per n (m = n/2 - 1). Throws ValidationError on odd n or n < 2.
std::vector<RunConfig> sweep_n_configs(const RunConfig& base, const std::vector<int>& n_list);
std::vector<RunConfig> sweep_v_configs(const RunConfig& base, const std::vector<double>& vbar_list);

nlohmann::json sweep_json(const std::string& kind, const RunConfig& base, const std::vector<SweepRow>& rows);

struct SweepOutcome {
    std::vector<SweepRow> rows;
    std::filesystem::path json_path;
    int exit_code{kExitOk}; // kExitConservation if any row violated conservation
};

// sweep_n.json / sweep_v.json in opts.out_dir.
SweepOutcome cmd_sweep_n(const RunConfig& base, const std::vector<int>& n_list, const OutputOptions& opts);
SweepOutcome cmd_sweep_v(const RunConfig& base, const std::vector<double>& vbar_list, const OutputOptions& opts);

inline const std::vector<double> kTable1Vbars{0.075, 0.05, 0.02, 0.01, 0.002};
inline constexpr double kTable1Epsilon = 0.10;
inline constexpr double kTable1MaxTime = 240.0;

// min(240, 5 / gamma_theory).
double table1_t_final(const ModelParams& params);

struct Table1Row {
    double vbar{0.0};
    double gamma_theory{0.0};
    double t_final{0.0};
    std::optional<DecayFit> fit;
    std::string status{"ok"};

    double ratio() const;
};

// Runs each vbar at the base config's m and the given epsilon. Per-row
// failures are recorded in the row.
std::vector<Table1Row> run_table1(const RunConfig& base, double epsilon, const std::vector<double>& vbar_list);
std::string table1_csv(const std::vector<Table1Row>& rows);

struct Table1Outcome {
    std::vector<Table1Row> rows;
    std::filesystem::path csv_path;
};
// table1.csv in opts.out_dir.
Table1Outcome cmd_table1(const RunConfig& base, double epsilon, const std::vector<double>& vbar_list,
                         const OutputOptions& opts);

std::string spectrum_csv(const RunConfig& cfg, const ArrowheadSpectrum& spectrum);

struct SpectrumOutcome {
    ArrowheadSpectrum spectrum;
    std::filesystem::path csv_path;
};
// spectrum.csv in opts.out_dir.
SpectrumOutcome cmd_spectrum(const RunConfig& cfg, const OutputOptions& opts);

} // namespace bjlab
