// bjlab.cpp — Command-line front end
//
//   bjlab simulate  [--config FILE] [--m 12 --vbar 0.1 ...] [--out DIR]
//   bjlab sweep-n   --n-list 26,16,8,6,4,2
//   bjlab sweep-v   --vbar-list 0.1,0.075,0.02
//   bjlab table1    [--epsilon 0.1] [--vbar-list ...]
//   bjlab spectrum  [--m 1 --vbar 0.04]
//
// Exit codes: 0 ok, 2 invalid config, 3 conservation violation,
// 4 fit failure (simulate only).

#include "bjlab/commands.hpp"
#include "bjlab/config.hpp"
#include "bjlab/errors.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace bjlab;

// Every RunConfig field as a string-valued flag; the values are routed
// through apply_setting after the config file so that flags win.
struct ConfigFlags {
    std::string config_path;
    std::string out_dir;
    bool no_timing{false};
    std::map<std::string, std::string> values;
    bool allow_coarse{false};
    RunConfig defaults{};

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "Flat key = value config file");
        cmd->add_option("--out", out_dir, "Output directory (default: $BJLAB_OUT or .)");
        cmd->add_flag("--no-timing", no_timing, "Write runtime_seconds as null (byte-reproducible JSON)");
        cmd->add_flag("--allow-coarse", allow_coarse, "Permit --dt-max above 0.001");
        const std::vector<std::pair<std::string, std::string>> fields{
            {"m", "Dark ladder half-width (n = 2m + 2)"},
            {"vbar", "Bright-dark coupling"},
            {"epsilon", "Dark level spacing"},
            {"omega-s", "Bright state frequency"},
            {"t-final", "Integration end time"},
            {"dt-max", "Maximum RK4 step"},
            {"sample-stride", "Store every Nth step"},
            {"tracked-k", "Comma-separated dark states to write"},
            {"fit-window", "lo,hi window for the decay fit"},
            {"peak-prominence", "Relative peak prominence"},
        };
        for (const auto& [flag, help] : fields) {
            std::string key = flag;
            for (auto& c : key) {
                if (c == '-') c = '_';
            }
            cmd->add_option_function<std::string>(
                "--" + flag, [this, key](const std::string& v) { values[key] = v; }, help);
        }
    }

    RunConfig build() const {
        RunConfig cfg = defaults;
        if (!config_path.empty()) load_config_file(cfg, config_path);
        for (const auto& [key, value] : values) apply_setting(cfg, key, value);
        if (allow_coarse) cfg.allow_coarse = true;
        validate(cfg);
        return cfg;
    }

    OutputOptions output() const {
        OutputOptions o;
        if (!out_dir.empty()) {
            o.out_dir = out_dir;
        } else if (const char* env = std::getenv("BJLAB_OUT"); env && *env) {
            o.out_dir = env;
        }
        o.record_runtime = !no_timing;
        return o;
    }
};

template <class T>
std::vector<T> parse_list(const std::string& text, const char* name) {
    std::vector<T> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find(',', start);
        const auto item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (!item.empty()) {
            try {
                std::size_t used = 0;
                if constexpr (std::is_same_v<T, int>) {
                    out.push_back(std::stoi(item, &used));
                } else {
                    out.push_back(std::stod(item, &used));
                }
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw ValidationError(ValidationError::Kind::BadArgument, name,
                                      std::string(name) + ": cannot parse '" + item + "'");
            }
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (out.empty()) throw ValidationError(ValidationError::Kind::BadArgument, name, std::string(name) + " is empty");
    return out;
}

int report(const std::string& what, const std::filesystem::path& path) {
    std::cout << what << ": " << path.string() << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bright-state survival simulator for an equally spaced dark ladder"};
    app.require_subcommand(1);

    ConfigFlags sim_flags, sweep_n_flags, sweep_v_flags, table_flags, spec_flags;

    auto* simulate = app.add_subcommand("simulate", "Integrate one parameter set; write trajectory.csv and summary.json");
    sim_flags.attach(simulate);

    std::string n_list = "26,16,8,6,4,2";
    auto* sweep_n = app.add_subcommand("sweep-n", "Vary the state count n; write sweep_n.json");
    sweep_n_flags.attach(sweep_n);
    sweep_n->add_option("--n-list", n_list, "Comma-separated even state counts")->capture_default_str();

    std::string v_list = "0.1,0.075,0.05,0.02,0.01,0.002";
    auto* sweep_v = app.add_subcommand("sweep-v", "Vary the coupling vbar; write sweep_v.json");
    sweep_v_flags.attach(sweep_v);
    sweep_v->add_option("--vbar-list", v_list, "Comma-separated couplings")->capture_default_str();

    std::string table_list = "0.075,0.05,0.02,0.01,0.002";
    auto* table1 = app.add_subcommand("table1", "Fitted vs golden-rule decay rates; write table1.csv");
    table_flags.attach(table1);
    table_flags.defaults.model.epsilon = kTable1Epsilon;
    table1->add_option("--vbar-list", table_list, "Comma-separated couplings")->capture_default_str();

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and bright weights; write spectrum.csv");
    spec_flags.attach(spectrum);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidConfig;
    }

    try {
        if (*simulate) {
            const auto out = cmd_simulate(sim_flags.build(), sim_flags.output());
            report("trajectory", out.csv_path);
            report("summary", out.json_path);
            if (out.exit_code == kExitFitFailure) {
                std::cerr << "bjlab: decay fit failed: " << out.result.fit_error << '\n';
            }
            return out.exit_code;
        }
        if (*sweep_n) {
            const auto base = sweep_n_flags.build();
            const auto out = cmd_sweep_n(base, parse_list<int>(n_list, "n_list"), sweep_n_flags.output());
            report("sweep", out.json_path);
            return out.exit_code;
        }
        if (*sweep_v) {
            const auto base = sweep_v_flags.build();
            const auto out = cmd_sweep_v(base, parse_list<double>(v_list, "vbar_list"), sweep_v_flags.output());
            report("sweep", out.json_path);
            return out.exit_code;
        }
        if (*table1) {
            const auto base = table_flags.build();
            const auto out = cmd_table1(base, base.model.epsilon, parse_list<double>(table_list, "vbar_list"),
                                        table_flags.output());
            return report("table", out.csv_path);
        }
        if (*spectrum) {
            const auto out = cmd_spectrum(spec_flags.build(), spec_flags.output());
            return report("spectrum", out.csv_path);
        }
    } catch (const ValidationError& e) {
        std::cerr << "bjlab: invalid configuration: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const ConservationError& e) {
        std::cerr << "bjlab: " << e.what() << '\n';
        return kExitConservation;
    } catch (const std::exception& e) {
        std::cerr << "bjlab: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
