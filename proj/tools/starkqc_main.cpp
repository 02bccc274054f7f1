// starkqc - time sweeps and oracle validation for two dissipative two-level
// atoms under the Stark effect.
//
// Exit codes: 0 success, 1 validation error, 2 I/O error, 3 oracle tolerance
// breach.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "starkqc/sweep.hpp"

namespace {

// Relative output paths are placed under STARKQC_OUT_DIR when it is set.
std::string resolve_output_path(const std::string& path) {
    if (path.empty()) return path;
    const char* dir = std::getenv("STARKQC_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    const std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(dir) / p).string();
}

}  // namespace

int main(int argc, char** argv) {
    using starkqc::sweep::SweepConfig;

    CLI::App app{"quantum-correlation dynamics of two dissipative atoms under the Stark effect"};
    app.require_subcommand(1);

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a (eta, xi, x, tau) grid and write CSV/JSON");
    std::string preset, config_file, scenario, measures, out, format;
    std::string lambda, eta, xi, x, tau_max, points, seed;
    sweep_cmd->add_option("--preset", preset, "figure preset id (see 'presets')");
    sweep_cmd->add_option("--config", config_file, "key=value config file");
    sweep_cmd->add_option("--scenario", scenario, "vacuum | one-photon");
    sweep_cmd->add_option("--lambda", lambda, "spectral width (units of gamma0)");
    sweep_cmd->add_option("--eta", eta, "comma-separated Stark shifts");
    sweep_cmd->add_option("--xi", xi, "comma-separated second Stark shifts (one-photon)");
    sweep_cmd->add_option("--x", x, "comma-separated preparation weights in [0,1]");
    sweep_cmd->add_option("--tau-max", tau_max, "scaled-time upper limit");
    sweep_cmd->add_option("--points", points, "number of tau samples (>= 2)");
    sweep_cmd->add_option("--measures", measures, "subset of C,B,D,Q");
    sweep_cmd->add_option("--out", out, "output file path");
    sweep_cmd->add_option("--format", format, "csv | json");
    sweep_cmd->add_option("--seed", seed, "random seed (oracle suite only)");

    // --- oracles ---
    auto* oracle_cmd = app.add_subcommand("oracles", "run the closed-form/oracle comparison suite");
    std::string scale = "quick", oracle_out, oracle_seed;
    oracle_cmd->add_option("--scale", scale, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}));
    oracle_cmd->add_option("--out", oracle_out, "JSON report path (stdout when omitted)");
    oracle_cmd->add_option("--seed", oracle_seed, "random seed for the stochastic searches");

    // --- presets ---
    auto* preset_cmd = app.add_subcommand("presets", "list the available figure presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (preset_cmd->parsed()) {
            for (const std::string& id : starkqc::sweep::preset_ids()) {
                std::cout << id << "  " << starkqc::sweep::preset_description(id) << '\n';
            }
            return 0;
        }

        if (oracle_cmd->parsed()) {
            const auto s = scale == "full" ? starkqc::oracles::SuiteScale::Full
                                           : starkqc::oracles::SuiteScale::Quick;
            std::uint64_t sd = starkqc::oracles::kDefaultSeed;
            if (!oracle_seed.empty()) sd = std::stoull(oracle_seed);
            const bool ok = starkqc::sweep::run_oracle_suite(
                s, sd, resolve_output_path(oracle_out), std::cout);
            if (!ok) {
                std::cerr << "oracle suite: tolerance breach (see report)\n";
                return 3;
            }
            return 0;
        }

        SweepConfig cfg;
        if (!preset.empty()) starkqc::sweep::apply_key_value(cfg, "preset", preset);
        if (!config_file.empty()) starkqc::sweep::apply_config_file(cfg, config_file);
        const std::pair<const char*, const std::string*> flag_overrides[] = {
            {"scenario", &scenario}, {"lambda", &lambda}, {"eta", &eta},
            {"xi", &xi},             {"x", &x},           {"tau-max", &tau_max},
            {"points", &points},     {"measures", &measures}, {"out", &out},
            {"format", &format},     {"seed", &seed},
        };
        for (const auto& [key, value] : flag_overrides) {
            if (!value->empty()) starkqc::sweep::apply_key_value(cfg, key, *value);
        }
        if (cfg.output_path.empty()) {
            throw std::invalid_argument("no output path: pass --out or use a preset");
        }
        cfg.output_path = resolve_output_path(cfg.output_path);
        starkqc::sweep::run_sweep(cfg);
        std::cout << "wrote " << cfg.output_path << '\n';
        return 0;
    } catch (const starkqc::sweep::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
