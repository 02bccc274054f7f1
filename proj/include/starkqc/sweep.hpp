// sweep.hpp - parameter sweeps over (eta, xi, x, tau) grids, figure presets,
// and deterministic CSV/JSON writers.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "starkqc/measures.hpp"
#include "starkqc/model.hpp"
#include "starkqc/oracles.hpp"

namespace starkqc::sweep {

enum class Format { Csv, Json };

// Weight of the maximally entangled preparation, used by all line presets.
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

struct MeasureSet {
    bool c = true;
    bool b = true;
    bool d = true;
    bool q = true;
};

struct SweepConfig {
    model::Scenario scenario = model::Scenario::Vacuum;
    double lambda = 10.0;
    std::vector<double> eta_list{0.0};
    std::vector<double> xi_list{0.0};
    std::vector<double> x_list{kInvSqrt2};
    double tau_max = 3.0;
    int n_points = 601;
    MeasureSet measures;
    std::string output_path;
    Format format = Format::Csv;
    std::uint64_t seed = oracles::kDefaultSeed;

    // Throws std::invalid_argument on violations (n_points >= 2, tau_max > 0,
    // every x in [0,1], lambda > 0, nonempty lists). Sorts the parameter lists
    // ascending so rows always come out in lexicographic (eta, xi, x, tau)
    // order.
    void validate_and_normalize();
};

// One output row of a sweep.
struct SweepRow {
    double eta = 0.0;
    double xi = 0.0;
    double x = 0.0;
    measures::CorrelationSample sample;
};

std::vector<std::string> preset_ids();
std::string preset_description(const std::string& id);

// Expands fig1a..fig7f to a fully specified configuration; unknown ids raise
// std::invalid_argument listing the valid ones.
SweepConfig expand_preset(const std::string& id);

// Evaluates the full grid in deterministic order.
std::vector<SweepRow> evaluate_grid(const SweepConfig& cfg);

// Formats with 12 significant digits, trailing zeros kept.
std::string format_number(double v);

void write_csv(std::ostream& os, const SweepConfig& cfg, const std::vector<SweepRow>& rows);
void write_json(std::ostream& os, const SweepConfig& cfg, const std::vector<SweepRow>& rows);

// Evaluates the grid and writes cfg.output_path in cfg.format.
// I/O failures raise IoError.
void run_sweep(const SweepConfig& cfg);

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// key=value config file, one key per line, lists comma-separated, '#' starts
// a comment. Keys match the CLI flag names without the leading dashes.
void apply_config_file(SweepConfig& cfg, const std::string& path);

// Single key=value assignment (shared by the config file parser and the CLI).
void apply_key_value(SweepConfig& cfg, const std::string& key, const std::string& value);

void write_oracle_report(std::ostream& os, const std::vector<oracles::OracleReport>& reports);

// Runs the oracle suite, writes the JSON report to output_path (or stdout when
// empty), prints one summary line per comparison to `log`. Returns true when
// every comparison passed.
bool run_oracle_suite(oracles::SuiteScale scale, std::uint64_t seed, const std::string& output_path,
                      std::ostream& log);

}  // namespace starkqc::sweep
