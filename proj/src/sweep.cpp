#include "starkqc/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace starkqc::sweep {

namespace {

std::vector<double> linspace01(int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
    return v;
}

struct PresetSpec {
    const char* id;
    const char* description;
    SweepConfig (*build)();
};

SweepConfig line_preset(model::Scenario sc, double lambda, std::vector<double> etas,
                        MeasureSet ms) {
    SweepConfig cfg;
    cfg.scenario = sc;
    cfg.lambda = lambda;
    cfg.eta_list = std::move(etas);
    cfg.xi_list = {0.0};
    cfg.x_list = {kInvSqrt2};
    cfg.tau_max = lambda >= 2.0 ? 3.0 : 50.0;
    cfg.n_points = lambda >= 2.0 ? 601 : 2001;
    cfg.measures = ms;
    return cfg;
}

SweepConfig surface_preset(double lambda, double eta, MeasureSet ms) {
    SweepConfig cfg;
    cfg.scenario = model::Scenario::Vacuum;
    cfg.lambda = lambda;
    cfg.eta_list = {eta};
    cfg.xi_list = {0.0};
    cfg.x_list = linspace01(101);
    cfg.tau_max = lambda >= 2.0 ? 3.0 : 50.0;
    cfg.n_points = 101;
    cfg.measures = ms;
    return cfg;
}

constexpr MeasureSet kOnlyB{false, true, false, false};
constexpr MeasureSet kOnlyD{false, false, true, false};
constexpr MeasureSet kOnlyQ{false, false, false, true};

const PresetSpec kPresets[] = {
    {"fig1a", "Bures entanglement vs tau, Markovian (lambda=10), eta in {0,5,10,15}, x=1/sqrt2",
     [] { return line_preset(model::Scenario::Vacuum, 10.0, {0.0, 5.0, 10.0, 15.0}, kOnlyB); }},
    {"fig1b", "Bures entanglement vs tau, non-Markovian (lambda=0.1), eta in {0,0.5,1.0,1.5}",
     [] { return line_preset(model::Scenario::Vacuum, 0.1, {0.0, 0.5, 1.0, 1.5}, kOnlyB); }},
    {"fig2a", "Bures entanglement surface over (x, tau), lambda=10, eta=15",
     [] { return surface_preset(10.0, 15.0, kOnlyB); }},
    {"fig2b", "Bures entanglement surface over (x, tau), lambda=0.1, eta=0.2",
     [] { return surface_preset(0.1, 0.2, kOnlyB); }},
    {"fig3a", "trace-distance discord vs tau, lambda=10, eta in {0,5,10,15}",
     [] { return line_preset(model::Scenario::Vacuum, 10.0, {0.0, 5.0, 10.0, 15.0}, kOnlyD); }},
    {"fig3b", "trace-distance discord vs tau, lambda=0.1, eta in {0,0.5,1.0,1.5}",
     [] { return line_preset(model::Scenario::Vacuum, 0.1, {0.0, 0.5, 1.0, 1.5}, kOnlyD); }},
    {"fig4a", "trace-distance discord surface over (x, tau), lambda=10, eta=15",
     [] { return surface_preset(10.0, 15.0, kOnlyD); }},
    {"fig4b", "trace-distance discord surface over (x, tau), lambda=0.1, eta=0.2",
     [] { return surface_preset(0.1, 0.2, kOnlyD); }},
    {"fig5a", "local quantum uncertainty vs tau, lambda=10, eta in {0,5,10,15}",
     [] { return line_preset(model::Scenario::Vacuum, 10.0, {0.0, 5.0, 10.0, 15.0}, kOnlyQ); }},
    {"fig5b", "local quantum uncertainty vs tau, lambda=0.1, eta in {0,0.5,1.0,1.5}",
     [] { return line_preset(model::Scenario::Vacuum, 0.1, {0.0, 0.5, 1.0, 1.5}, kOnlyQ); }},
    {"fig6a", "local quantum uncertainty surface over (x, tau), lambda=10, eta=15",
     [] { return surface_preset(10.0, 15.0, kOnlyQ); }},
    {"fig6b", "local quantum uncertainty surface over (x, tau), lambda=0.1, eta=0.2",
     [] { return surface_preset(0.1, 0.2, kOnlyQ); }},
    {"fig7a", "one-photon reservoir, Bures entanglement, lambda=10, eta-xi in {0,5,10,15}",
     [] { return line_preset(model::Scenario::OnePhoton, 10.0, {0.0, 5.0, 10.0, 15.0}, kOnlyB); }},
    {"fig7b", "one-photon reservoir, trace-distance discord, lambda=10, eta-xi in {0,5,10,15}",
     [] { return line_preset(model::Scenario::OnePhoton, 10.0, {0.0, 5.0, 10.0, 15.0}, kOnlyD); }},
    {"fig7c", "one-photon reservoir, local quantum uncertainty, lambda=10, eta-xi in {0,5,10,15}",
     [] { return line_preset(model::Scenario::OnePhoton, 10.0, {0.0, 5.0, 10.0, 15.0}, kOnlyQ); }},
    {"fig7d", "one-photon reservoir, Bures entanglement, lambda=0.1, eta-xi in {0,1.5,3,10}",
     [] { return line_preset(model::Scenario::OnePhoton, 0.1, {0.0, 1.5, 3.0, 10.0}, kOnlyB); }},
    {"fig7e", "one-photon reservoir, trace-distance discord, lambda=0.1, eta-xi in {0,1.5,3,10}",
     [] { return line_preset(model::Scenario::OnePhoton, 0.1, {0.0, 1.5, 3.0, 10.0}, kOnlyD); }},
    {"fig7f", "one-photon reservoir, local quantum uncertainty, lambda=0.1, eta-xi in {0,1.5,3,10}",
     [] { return line_preset(model::Scenario::OnePhoton, 0.1, {0.0, 1.5, 3.0, 10.0}, kOnlyQ); }},
};

std::vector<double> parse_double_list(const std::string& value, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw std::invalid_argument("trailing characters");
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid number '" + item + "' for key '" + key + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty list for key '" + key + "'");
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

void SweepConfig::validate_and_normalize() {
    if (!(std::isfinite(lambda)) || lambda <= 0.0) {
        throw std::invalid_argument("sweep: lambda must be finite and > 0");
    }
    if (n_points < 2) throw std::invalid_argument("sweep: n_points must be >= 2");
    if (!(tau_max > 0.0) || !std::isfinite(tau_max)) {
        throw std::invalid_argument("sweep: tau_max must be finite and > 0");
    }
    if (eta_list.empty() || xi_list.empty() || x_list.empty()) {
        throw std::invalid_argument("sweep: eta, xi and x lists must be nonempty");
    }
    for (double x : x_list) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw std::invalid_argument("sweep: every x must lie in [0,1]");
        }
    }
    for (double e : eta_list) {
        if (!std::isfinite(e) || e < 0.0) throw std::invalid_argument("sweep: eta must be >= 0");
    }
    for (double v : xi_list) {
        if (!std::isfinite(v)) throw std::invalid_argument("sweep: xi must be finite");
    }
    if (!(measures.c || measures.b || measures.d || measures.q)) {
        throw std::invalid_argument("sweep: at least one measure must be selected");
    }
    std::sort(eta_list.begin(), eta_list.end());
    std::sort(xi_list.begin(), xi_list.end());
    std::sort(x_list.begin(), x_list.end());
}

std::vector<std::string> preset_ids() {
    std::vector<std::string> ids;
    for (const PresetSpec& p : kPresets) ids.emplace_back(p.id);
    return ids;
}

std::string preset_description(const std::string& id) {
    for (const PresetSpec& p : kPresets) {
        if (id == p.id) return p.description;
    }
    throw std::invalid_argument("unknown preset '" + id + "'");
}

SweepConfig expand_preset(const std::string& id) {
    for (const PresetSpec& p : kPresets) {
        if (id == p.id) {
            SweepConfig cfg = p.build();
            cfg.output_path = std::string(p.id) + ".csv";
            cfg.validate_and_normalize();
            return cfg;
        }
    }
    std::string valid;
    for (const PresetSpec& p : kPresets) {
        if (!valid.empty()) valid += ", ";
        valid += p.id;
    }
    throw std::invalid_argument("unknown preset '" + id + "'; valid ids: " + valid);
}

std::vector<SweepRow> evaluate_grid(const SweepConfig& cfg) {
    std::vector<SweepRow> rows;
    rows.reserve(cfg.eta_list.size() * cfg.xi_list.size() * cfg.x_list.size() *
                 static_cast<std::size_t>(cfg.n_points));
    for (double eta : cfg.eta_list) {
        for (double xi : cfg.xi_list) {
            const model::ModelParams p{cfg.lambda, eta, xi, cfg.scenario};
            for (double x : cfg.x_list) {
                const model::StatePrep prep{x};
                for (int k = 0; k < cfg.n_points; ++k) {
                    const double tau = cfg.tau_max * k / (cfg.n_points - 1);
                    SweepRow row;
                    row.eta = eta;
                    row.xi = xi;
                    row.x = x;
                    row.sample = measures::evaluate_all(tau, prep, p);
                    rows.push_back(row);
                }
            }
        }
    }
    return rows;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%#.12g", v);
    return buf;
}

void write_csv(std::ostream& os, const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
    os << "tau,eta,xi,x,C,B,D,Q,M11,M33\n";
    const auto cell = [&](bool selected, double v) {
        return selected ? format_number(v) : std::string("NA");
    };
    for (const SweepRow& r : rows) {
        os << format_number(r.sample.tau) << ',' << format_number(r.eta) << ','
           << format_number(r.xi) << ',' << format_number(r.x) << ','
           << cell(cfg.measures.c, r.sample.concurrence) << ','
           << cell(cfg.measures.b, r.sample.bures) << ','
           << cell(cfg.measures.d, r.sample.tdd) << ','
           << cell(cfg.measures.q, r.sample.lqu) << ','
           << cell(cfg.measures.q, r.sample.m11) << ','
           << cell(cfg.measures.q, r.sample.m33) << '\n';
    }
}

void write_json(std::ostream& os, const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    const auto cell = [&](bool selected, double v) {
        return selected ? nlohmann::json(v) : nlohmann::json(nullptr);
    };
    for (const SweepRow& r : rows) {
        arr.push_back({{"tau", r.sample.tau},
                       {"eta", r.eta},
                       {"xi", r.xi},
                       {"x", r.x},
                       {"C", cell(cfg.measures.c, r.sample.concurrence)},
                       {"B", cell(cfg.measures.b, r.sample.bures)},
                       {"D", cell(cfg.measures.d, r.sample.tdd)},
                       {"Q", cell(cfg.measures.q, r.sample.lqu)},
                       {"M11", cell(cfg.measures.q, r.sample.m11)},
                       {"M33", cell(cfg.measures.q, r.sample.m33)}});
    }
    os << arr.dump(2) << '\n';
}

void run_sweep(const SweepConfig& cfg) {
    SweepConfig c = cfg;
    c.validate_and_normalize();
    if (c.output_path.empty()) {
        throw std::invalid_argument("sweep: output path must not be empty");
    }
    const std::vector<SweepRow> rows = evaluate_grid(c);
    std::ofstream os(c.output_path, std::ios::binary);
    if (!os) throw IoError("cannot open output file '" + c.output_path + "'");
    if (c.format == Format::Csv) {
        write_csv(os, c, rows);
    } else {
        write_json(os, c, rows);
    }
    os.flush();
    if (!os) throw IoError("write failed for '" + c.output_path + "'");
}

void apply_key_value(SweepConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "preset") {
        const std::string out = cfg.output_path;
        cfg = expand_preset(value);
        if (!out.empty()) cfg.output_path = out;
    } else if (key == "scenario") {
        if (value == "vacuum") {
            cfg.scenario = model::Scenario::Vacuum;
        } else if (value == "one-photon") {
            cfg.scenario = model::Scenario::OnePhoton;
        } else {
            throw std::invalid_argument("scenario must be 'vacuum' or 'one-photon', got '" + value +
                                        "'");
        }
    } else if (key == "lambda") {
        cfg.lambda = parse_double_list(value, key).at(0);
    } else if (key == "eta") {
        cfg.eta_list = parse_double_list(value, key);
    } else if (key == "xi") {
        cfg.xi_list = parse_double_list(value, key);
    } else if (key == "x") {
        cfg.x_list = parse_double_list(value, key);
    } else if (key == "tau-max") {
        cfg.tau_max = parse_double_list(value, key).at(0);
    } else if (key == "points") {
        try {
            cfg.n_points = std::stoi(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid integer for 'points': " + value);
        }
    } else if (key == "measures") {
        MeasureSet ms{false, false, false, false};
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item == "C") {
                ms.c = true;
            } else if (item == "B") {
                ms.b = true;
            } else if (item == "D") {
                ms.d = true;
            } else if (item == "Q") {
                ms.q = true;
            } else {
                throw std::invalid_argument("unknown measure '" + item + "' (expected C, B, D, Q)");
            }
        }
        cfg.measures = ms;
    } else if (key == "out") {
        cfg.output_path = value;
    } else if (key == "format") {
        if (value == "csv") {
            cfg.format = Format::Csv;
        } else if (value == "json") {
            cfg.format = Format::Json;
        } else {
            throw std::invalid_argument("format must be 'csv' or 'json', got '" + value + "'");
        }
    } else if (key == "seed") {
        try {
            cfg.seed = std::stoull(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid integer for 'seed': " + value);
        }
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void apply_config_file(SweepConfig& cfg, const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open config file '" + path + "'");
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        }
        entries.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    // a preset key provides the baseline; everything else overrides it
    for (const auto& [k, v] : entries) {
        if (k == "preset") apply_key_value(cfg, k, v);
    }
    for (const auto& [k, v] : entries) {
        if (k != "preset") apply_key_value(cfg, k, v);
    }
}

void write_oracle_report(std::ostream& os, const std::vector<oracles::OracleReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const oracles::OracleReport& r : reports) {
        arr.push_back({{"name", r.name},
                       {"closed_form_value", r.closed_form_value},
                       {"oracle_value", r.oracle_value},
                       {"gap", r.gap},
                       {"tolerance", r.tolerance},
                       {"evaluations", r.evaluations},
                       {"pass", r.pass},
                       {"detail", r.detail}});
    }
    os << arr.dump(2) << '\n';
}

bool run_oracle_suite(oracles::SuiteScale scale, std::uint64_t seed, const std::string& output_path,
                      std::ostream& log) {
    const std::vector<oracles::OracleReport> reports = oracles::run_suite(scale, seed);
    for (const oracles::OracleReport& r : reports) {
        log << (r.pass ? "[ok]   " : "[FAIL] ") << r.name << ": closed=" << r.closed_form_value
            << " oracle=" << r.oracle_value << " gap=" << r.gap << " tol=" << r.tolerance << '\n';
    }
    if (output_path.empty()) {
        write_oracle_report(log, reports);
    } else {
        std::ofstream os(output_path, std::ios::binary);
        if (!os) throw IoError("cannot open report file '" + output_path + "'");
        write_oracle_report(os, reports);
        os.flush();
        if (!os) throw IoError("write failed for '" + output_path + "'");
    }
    return oracles::suite_passed(reports);
}

}  // namespace starkqc::sweep
