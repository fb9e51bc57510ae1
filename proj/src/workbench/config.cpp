// Copyright 2026 The qcbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcbench/workbench/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qcbench/errors.hpp"
#include "qcbench/workbench/output.hpp"

namespace qcb::wb {

namespace {

struct ExperimentName {
    Experiment value;
    std::string_view name;
    std::string_view help;
};

constexpr std::array kExperiments{
    ExperimentName{Experiment::cat, "cat", "two-outcome cat-state ensemble"},
    ExperimentName{Experiment::well_spectrum, "well-spectrum", "lowest infinite-well levels"},
    ExperimentName{Experiment::spread, "spread", "free Gaussian packet width over time"},
    ExperimentName{Experiment::eq3, "eq3", "Poisson bracket vs Heisenberg commutator"},
    ExperimentName{Experiment::vn_generator, "vn-generator",
                   "single generator of commuting families"},
    ExperimentName{Experiment::ensemble_density, "ensemble-density",
                   "position histogram of the well ground state"},
    ExperimentName{Experiment::claims, "claims", "full invariant suite"},
};

struct FlagSpec {
    std::string_view key;
    std::string_view help;
};

constexpr std::array kFlags{
    FlagSpec{"n", "number of samples, trials, or families"},
    FlagSpec{"seed", "random seed (unsigned 64-bit)"},
    FlagSpec{"grid-n", "interior grid points (>= 8)"},
    FlagSpec{"L", "box length"},
    FlagSpec{"m", "mass"},
    FlagSpec{"omega", "oscillator frequency"},
    FlagSpec{"hbar", "reduced Planck constant"},
    FlagSpec{"d", "ladder truncation dimension (>= 4)"},
    FlagSpec{"times", "comma-separated ascending times"},
    FlagSpec{"a1", "first cat outcome"},
    FlagSpec{"a2", "second cat outcome"},
    FlagSpec{"out", "output path"},
    FlagSpec{"format", "csv or json"},
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string canonical_key(std::string key) {
    std::replace(key.begin(), key.end(), '_', '-');
    return key;
}

bool is_known_key(const std::string &key) {
    if (key.starts_with("tol-")) {
        return default_tolerances().contains(key.substr(4));
    }
    return std::any_of(kFlags.begin(), kFlags.end(),
                       [&](const FlagSpec &f) { return f.key == key; });
}

double to_double(const std::string &key, const std::string &text) {
    double v = 0.0;
    const char *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw ValidationError("invalid value for " + key + ": '" + text + "'");
    }
    return v;
}

std::uint64_t to_unsigned(const std::string &key, const std::string &text) {
    std::uint64_t v = 0;
    const char *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw ValidationError("invalid value for " + key + ": '" + text + "'");
    }
    return v;
}

double positive(const std::string &key, const std::string &text) {
    const double v = to_double(key, text);
    if (!(v > 0.0)) {
        throw ValidationError(key + " must be positive, got " + text);
    }
    return v;
}

std::vector<double> to_times(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(to_double("times", trim(item)));
    }
    if (out.empty()) {
        throw ValidationError("times list is empty");
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k] < 0.0 || (k > 0 && out[k] < out[k - 1])) {
            throw ValidationError("times must be nonnegative and ascending");
        }
    }
    return out;
}

void apply(ExperimentConfig &cfg, const std::string &key, const std::string &value) {
    if (key == "n") {
        const std::uint64_t n = to_unsigned(key, value);
        if (n < 1 || n > static_cast<std::uint64_t>(INT64_MAX)) {
            throw ValidationError("n must be at least 1");
        }
        cfg.n = static_cast<std::int64_t>(n);
    } else if (key == "seed") {
        cfg.seed = to_unsigned(key, value);
    } else if (key == "grid-n") {
        cfg.grid_n = to_unsigned(key, value);
        if (cfg.grid_n < 8) {
            throw ValidationError("grid-n must be at least 8");
        }
    } else if (key == "L") {
        cfg.length = positive(key, value);
    } else if (key == "m") {
        cfg.mass = positive(key, value);
    } else if (key == "omega") {
        cfg.omega = positive(key, value);
    } else if (key == "hbar") {
        cfg.hbar = positive(key, value);
    } else if (key == "d") {
        cfg.d = to_unsigned(key, value);
        if (cfg.d < 4) {
            throw ValidationError("d must be at least 4");
        }
    } else if (key == "times") {
        cfg.times = to_times(value);
    } else if (key == "a1") {
        cfg.a1 = to_double(key, value);
    } else if (key == "a2") {
        cfg.a2 = to_double(key, value);
    } else if (key == "out") {
        if (value.empty()) {
            throw ValidationError("out path is empty");
        }
        cfg.out_path = value;
    } else if (key == "format") {
        if (value == "csv") {
            cfg.format = Format::csv;
        } else if (value == "json") {
            cfg.format = Format::json;
        } else {
            throw ValidationError("format must be csv or json, got '" + value + "'");
        }
    } else if (key.starts_with("tol-")) {
        cfg.tolerances[key.substr(4)] = positive(key, value);
    } else {
        throw UsageError("unknown key '" + key + "'");
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading config file '" + path + "'");
    }
    return ss.str();
}

} // namespace

std::string_view to_string(Experiment e) noexcept {
    for (const auto &x : kExperiments) {
        if (x.value == e) {
            return x.name;
        }
    }
    return "?";
}

std::string_view to_string(Format f) noexcept { return f == Format::csv ? "csv" : "json"; }

Experiment parse_experiment(std::string_view name) {
    for (const auto &x : kExperiments) {
        if (x.name == name) {
            return x.value;
        }
    }
    throw UsageError("unknown experiment '" + std::string(name) + "'");
}

const std::map<std::string, double> &default_tolerances() {
    static const std::map<std::string, double> tol{
        {"weak", 1e-10},         // trace form of commutator expectations
        {"av", 1e-9},            // AV reconstruction residual
        {"orth", 1e-10},         // <psi|psi_perp>
        {"dispersion", 1e-8},    // max dispersion over an eigenbasis, relative
        {"residual", 1e-9},      // eigen equation residual, relative
        {"generator", 1e-9},     // reconstruction from the generator
        {"minpoly", 1e-9},       // minimal polynomial residual, relative
        {"eq3", 1e-9},           // Poisson vs commutator gap
        {"well", 5e-3},          // relative error of well levels
        {"spread", 1e-2},        // relative error of packet width
        {"stationary", 1e-6},    // width drift of a stationary state
        {"edge", 1e-6},          // boundary amplitude limit for spread comparisons
        {"sigma", 3.0},          // width of statistical bands in standard errors
        {"concentration", 0.99}, // single-cell mass of a point preparation
    };
    return tol;
}

ExperimentConfig defaults_for(Experiment e) {
    ExperimentConfig cfg;
    cfg.experiment = e;
    cfg.tolerances = default_tolerances();
    switch (e) {
    case Experiment::cat:
        cfg.n = 10000;
        break;
    case Experiment::well_spectrum:
        cfg.grid_n = 2000;
        break;
    case Experiment::spread:
        cfg.grid_n = 1000;
        break;
    case Experiment::eq3:
        cfg.d = 16;
        break;
    case Experiment::vn_generator:
        cfg.n = 100;
        break;
    case Experiment::ensemble_density:
        cfg.n = 50000;
        cfg.grid_n = 32;
        break;
    case Experiment::claims:
        cfg.n = 1000;
        break;
    }
    return cfg;
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
    std::map<std::string, std::string> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = canonical_key(trim(std::string_view(body).substr(0, eq)));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty()) {
            throw UsageError("config line " + std::to_string(line_no) + ": empty key");
        }
        if (!is_known_key(key)) {
            throw UsageError("config line " + std::to_string(line_no) + ": unknown key '" + key +
                             "'");
        }
        out[key] = value;
    }
    return out;
}

std::optional<ExperimentConfig> parse_config(const std::vector<std::string> &args,
                                             std::optional<std::string> env_seed,
                                             std::string *help_out) {
    CLI::App app{"Matrix-mechanics workbench: canned experiments with built-in checks.", "qcbench"};
    app.require_subcommand(1, 1);

    std::map<std::string, std::string> flag_values;
    std::map<std::string, CLI::Option *> flag_options;
    for (const FlagSpec &f : kFlags) {
        const std::string key(f.key);
        flag_options[key] = app.add_option("--" + key, flag_values[key], std::string(f.help));
    }
    for (const auto &[key, value] : default_tolerances()) {
        const std::string name = "tol-" + key;
        flag_options[name] = app.add_option("--" + name, flag_values[name],
                                            "tolerance (default " + format_double(value) + ")");
    }
    std::string config_path;
    CLI::Option *config_opt =
        app.add_option("--config", config_path, "flat key = value file; flags override it");

    std::map<std::string, CLI::App *> subs;
    for (const auto &x : kExperiments) {
        CLI::App *sub = app.add_subcommand(std::string(x.name), std::string(x.help));
        sub->fallthrough();
        subs[std::string(x.name)] = sub;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        if (help_out != nullptr) {
            *help_out = app.help();
        }
        return std::nullopt;
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    Experiment experiment = Experiment::claims;
    for (const auto &[name, sub] : subs) {
        if (sub->parsed()) {
            experiment = parse_experiment(name);
        }
    }

    ExperimentConfig cfg = defaults_for(experiment);
    if (env_seed) {
        apply(cfg, "seed", trim(*env_seed));
    }
    if (config_opt->count() > 0) {
        for (const auto &[key, value] : parse_config_text(read_file(config_path))) {
            apply(cfg, key, value);
        }
    }
    for (const auto &[key, opt] : flag_options) {
        if (opt->count() > 0) {
            apply(cfg, key, flag_values[key]);
        }
    }
    if (experiment == Experiment::cat && cfg.a1 == cfg.a2) {
        throw ValidationError("cat needs two distinct outcomes a1 != a2");
    }
    if (cfg.out_path.empty()) {
        cfg.out_path = std::string(to_string(experiment)) + "." + std::string(to_string(cfg.format));
    }
    return cfg;
}

std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig &cfg) {
    std::string times;
    for (std::size_t k = 0; k < cfg.times.size(); ++k) {
        times += (k > 0 ? ";" : "") + format_double(cfg.times[k]);
    }
    std::vector<std::pair<std::string, std::string>> out{
        {"experiment", std::string(to_string(cfg.experiment))},
        {"n", std::to_string(cfg.n)},
        {"seed", std::to_string(cfg.seed)},
        {"grid-n", std::to_string(cfg.grid_n)},
        {"L", format_double(cfg.length)},
        {"m", format_double(cfg.mass)},
        {"omega", format_double(cfg.omega)},
        {"hbar", format_double(cfg.hbar)},
        {"d", std::to_string(cfg.d)},
        {"times", times},
        {"a1", format_double(cfg.a1)},
        {"a2", format_double(cfg.a2)},
        {"out", cfg.out_path},
        {"format", std::string(to_string(cfg.format))},
    };
    for (const auto &[key, value] : cfg.tolerances) {
        out.emplace_back("tol-" + key, format_double(value));
    }
    return out;
}

} // namespace qcb::wb
