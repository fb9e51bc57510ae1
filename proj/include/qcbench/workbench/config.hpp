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

/**
 * @file
 * Experiment configuration for the command-line workbench.
 *
 * Values are layered, later layers winning:
 *   1. per-experiment defaults
 *   2. WORKBENCH_SEED from the environment (seed only)
 *   3. the `--config` file (flat `key = value` lines, `#` comments)
 *   4. command-line flags
 *
 * File keys use the flag spelling without the leading dashes
 * (`grid-n = 64`, `tol-eq3 = 1e-9`); `_` is accepted in place of `-`.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcb::wb {

enum class Experiment { cat, well_spectrum, spread, eq3, vn_generator, ensemble_density, claims };
enum class Format { csv, json };

[[nodiscard]] std::string_view to_string(Experiment e) noexcept;
[[nodiscard]] std::string_view to_string(Format f) noexcept;
/// Throws UsageError for an unknown name.
[[nodiscard]] Experiment parse_experiment(std::string_view name);

/// Tolerance keys accepted as `--tol-<key>`, with their compiled-in defaults.
[[nodiscard]] const std::map<std::string, double> &default_tolerances();

struct ExperimentConfig {
    Experiment experiment = Experiment::claims;
    std::int64_t n = 1;
    std::uint64_t seed = 42;
    std::size_t grid_n = 2000;
    double length = 1.0;
    double mass = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    std::size_t d = 16;
    std::vector<double> times; ///< empty: the experiment picks its own
    double a1 = 1.0;
    double a2 = -1.0;
    std::string out_path;
    Format format = Format::csv;
    std::map<std::string, double> tolerances;

    [[nodiscard]] double tol(const std::string &key) const { return tolerances.at(key); }

    friend bool operator==(const ExperimentConfig &, const ExperimentConfig &) = default;
};

[[nodiscard]] ExperimentConfig defaults_for(Experiment e);

/// Parses `key = value` text into a key map. Throws UsageError on malformed lines.
[[nodiscard]] std::map<std::string, std::string> parse_config_text(std::string_view text);

/**
 * Builds a config from argv-style arguments (without the program name).
 * `env_seed` is the value of WORKBENCH_SEED, if set.
 * Throws UsageError, ValidationError, or IoError (unreadable config file).
 * Returns nullopt when help was requested; the help text goes to `help_out`.
 */
[[nodiscard]] std::optional<ExperimentConfig> parse_config(const std::vector<std::string> &args,
                                                           std::optional<std::string> env_seed,
                                                           std::string *help_out = nullptr);

/// Flat key/value echo of every setting, in a fixed order.
[[nodiscard]] std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig &cfg);

} // namespace qcb::wb
