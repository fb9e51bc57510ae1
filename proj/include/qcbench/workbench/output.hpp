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
 * Result tables and their CSV / JSON forms.
 *
 * CSV: header row, `,` separator, `.` decimal point, `\n` line ends, no
 * quoting. Doubles use the shortest round-trip form and always carry a
 * `.`, an exponent, or are non-finite, so they never read back as
 * integers. Checks go to a companion file `<out>.checks.csv`.
 *
 * JSON: one object {"config": {...}, "rows": [...], "checks": [...]}; each
 * row is an object whose keys follow the column order.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qcb::wb {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    friend bool operator==(const Table &, const Table &) = default;
};

struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    std::string relation; ///< "<=" or ">="
    bool pass = false;

    friend bool operator==(const Check &, const Check &) = default;
};

[[nodiscard]] Check check_le(std::string name, double value, double tolerance);
[[nodiscard]] Check check_ge(std::string name, double value, double tolerance);

struct RunResult {
    Table table;
    std::vector<Check> checks;

    [[nodiscard]] bool all_pass() const;
};

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

[[nodiscard]] std::string format_double(double v);
[[nodiscard]] std::string format_cell(const Cell &c);
[[nodiscard]] Cell parse_cell(std::string_view token);

[[nodiscard]] std::string emit_csv(const Table &t);
[[nodiscard]] Table parse_csv(std::string_view text);

[[nodiscard]] std::string emit_checks_csv(const std::vector<Check> &checks);
[[nodiscard]] std::vector<Check> parse_checks_csv(std::string_view text);

struct JsonDocument {
    ConfigEcho config;
    Table table;
    std::vector<Check> checks;

    friend bool operator==(const JsonDocument &, const JsonDocument &) = default;
};

[[nodiscard]] std::string emit_json(const JsonDocument &doc);
/// Throws InputError on malformed documents.
[[nodiscard]] JsonDocument parse_json(std::string_view text);

/// One summary line per check, e.g. "PASS gap_q 2.1e-16 <= 1e-09".
[[nodiscard]] std::string summary_line(const Check &c);

} // namespace qcb::wb
