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

#include "qcbench/workbench/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include <json.hpp>

#include "qcbench/errors.hpp"

namespace qcb::wb {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string_view::npos ? s.size() - pos : next - pos));
        if (next == std::string_view::npos) {
            return out;
        }
        pos = next + 1;
    }
}

std::vector<std::string_view> lines(std::string_view text) {
    std::vector<std::string_view> out = split(text, '\n');
    if (!out.empty() && out.back().empty()) {
        out.pop_back();
    }
    return out;
}

bool is_integer_token(std::string_view t) {
    const std::size_t start = (!t.empty() && t[0] == '-') ? 1 : 0;
    return t.size() > start &&
           std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

Json cell_to_json(const Cell &c) {
    return std::visit([](const auto &v) { return Json(v); }, c);
}

Cell json_to_cell(const Json &j) {
    if (j.is_number_integer()) {
        return j.get<std::int64_t>();
    }
    if (j.is_number_float()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        return j.get<std::string>();
    }
    throw InputError("unsupported JSON cell: " + j.dump());
}

} // namespace

Check check_le(std::string name, double value, double tolerance) {
    return {std::move(name), value, tolerance, "<=", value <= tolerance};
}

Check check_ge(std::string name, double value, double tolerance) {
    return {std::move(name), value, tolerance, ">=", value >= tolerance};
}

bool RunResult::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    std::string s(buf.data(), ptr);
    if (s.find_first_of(".en") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string format_cell(const Cell &c) {
    if (const auto *i = std::get_if<std::int64_t>(&c)) {
        return std::to_string(*i);
    }
    if (const auto *d = std::get_if<double>(&c)) {
        return format_double(*d);
    }
    return std::get<std::string>(c);
}

Cell parse_cell(std::string_view token) {
    const char *end = token.data() + token.size();
    if (is_integer_token(token)) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), end, v);
        if (ec == std::errc() && ptr == end) {
            return v;
        }
    }
    double d = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), end, d);
    if (!token.empty() && ec == std::errc() && ptr == end) {
        return d;
    }
    return std::string(token);
}

std::string emit_csv(const Table &t) {
    std::string out;
    for (std::size_t k = 0; k < t.columns.size(); ++k) {
        out += (k > 0 ? "," : "") + t.columns[k];
    }
    out += '\n';
    for (const auto &row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) {
                out += ',';
            }
            out += format_cell(row[k]);
        }
        out += '\n';
    }
    return out;
}

Table parse_csv(std::string_view text) {
    const auto ls = lines(text);
    if (ls.empty()) {
        throw InputError("CSV text has no header");
    }
    Table t;
    for (std::string_view c : split(ls[0], ',')) {
        t.columns.emplace_back(c);
    }
    for (std::size_t r = 1; r < ls.size(); ++r) {
        const auto fields = split(ls[r], ',');
        if (fields.size() != t.columns.size()) {
            throw InputError("CSV row " + std::to_string(r) + " has " +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(t.columns.size()));
        }
        std::vector<Cell> row;
        row.reserve(fields.size());
        for (std::string_view f : fields) {
            row.push_back(parse_cell(f));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string emit_checks_csv(const std::vector<Check> &checks) {
    Table t{{"name", "value", "tolerance", "relation", "pass"}, {}};
    for (const Check &c : checks) {
        t.rows.push_back({c.name, c.value, c.tolerance, c.relation,
                          std::string(c.pass ? "PASS" : "FAIL")});
    }
    return emit_csv(t);
}

std::vector<Check> parse_checks_csv(std::string_view text) {
    const Table t = parse_csv(text);
    if (t.columns != std::vector<std::string>{"name", "value", "tolerance", "relation", "pass"}) {
        throw InputError("not a checks table");
    }
    const auto as_double = [](const Cell &c) {
        if (const auto *i = std::get_if<std::int64_t>(&c)) {
            return static_cast<double>(*i);
        }
        if (const auto *d = std::get_if<double>(&c)) {
            return *d;
        }
        throw InputError("expected a number, got '" + std::get<std::string>(c) + "'");
    };
    std::vector<Check> out;
    for (const auto &row : t.rows) {
        out.push_back({format_cell(row[0]), as_double(row[1]), as_double(row[2]),
                       format_cell(row[3]), format_cell(row[4]) == "PASS"});
    }
    return out;
}

std::string emit_json(const JsonDocument &doc) {
    Json config = Json::object();
    for (const auto &[k, v] : doc.config) {
        config[k] = v;
    }
    Json rows = Json::array();
    for (const auto &row : doc.table.rows) {
        Json r = Json::object();
        for (std::size_t k = 0; k < row.size(); ++k) {
            r[doc.table.columns[k]] = cell_to_json(row[k]);
        }
        rows.push_back(std::move(r));
    }
    Json checks = Json::array();
    for (const Check &c : doc.checks) {
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"tolerance", c.tolerance},
                          {"relation", c.relation},
                          {"pass", c.pass}});
    }
    Json root = Json::object();
    root["config"] = std::move(config);
    root["rows"] = std::move(rows);
    root["checks"] = std::move(checks);
    return root.dump(2) + "\n";
}

JsonDocument parse_json(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    try {
        JsonDocument doc;
        for (const auto &[k, v] : root.at("config").items()) {
            doc.config.emplace_back(k, v.get<std::string>());
        }
        const Json &rows = root.at("rows");
        if (!rows.empty()) {
            for (const auto &[k, v] : rows.front().items()) {
                doc.table.columns.push_back(k);
            }
        }
        for (const Json &r : rows) {
            std::vector<Cell> row;
            for (const std::string &c : doc.table.columns) {
                row.push_back(json_to_cell(r.at(c)));
            }
            doc.table.rows.push_back(std::move(row));
        }
        for (const Json &c : root.at("checks")) {
            doc.checks.push_back({c.at("name").get<std::string>(), c.at("value").get<double>(),
                                  c.at("tolerance").get<double>(),
                                  c.at("relation").get<std::string>(), c.at("pass").get<bool>()});
        }
        return doc;
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("unexpected JSON layout: ") + e.what());
    }
}

std::string summary_line(const Check &c) {
    return std::string(c.pass ? "PASS " : "FAIL ") + c.name + " " + format_double(c.value) + " " +
           c.relation + " " + format_double(c.tolerance);
}

} // namespace qcb::wb
