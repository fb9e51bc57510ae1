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

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "qcbench/errors.hpp"
#include "qcbench/workbench/experiments.hpp"

namespace qcb::wb {

namespace {

void write_file(const std::string &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    f << content;
    f.close();
    if (!f) {
        throw IoError("error writing '" + path + "'");
    }
}

} // namespace

void write_artifacts(const ExperimentConfig &cfg, const RunResult &result) {
    if (cfg.format == Format::csv) {
        write_file(cfg.out_path, emit_csv(result.table));
        write_file(cfg.out_path + ".checks.csv", emit_checks_csv(result.checks));
    } else {
        write_file(cfg.out_path, emit_json({describe(cfg), result.table, result.checks}));
    }
}

int workbench_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    ExperimentConfig cfg;
    try {
        std::optional<std::string> env_seed;
        if (const char *s = std::getenv("WORKBENCH_SEED"); s != nullptr) {
            env_seed = s;
        }
        std::string help;
        const auto parsed = parse_config(args, env_seed, &help);
        if (!parsed) {
            out << help;
            return 0;
        }
        cfg = *parsed;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError &e) {
        err << "invalid value: " << e.what() << "\n";
        return 2;
    } catch (const IoError &e) {
        err << "i/o error: " << e.what() << "\n";
        return 3;
    }

    try {
        for (const auto &[key, value] : describe(cfg)) {
            out << "# " << key << " = " << value << "\n";
        }
        const RunResult result = run_experiment(cfg);
        write_artifacts(cfg, result);
        for (const Check &c : result.checks) {
            out << summary_line(c) << "\n";
        }
        return result.all_pass() ? 0 : 1;
    } catch (const IoError &e) {
        err << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace qcb::wb
