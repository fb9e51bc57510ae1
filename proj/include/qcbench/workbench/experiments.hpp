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

// The canned experiments and the process entry point.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcbench/workbench/config.hpp"
#include "qcbench/workbench/output.hpp"

namespace qcb::wb {

[[nodiscard]] RunResult run_cat(const ExperimentConfig &cfg);
[[nodiscard]] RunResult run_well_spectrum(const ExperimentConfig &cfg);
[[nodiscard]] RunResult run_spread(const ExperimentConfig &cfg);
[[nodiscard]] RunResult run_eq3(const ExperimentConfig &cfg);
[[nodiscard]] RunResult run_vn_generator(const ExperimentConfig &cfg);
[[nodiscard]] RunResult run_ensemble_density(const ExperimentConfig &cfg);
[[nodiscard]] RunResult run_claims(const ExperimentConfig &cfg);

[[nodiscard]] RunResult run_experiment(const ExperimentConfig &cfg);

/// Writes the artifact files for `cfg.format`. Throws IoError.
void write_artifacts(const ExperimentConfig &cfg, const RunResult &result);

/**
 * Full command-line run. Exit codes: 0 all checks pass, 1 some check
 * failed, 2 usage or validation error, 3 I/O failure.
 */
int workbench_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qcb::wb
