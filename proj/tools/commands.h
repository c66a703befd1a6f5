// Copyright 2026 The vacsup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VACSUP_TOOLS_COMMANDS_H
#define VACSUP_TOOLS_COMMANDS_H

#include <ostream>
#include <string>
#include <vector>

#include "cli_config.h"

namespace vacsup::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitScenario = 3;

/// CSV header shared by sweep and grid.
inline constexpr const char *kSweepHeader = "p,q,outcome,fidelity,oracle_fidelity,conc_pairwise,conc_one_vs_rest";

/// printf("%.9g").
std::string format_number(double v);

std::string sweep_csv(const std::vector<SweepRecord> &records, bool emit_oracle);

// Each command writes its artifact to config.out, or to `data` when out is
// empty or "-", and a human-readable summary to `info`.
int cmd_sweep(const RunConfig &config, std::ostream &data, std::ostream &info);
int cmd_grid(const RunConfig &config, std::ostream &data, std::ostream &info);
int cmd_verify(std::ostream &out);
int cmd_optimize(const RunConfig &config, std::ostream &data, std::ostream &info);
int cmd_walk(const RunConfig &config, std::ostream &data, std::ostream &info);

}  // namespace vacsup::cli

#endif
