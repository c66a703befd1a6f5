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

#ifndef VACSUP_TOOLS_CLI_CONFIG_H
#define VACSUP_TOOLS_CLI_CONFIG_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "vacsup/dtqw.h"
#include "vacsup/scenarios.h"

namespace vacsup::cli {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Range {
    double start = 0;
    double stop = 1;
    std::size_t points = 101;
};

/// 1-D sweeps run over `sweep`; with lock_q_to_p off, q stays at RunConfig::q.
/// 2-D grids run over grid_p x grid_q.
struct GridSettings {
    Range sweep;
    bool lock_q_to_p = true;
    Range grid_p{0, 1, 51};
    Range grid_q{0, 1, 51};
};

struct WalkSettings {
    std::size_t positions = 41;
    Matrix coin;
    std::size_t steps = 20;
    std::size_t start = 20;
    std::vector<complex> coin_state;
};

struct RunConfig {
    std::optional<ScenarioSpec> scenario;
    GridSettings grid;
    double p = 1;
    double q = 1;
    std::uint64_t seed = 7;
    std::size_t restarts = 20;
    std::size_t iterations = 500;
    bool emit_oracle = true;
    std::string out;
    WalkSettings walk;
};

/// Defaults: the Hadamard walk on 41 sites started in the middle with coin
/// state (|0> + i|1>)/sqrt2, and no scenario.
RunConfig default_config();

/// Builtin names and inline objects are both accepted for "scenario". An
/// inline object may name a "builtin" base and override its fields.
/// Amplitude vectors within 1e-6 of unit norm are renormalized.
RunConfig parse_config(const nlohmann::json &doc);
RunConfig parse_config_text(const std::string &text);
RunConfig load_config(const std::string &path);

/// Fully resolved config; parse_config(to_json(c)) reproduces c.
nlohmann::json to_json(const RunConfig &config);

nlohmann::json scenario_to_json(const ScenarioSpec &spec);
ScenarioSpec scenario_from_json(const nlohmann::json &j);

WalkSpec walk_spec(const WalkSettings &walk);

}  // namespace vacsup::cli

#endif
