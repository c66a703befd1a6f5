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

#ifndef VACSUP_OPTIMIZE_H
#define VACSUP_OPTIMIZE_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vacsup/metrics.h"
#include "vacsup/scenarios.h"

namespace vacsup {

struct NelderMeadOptions {
    std::size_t max_iterations = 500;
    double initial_step = 0.25;
    /// Stop once the spread of objective values across the simplex drops
    /// below this.
    double value_tolerance = 1e-15;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    std::size_t iterations = 0;
};

/// Minimizes `objective` with the reflection/expansion/contraction simplex
/// method. `project` (optional) maps every proposal back onto the feasible
/// set before it is evaluated.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)> &objective,
                             std::vector<double> start, const NelderMeadOptions &options,
                             const std::function<void(std::vector<double> &)> &project = {});

struct OptimizerOptions {
    std::size_t restarts = 20;
    std::size_t max_iterations = 500;
    /// Start restart 0 from the best published configuration.
    bool include_published = true;
    unsigned threads = 0;
};

struct OptimizationResult {
    VacuumConfig best_config;
    double best_fidelity = 0;
    std::size_t iterations = 0;  // simplex iterations of the winning restart
    std::size_t best_restart = 0;
    std::uint64_t seed = 0;
    std::size_t restarts = 0;
};

/// Which Pauli/Kraus slots of each channel carry a free amplitude; all other
/// slots stay zero.
std::vector<std::vector<std::size_t>> free_slots(const ScenarioSpec &spec);

/// Fidelity of the outcome-0 post-state for `config`, or 0 if that outcome
/// never occurs.
double plus_outcome_fidelity(const ScenarioSpec &spec, const VacuumConfig &config);

/// Maximizes the outcome-0 fidelity over real amplitude vectors, each
/// channel's vector kept on the unit sphere. Restart r draws its start point
/// from a generator seeded with (seed, r), so results do not depend on the
/// thread count.
OptimizationResult optimize_amplitudes(const ScenarioSpec &spec, double p, double q, std::uint64_t seed,
                                       const OptimizerOptions &options = {});

}  // namespace vacsup

#endif
