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

#ifndef VACSUP_SCENARIOS_H
#define VACSUP_SCENARIOS_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vacsup/channels.h"
#include "vacsup/metrics.h"
#include "vacsup/superposition.h"

namespace vacsup {

enum class Family {
    kIdealBell,
    kIdealGhz,
    kIdealW,
    kBellDepolarizing,
    kBellBitphase,
    kGhzDepolarizing,
    kGhzBitphase,
    kWMemoryless,
    kCustom,
};

std::string_view family_name(Family family);
Family parse_family(std::string_view name);

enum class OutcomePolicy { kPlusOnly, kAllOutcomes };

std::string_view outcome_policy_name(OutcomePolicy policy);
OutcomePolicy parse_outcome_policy(std::string_view name);

/// What a noise parameter of a custom channel is tied to during a sweep.
enum class NoiseBinding { kFixed, kP, kQ };

/// Recipe for one channel of a custom scenario. Vacuum amplitudes live in
/// ScenarioSpec::config, not here.
struct ChannelSpec {
    enum class Kind { kDepolarizing, kPauli, kBitFlip, kPhaseFlip, kMemorylessBitflip, kUnitary };
    Kind kind = Kind::kDepolarizing;
    double probability = 0;
    std::vector<double> weights;  // kPauli only
    std::size_t qubit = 0;        // kMemorylessBitflip only
    NoiseBinding binding = NoiseBinding::kFixed;
    std::optional<Matrix> unitary;  // kUnitary only
};

std::string_view channel_kind_name(ChannelSpec::Kind kind);
ChannelSpec::Kind parse_channel_kind(std::string_view name);

struct ScenarioSpec {
    std::string name;
    Family family = Family::kCustom;
    std::size_t n = 2;          // target qubits
    std::vector<double> noise;  // (p, q) for two-branch families, (p_0..p_{n-1}) for W
    VacuumConfig config;        // one vector per channel
    OutcomePolicy outcome_policy = OutcomePolicy::kAllOutcomes;
    std::vector<ChannelSpec> channels;    // custom family only
    std::optional<TargetState> target;    // custom family only
    std::string note;
};

/// Materializes channels, input |0...0>, control and measurement basis.
SuperpositionScenario build_scenario(const ScenarioSpec &spec);

/// Copy of `spec` with its noise set from a sweep point. Two-branch families
/// take (p, q); the memoryless family sets every p_i = p.
ScenarioSpec with_noise(const ScenarioSpec &spec, double p, double q);

/// Fidelity of an outcome's post-state with that outcome's reference state:
/// Phi+/Phi- for Bell families, GHZ up to a relative phase for GHZ families,
/// the phase-corrected W for W families, and `target` for custom.
double outcome_fidelity(const ScenarioSpec &spec, std::size_t outcome, const DensityMatrix &state);

/// Reference state for an outcome (GHZ families report the +/- state).
TargetState outcome_target(const ScenarioSpec &spec, std::size_t outcome);

/// Closed-form fidelity where one exists for this family and outcome.
std::optional<double> oracle_fidelity(const ScenarioSpec &spec, std::size_t outcome);

ScenarioSpec builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// Published vacuum configurations usable for this spec's family and size.
std::vector<VacuumConfig> published_configs(const ScenarioSpec &spec);

bool has_free_amplitudes(Family family);

struct SweepRecord {
    double p = 0;
    double q = 0;
    std::size_t outcome = 0;
    double probability = 0;
    double fidelity = 0;
    std::optional<double> oracle_fidelity;
    double conc_pairwise = 0;
    double conc_one_vs_rest = 0;
};

struct SweepGrid {
    std::vector<double> p;
    std::vector<double> q;  // ignored when lock_q_to_p
    bool lock_q_to_p = true;
};

/// `points` evenly spaced values with both endpoints hit exactly.
std::vector<double> linspace(double start, double stop, std::size_t points);

/// Records in p-major, then q, then outcome order. Zero-probability
/// outcomes are omitted. Output is identical for any thread count.
std::vector<SweepRecord> sweep(const ScenarioSpec &spec, const SweepGrid &grid, unsigned threads = 0);

/// Records for a single (p, q) point.
std::vector<SweepRecord> evaluate_point(const ScenarioSpec &spec, double p, double q);

struct PropositionCheck {
    std::string name;
    std::string claim;
    double measured = 0;
    double expected = 1;
    double tolerance = 0;
    bool passed = false;
    std::string note;
};

std::vector<PropositionCheck> verify_propositions();

}  // namespace vacsup

#endif
