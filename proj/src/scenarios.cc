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

#include "vacsup/scenarios.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "vacsup/error.h"
#include "vacsup/parallel.h"

namespace vacsup {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

const double kS2 = 1.0 / std::sqrt(2.0);
const double kS3 = 1.0 / std::sqrt(3.0);
const double kS6 = 1.0 / std::sqrt(6.0);

using Amps = std::vector<complex>;

// Pauli-slot vectors (I, X, Y, Z) for the two-branch families.
VacuumConfig cfg_pair(Amps a, Amps b) { return VacuumConfig{{std::move(a), std::move(b)}}; }

// Depolarizing, p = q = 1: a0 = b0 = 0, a1 = -a2 = -a3 = 1/sqrt3, b1 = -b2 = -b3 = -1/sqrt3.
VacuumConfig depol_full() { return cfg_pair({0, kS3, -kS3, -kS3}, {0, -kS3, kS3, kS3}); }
// Depolarizing, p = q = 1/2.
VacuumConfig depol_half() { return cfg_pair({-kS2, kS6, -kS6, -kS6}, {kS2, -kS6, kS6, kS6}); }
VacuumConfig depol_uniform() { return cfg_pair({0.5, 0.5, 0.5, 0.5}, {0.5, 0.5, 0.5, 0.5}); }
// GHZ variants of the two depolarizing solutions.
VacuumConfig ghz_depol_full() { return cfg_pair({0, kS3, kS3, -kS3}, {0, -kS3, -kS3, kS3}); }
VacuumConfig ghz_depol_half() { return cfg_pair({-kS2, kS6, kS6, -kS6}, {kS2, -kS6, -kS6, kS6}); }
// Bit flip in slots {0, 1}, phase flip in slots {0, 3}.
VacuumConfig bitphase_full() { return cfg_pair({0, 1, 0, 0}, {0, 0, 0, 1}); }
VacuumConfig bitphase_half() { return cfg_pair({-kS2, kS2, 0, 0}, {kS2, 0, 0, kS2}); }
VacuumConfig bitphase_balanced() { return cfg_pair({kS2, kS2, 0, 0}, {kS2, 0, 0, kS2}); }

VacuumConfig memoryless(std::size_t n, complex a0, complex a1) { return VacuumConfig{std::vector<Amps>(n, Amps{a0, a1})}; }
VacuumConfig memoryless_full(std::size_t n) { return memoryless(n, 0, 1); }
VacuumConfig memoryless_balanced(std::size_t n) { return memoryless(n, kS2, kS2); }
VacuumConfig memoryless_third(std::size_t n) { return memoryless(n, kS3, std::sqrt(2.0 / 3.0)); }

VacuumConfig unit_amplitudes(std::size_t channels) { return VacuumConfig{std::vector<Amps>(channels, Amps{1.0})}; }

bool is_ghz_family(Family f) {
    return f == Family::kIdealGhz || f == Family::kGhzDepolarizing || f == Family::kGhzBitphase;
}

bool is_bell_family(Family f) {
    return f == Family::kIdealBell || f == Family::kBellDepolarizing || f == Family::kBellBitphase;
}

std::string normalize_name(std::string_view name) {
    std::string out;
    for (char c : name) {
        out.push_back(c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

ScenarioSpec make(std::string name, Family family, std::size_t n, std::vector<double> noise, VacuumConfig cfg,
                  OutcomePolicy policy, std::string note = {}) {
    ScenarioSpec s;
    s.name = std::move(name);
    s.family = family;
    s.n = n;
    s.noise = std::move(noise);
    s.config = std::move(cfg);
    s.outcome_policy = policy;
    s.note = std::move(note);
    return s;
}

ScenarioSpec ideal_ghz(std::size_t n) {
    return make("ideal_ghz_n" + std::to_string(n), Family::kIdealGhz, n, {}, unit_amplitudes(2),
                OutcomePolicy::kAllOutcomes, "X^n and Z^n superposed on |0...0>");
}

ScenarioSpec ideal_w(std::size_t n) {
    return make("ideal_w_n" + std::to_string(n), Family::kIdealW, n, {}, unit_amplitudes(n),
                OutcomePolicy::kAllOutcomes, "X_0..X_{n-1} superposed with a uniform control qudit");
}

std::vector<ScenarioSpec> registry() {
    constexpr auto kPlus = OutcomePolicy::kPlusOnly;
    constexpr auto kAll = OutcomePolicy::kAllOutcomes;
    const char *kCor2Note =
        "a0=b0=1, a1=b1=1 is not normalized; a0=b0=0, a1=b1=1 is used";
    std::vector<ScenarioSpec> r;
    r.push_back(make("ideal_bell", Family::kIdealBell, 2, {}, unit_amplitudes(2), kAll,
                     "X(x)X and Z(x)Z superposed on |00>"));
    r.push_back(make("prop4_p1", Family::kBellDepolarizing, 2, {1, 1}, depol_full(), kAll));
    r.push_back(make("prop4_p05", Family::kBellDepolarizing, 2, {0.5, 0.5}, depol_half(), kAll));
    r.push_back(make("cor1_p1", Family::kBellBitphase, 2, {1, 1}, bitphase_full(), kAll));
    r.push_back(make("cor1_p05", Family::kBellBitphase, 2, {0.5, 0.5}, bitphase_half(), kAll));
    r.push_back(make("prop5_p1", Family::kGhzDepolarizing, 4, {1, 1}, ghz_depol_full(), kAll,
                     "unit fidelity requires n = 0 mod 4"));
    r.push_back(make("prop5_p05", Family::kGhzDepolarizing, 4, {0.5, 0.5}, ghz_depol_half(), kAll,
                     "unit fidelity requires n = 0 mod 4"));
    r.push_back(make("cor2_p1", Family::kGhzBitphase, 3, {1, 1}, bitphase_full(), kAll, kCor2Note));
    r.push_back(make("cor2_p05", Family::kGhzBitphase, 3, {0.5, 0.5}, bitphase_half(), kAll));
    r.push_back(make("prop7_p1", Family::kWMemoryless, 3, {1, 1, 1}, memoryless_full(3), kAll));

    // Figure curves. Noise is a placeholder; sweeps override it.
    for (const char *fig : {"fig4a", "fig6a"}) {
        const std::string f = fig;
        r.push_back(make(f + "_red", Family::kBellDepolarizing, 2, {1, 1}, depol_full(), kPlus));
        r.push_back(make(f + "_blue", Family::kBellDepolarizing, 2, {0.5, 0.5}, depol_half(), kPlus));
    }
    r.push_back(make("fig4a_green", Family::kBellDepolarizing, 2, {0.5, 0.5}, depol_uniform(), kPlus));
    for (const char *fig : {"fig4b", "fig6b"}) {
        const std::string f = fig;
        r.push_back(make(f + "_red", Family::kBellBitphase, 2, {1, 1}, bitphase_full(), kPlus));
        r.push_back(make(f + "_green", Family::kBellBitphase, 2, {0.5, 0.5}, bitphase_balanced(), kPlus));
        r.push_back(make(f + "_blue", Family::kBellBitphase, 2, {0.5, 0.5}, bitphase_half(), kPlus));
    }
    r.push_back(make("fig5a", Family::kBellBitphase, 2, {0.5, 0.5}, bitphase_half(), kPlus));
    r.push_back(make("fig5b", Family::kBellBitphase, 2, {1, 1}, bitphase_full(), kPlus));
    r.push_back(make("fig5c", Family::kGhzBitphase, 3, {0.5, 0.5}, bitphase_half(), kPlus));
    for (const char *fig : {"fig7a", "fig7b"}) {
        const std::string f = fig;
        r.push_back(make(f + "_red", Family::kGhzBitphase, 3, {1, 1}, bitphase_full(), kPlus, kCor2Note));
        r.push_back(make(f + "_green", Family::kGhzBitphase, 3, {0.5, 0.5}, bitphase_balanced(), kPlus));
        r.push_back(make(f + "_blue", Family::kGhzBitphase, 3, {0.5, 0.5}, bitphase_half(), kPlus));
    }
    for (const char *fig : {"fig8a", "fig8b"}) {
        const std::string f = fig;
        r.push_back(make(f + "_red", Family::kWMemoryless, 3, {1, 1, 1}, memoryless_full(3), kPlus));
        r.push_back(make(f + "_green", Family::kWMemoryless, 3, {1, 1, 1}, memoryless_balanced(3), kPlus));
        r.push_back(make(f + "_blue", Family::kWMemoryless, 3, {1, 1, 1}, memoryless_third(3), kPlus));
    }

    // Family defaults for ad hoc sweeps and optimization.
    r.push_back(make("bell_depolarizing", Family::kBellDepolarizing, 2, {1, 1}, depol_full(), kPlus));
    r.push_back(make("bell_bitphase", Family::kBellBitphase, 2, {0.5, 0.5}, bitphase_half(), kPlus));
    r.push_back(make("ghz_depolarizing", Family::kGhzDepolarizing, 4, {1, 1}, ghz_depol_full(), kPlus));
    r.push_back(make("ghz_bitphase", Family::kGhzBitphase, 3, {0.5, 0.5}, bitphase_half(), kPlus));
    r.push_back(make("w_memoryless", Family::kWMemoryless, 3, {1, 1, 1}, memoryless_full(3), kPlus));
    return r;
}

std::optional<std::size_t> parse_suffix(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) {
        return std::nullopt;
    }
    const auto digits = name.substr(prefix.size());
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        return std::nullopt;
    }
    return value;
}

VacuumExtendedChannel build_custom_channel(const ChannelSpec &c, std::size_t n, double p, double q,
                                           std::span<const complex> amps) {
    const double prob = c.binding == NoiseBinding::kP ? p : c.binding == NoiseBinding::kQ ? q : c.probability;
    switch (c.kind) {
        case ChannelSpec::Kind::kDepolarizing:
            return depolarizing_correlated(prob, n, amps);
        case ChannelSpec::Kind::kPauli:
            return pauli_channel_correlated(c.weights, n, amps);
        case ChannelSpec::Kind::kBitFlip:
            return bit_flip_correlated(prob, n, amps);
        case ChannelSpec::Kind::kPhaseFlip:
            return phase_flip_correlated(prob, n, amps);
        case ChannelSpec::Kind::kMemorylessBitflip:
            return memoryless_bitflip(c.qubit, n, prob, amps);
        case ChannelSpec::Kind::kUnitary: {
            if (!c.unitary) {
                throw Error(ErrorKind::kInvalidArgument, "unitary channel without a matrix");
            }
            auto ch = unitary_channel(*c.unitary);
            if (amps.size() != 1) {
                throw Error(ErrorKind::kDimMismatch, "unitary channel takes one vacuum amplitude");
            }
            ch.vacuum_amplitudes.assign(amps.begin(), amps.end());
            return ch;
        }
    }
    throw Error(ErrorKind::kInvalidArgument, "unknown channel kind");
}

}  // namespace

std::string_view family_name(Family family) {
    switch (family) {
        case Family::kIdealBell:
            return "ideal_bell";
        case Family::kIdealGhz:
            return "ideal_ghz";
        case Family::kIdealW:
            return "ideal_w";
        case Family::kBellDepolarizing:
            return "bell_depolarizing";
        case Family::kBellBitphase:
            return "bell_bitphase";
        case Family::kGhzDepolarizing:
            return "ghz_depolarizing";
        case Family::kGhzBitphase:
            return "ghz_bitphase";
        case Family::kWMemoryless:
            return "w_memoryless";
        case Family::kCustom:
            return "custom";
    }
    return "custom";
}

Family parse_family(std::string_view name) {
    const std::string n = normalize_name(name);
    for (Family f : {Family::kIdealBell, Family::kIdealGhz, Family::kIdealW, Family::kBellDepolarizing,
                     Family::kBellBitphase, Family::kGhzDepolarizing, Family::kGhzBitphase, Family::kWMemoryless,
                     Family::kCustom}) {
        if (family_name(f) == n) {
            return f;
        }
    }
    throw Error(ErrorKind::kInvalidArgument, "unknown family '" + std::string(name) + "'");
}

std::string_view outcome_policy_name(OutcomePolicy policy) {
    return policy == OutcomePolicy::kPlusOnly ? "plus_only" : "all_outcomes";
}

OutcomePolicy parse_outcome_policy(std::string_view name) {
    const std::string n = normalize_name(name);
    if (n == "plus_only") {
        return OutcomePolicy::kPlusOnly;
    }
    if (n == "all_outcomes") {
        return OutcomePolicy::kAllOutcomes;
    }
    throw Error(ErrorKind::kInvalidArgument, "unknown outcome policy '" + std::string(name) + "'");
}

std::string_view channel_kind_name(ChannelSpec::Kind kind) {
    switch (kind) {
        case ChannelSpec::Kind::kDepolarizing:
            return "depolarizing";
        case ChannelSpec::Kind::kPauli:
            return "pauli";
        case ChannelSpec::Kind::kBitFlip:
            return "bit_flip";
        case ChannelSpec::Kind::kPhaseFlip:
            return "phase_flip";
        case ChannelSpec::Kind::kMemorylessBitflip:
            return "memoryless_bitflip";
        case ChannelSpec::Kind::kUnitary:
            return "unitary";
    }
    return "unitary";
}

ChannelSpec::Kind parse_channel_kind(std::string_view name) {
    const std::string n = normalize_name(name);
    for (auto k : {ChannelSpec::Kind::kDepolarizing, ChannelSpec::Kind::kPauli, ChannelSpec::Kind::kBitFlip,
                   ChannelSpec::Kind::kPhaseFlip, ChannelSpec::Kind::kMemorylessBitflip,
                   ChannelSpec::Kind::kUnitary}) {
        if (channel_kind_name(k) == n) {
            return k;
        }
    }
    throw Error(ErrorKind::kInvalidArgument, "unknown channel type '" + std::string(name) + "'");
}

bool has_free_amplitudes(Family family) {
    switch (family) {
        case Family::kBellDepolarizing:
        case Family::kBellBitphase:
        case Family::kGhzDepolarizing:
        case Family::kGhzBitphase:
        case Family::kWMemoryless:
        case Family::kCustom:
            return true;
        default:
            return false;
    }
}

SuperpositionScenario build_scenario(const ScenarioSpec &spec) {
    const std::size_t n = spec.n;
    if (n == 0 || n > 11) {
        throw Error(ErrorKind::kInvalidArgument, "target qubit count must be in 1..11");
    }
    if (is_bell_family(spec.family) && n != 2) {
        throw Error(ErrorKind::kInvalidArgument, "Bell families act on exactly two qubits");
    }
    const auto &cfg = spec.config.amplitudes;
    auto amps = [&](std::size_t k) -> std::span<const complex> {
        if (k >= cfg.size()) {
            throw Error(ErrorKind::kDimMismatch, "scenario '" + spec.name + "' is missing amplitudes for channel " +
                                                     std::to_string(k));
        }
        return cfg[k];
    };
    auto noise = [&](std::size_t k) {
        if (k >= spec.noise.size()) {
            throw Error(ErrorKind::kInvalidArgument, "scenario '" + spec.name + "' is missing noise parameter " +
                                                         std::to_string(k));
        }
        return spec.noise[k];
    };

    SuperpositionScenario sc;
    sc.input = DensityMatrix::zero_qubits(n);
    switch (spec.family) {
        case Family::kIdealBell:
        case Family::kIdealGhz:
            sc.channels.push_back(unitary_channel(pauli_power(Pauli::kX, n), "X^n"));
            sc.channels.push_back(unitary_channel(pauli_power(Pauli::kZ, n), "Z^n"));
            break;
        case Family::kIdealW:
            for (std::size_t i = 0; i < n; ++i) {
                sc.channels.push_back(unitary_channel(single_qubit_x(i, n), "X_" + std::to_string(i)));
            }
            break;
        case Family::kBellDepolarizing:
        case Family::kGhzDepolarizing:
            sc.channels.push_back(depolarizing_correlated(noise(0), n, amps(0)));
            sc.channels.push_back(depolarizing_correlated(noise(1), n, amps(1)));
            break;
        case Family::kBellBitphase:
        case Family::kGhzBitphase:
            sc.channels.push_back(bit_flip_correlated(noise(0), n, amps(0)));
            sc.channels.push_back(phase_flip_correlated(noise(1), n, amps(1)));
            break;
        case Family::kWMemoryless:
            if (n < 2) {
                throw Error(ErrorKind::kInvalidArgument, "memoryless family needs at least two qubits");
            }
            for (std::size_t i = 0; i < n; ++i) {
                sc.channels.push_back(memoryless_bitflip(i, n, noise(i), amps(i)));
            }
            break;
        case Family::kCustom: {
            const double p = spec.noise.empty() ? 0.0 : spec.noise[0];
            const double q = spec.noise.size() < 2 ? p : spec.noise[1];
            for (std::size_t k = 0; k < spec.channels.size(); ++k) {
                sc.channels.push_back(build_custom_channel(spec.channels[k], n, p, q, amps(k)));
            }
            break;
        }
    }
    const std::size_t branches = sc.channels.size();
    sc.control = ControlState::uniform(branches);
    sc.measurement_basis = branches == 2 ? plus_minus_basis() : fourier_basis(branches);
    sc.check();
    return sc;
}

ScenarioSpec with_noise(const ScenarioSpec &spec, double p, double q) {
    ScenarioSpec out = spec;
    if (spec.family == Family::kWMemoryless) {
        out.noise.assign(spec.n, p);
    } else {
        out.noise = {p, q};
    }
    return out;
}

TargetState outcome_target(const ScenarioSpec &spec, std::size_t outcome) {
    if (is_bell_family(spec.family)) {
        return outcome == 0 ? TargetState::bell_phi_plus() : TargetState::bell_phi_minus();
    }
    if (is_ghz_family(spec.family)) {
        return TargetState::ghz(spec.n, outcome == 0 ? +1 : -1);
    }
    if (spec.family == Family::kIdealW || spec.family == Family::kWMemoryless) {
        return TargetState::w(spec.n, outcome);
    }
    if (!spec.target) {
        throw Error(ErrorKind::kInvalidArgument, "custom scenario '" + spec.name + "' has no target state");
    }
    return *spec.target;
}

double outcome_fidelity(const ScenarioSpec &spec, std::size_t outcome, const DensityMatrix &state) {
    if (is_ghz_family(spec.family)) {
        return fidelity_up_to_phase(state, spec.n).fidelity;
    }
    return fidelity_pure(state, outcome_target(spec, outcome));
}

std::optional<double> oracle_fidelity(const ScenarioSpec &spec, std::size_t outcome) {
    if (outcome != 0) {
        return std::nullopt;
    }
    try {
        switch (spec.family) {
            case Family::kBellDepolarizing:
                return fid_closed_depolarizing(spec.noise.at(0), spec.noise.at(1), spec.config);
            case Family::kBellBitphase:
                return fid_closed_bitphase(spec.noise.at(0), spec.noise.at(1), spec.config);
            case Family::kWMemoryless:
                if (spec.n == 3) {
                    return fid_closed_w3(spec.noise, spec.config);
                }
                return std::nullopt;
            default:
                return std::nullopt;
        }
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::kDivisionByZero) {
            return std::nullopt;
        }
        throw;
    }
}

ScenarioSpec builtin(std::string_view name) {
    const std::string key = normalize_name(name);
    if (key == "prop1") {
        return builtin("ideal_bell");
    }
    if (key == "prop2") {
        return ideal_ghz(3);
    }
    if (key == "prop3") {
        return ideal_w(3);
    }
    if (auto n = parse_suffix(key, "ideal_ghz_n")) {
        if (*n < 2 || *n > 11) {
            throw Error(ErrorKind::kUnknownScenario, "ideal GHZ supports 2..11 qubits");
        }
        return ideal_ghz(*n);
    }
    if (auto n = parse_suffix(key, "ideal_w_n")) {
        if (*n < 2 || *n > 8) {
            throw Error(ErrorKind::kUnknownScenario, "ideal W supports 2..8 qubits");
        }
        return ideal_w(*n);
    }
    for (auto &s : registry()) {
        if (s.name == key) {
            return s;
        }
    }
    throw Error(ErrorKind::kUnknownScenario, "no builtin scenario named '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto &s : registry()) {
        names.push_back(s.name);
    }
    names.insert(names.begin() + 1, {"ideal_ghz_n3", "ideal_w_n3"});
    return names;
}

std::vector<VacuumConfig> published_configs(const ScenarioSpec &spec) {
    switch (spec.family) {
        case Family::kBellDepolarizing:
            return {depol_full(), depol_half(), depol_uniform()};
        case Family::kGhzDepolarizing:
            return {ghz_depol_full(), ghz_depol_half(), depol_full(), depol_half()};
        case Family::kBellBitphase:
        case Family::kGhzBitphase:
            return {bitphase_full(), bitphase_half(), bitphase_balanced()};
        case Family::kWMemoryless:
            return {memoryless_full(spec.n), memoryless_balanced(spec.n), memoryless_third(spec.n)};
        default:
            return {};
    }
}

std::vector<double> linspace(double start, double stop, std::size_t points) {
    if (points == 0) {
        throw Error(ErrorKind::kInvalidArgument, "grid needs at least one point");
    }
    if (points == 1) {
        return {start};
    }
    std::vector<double> out(points);
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) {
        out[k] = start + step * static_cast<double>(k);
    }
    out.back() = stop;
    return out;
}

std::vector<SweepRecord> evaluate_point(const ScenarioSpec &spec, double p, double q) {
    const ScenarioSpec point = with_noise(spec, p, q);
    const auto outcomes = run(build_scenario(point));
    std::vector<SweepRecord> records;
    for (const auto &o : outcomes) {
        if (spec.outcome_policy == OutcomePolicy::kPlusOnly && o.outcome_index != 0) {
            continue;
        }
        if (!o.post_state) {
            continue;
        }
        SweepRecord rec;
        rec.p = p;
        rec.q = spec.family == Family::kWMemoryless ? p : q;
        rec.outcome = o.outcome_index;
        rec.probability = o.probability;
        rec.fidelity = outcome_fidelity(point, o.outcome_index, *o.post_state);
        rec.oracle_fidelity = oracle_fidelity(point, o.outcome_index);
        const bool qubits = std::all_of(o.post_state->dims().begin(), o.post_state->dims().end(),
                                        [](std::size_t d) { return d == 2; });
        if (qubits && o.post_state->subsystem_count() >= 2) {
            rec.conc_pairwise = avg_pairwise_concurrence(*o.post_state);
            rec.conc_one_vs_rest = avg_one_vs_rest_concurrence(*o.post_state);
        }
        records.push_back(rec);
    }
    return records;
}

std::vector<SweepRecord> sweep(const ScenarioSpec &spec, const SweepGrid &grid, unsigned threads) {
    struct Point {
        double p;
        double q;
    };
    std::vector<Point> points;
    for (double p : grid.p) {
        if (grid.lock_q_to_p) {
            points.push_back({p, p});
        } else {
            for (double q : grid.q) {
                points.push_back({p, q});
            }
        }
    }
    for (const auto &pt : points) {
        if (!(pt.p >= 0 && pt.p <= 1 && pt.q >= 0 && pt.q <= 1)) {
            throw Error(ErrorKind::kBadProbability, "sweep grid leaves [0, 1]");
        }
    }
    std::vector<std::vector<SweepRecord>> per_point(points.size());
    parallel_for(
        points.size(), [&](std::size_t i) { per_point[i] = evaluate_point(spec, points[i].p, points[i].q); },
        threads);
    std::vector<SweepRecord> out;
    for (auto &chunk : per_point) {
        out.insert(out.end(), chunk.begin(), chunk.end());
    }
    return out;
}

std::vector<PropositionCheck> verify_propositions() {
    std::vector<PropositionCheck> checks;

    auto outcomes_of = [](const ScenarioSpec &spec) { return run(build_scenario(spec)); };

    auto min_fidelity = [&](const ScenarioSpec &spec, bool all_outcomes, double *worst_prob_dev = nullptr,
                            double expected_prob = 0) {
        const auto outcomes = outcomes_of(spec);
        double worst = 1.0;
        double prob_dev = 0;
        for (const auto &o : outcomes) {
            if (!all_outcomes && o.outcome_index != 0) {
                continue;
            }
            prob_dev = std::max(prob_dev, std::abs(o.probability - expected_prob));
            worst = std::min(worst, o.post_state ? outcome_fidelity(spec, o.outcome_index, *o.post_state) : 0.0);
        }
        if (worst_prob_dev) {
            *worst_prob_dev = prob_dev;
        }
        return worst;
    };

    auto add = [&](std::string name, std::string claim, double measured, double tolerance, std::string note = {}) {
        PropositionCheck c;
        c.name = std::move(name);
        c.claim = std::move(claim);
        c.measured = measured;
        c.expected = 1.0;
        c.tolerance = tolerance;
        c.passed = std::abs(measured - 1.0) <= tolerance;
        c.note = std::move(note);
        checks.push_back(std::move(c));
    };

    add("Prop. 1", "X(x)X + Z(x)Z on |00>: both outcomes give Phi+/Phi-", min_fidelity(builtin("ideal_bell"), true),
        1e-10);
    for (std::size_t n : {2, 3, 4, 5}) {
        add("Prop. 2 (n=" + std::to_string(n) + ")", "X^n + Z^n: every outcome is GHZ up to a phase",
            min_fidelity(ideal_ghz(n), true), 1e-10);
    }
    for (std::size_t n : {3, 4}) {
        double prob_dev = 0;
        const double f = min_fidelity(ideal_w(n), true, &prob_dev, 1.0 / static_cast<double>(n));
        add("Prop. 3 (n=" + std::to_string(n) + ")", "sum of X_i: every Fourier outcome is a phased W state",
            f, 1e-10, "max |prob - 1/n| = " + sci(prob_dev));
        if (prob_dev > 1e-10) {
            checks.back().passed = false;
        }
    }
    add("Prop. 4 (p=q=1)", "depolarizing, a0=b0=0 config: |+> outcome is Phi+",
        min_fidelity(builtin("prop4_p1"), false), 1e-9);
    add("Prop. 4 (p=q=1/2)", "depolarizing, a0=-b0=-1/sqrt2 config: |+> outcome is Phi+",
        min_fidelity(builtin("prop4_p05"), false), 1e-9);
    add("Cor. 1 (p=q=1)", "bit/phase flip, a1=b3=1: |+> outcome is Phi+", min_fidelity(builtin("cor1_p1"), false),
        1e-9);
    add("Cor. 1 (p=q=1/2)", "bit/phase flip, a0=-1/sqrt2: |+> outcome is Phi+",
        min_fidelity(builtin("cor1_p05"), false), 1e-9);
    add("Prop. 5 (n=4, p=q=1)", "depolarizing GHZ: |+> outcome is GHZ up to a phase",
        min_fidelity(builtin("prop5_p1"), false), 1e-9, "holds for n = 0 mod 4 only");
    add("Prop. 5 (n=4, p=q=1/2)", "depolarizing GHZ: |+> outcome is GHZ up to a phase",
        min_fidelity(builtin("prop5_p05"), false), 1e-9, "holds for n = 0 mod 4 only");
    add("Cor. 2 (n=3, p=q=1)", "bit/phase flip GHZ: |+> outcome is GHZ", min_fidelity(builtin("cor2_p1"), false),
        1e-9, "uses a0=b0=0, a1=b1=1 since a0=b0=a1=b1=1 is not normalized");
    add("Cor. 2 (n=3, p=q=1/2)", "bit/phase flip GHZ: |+> outcome is GHZ", min_fidelity(builtin("cor2_p05"), false),
        1e-9);
    add("Prop. 7 (n=3, p=1)", "memoryless bit flips: uniform outcome is W", min_fidelity(builtin("prop7_p1"), false),
        1e-9);
    {
        const double f = min_fidelity(with_noise(builtin("prop7_p1"), 0.99, 0.99), false);
        PropositionCheck c;
        c.name = "Prop. 7 (n=3, p=0.99)";
        c.claim = "fidelity approaches 1 as p -> 1";
        c.measured = f;
        c.expected = 0.994;
        c.tolerance = 0;
        c.passed = f >= 0.994;
        c.note = "threshold check: fidelity >= 0.994";
        checks.push_back(std::move(c));
    }
    return checks;
}

}  // namespace vacsup
