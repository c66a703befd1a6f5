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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vacsup/dtqw.h"
#include "vacsup/error.h"
#include "vacsup/optimize.h"

namespace vacsup::cli {

namespace {

const char *kOneVsRestNote =
    "conc_one_vs_rest is sqrt(2(1 - Tr rho_k^2)) averaged over qubits; it measures entanglement only for pure "
    "post-states and is descriptive otherwise";

const ScenarioSpec &require_scenario(const RunConfig &config) {
    if (!config.scenario) {
        throw ConfigError("this command needs a scenario (--scenario or \"scenario\" in the config)");
    }
    return *config.scenario;
}

// Writes `text` to config.out or to `fallback`.
void emit(const RunConfig &config, const std::string &text, std::ostream &fallback) {
    if (config.out.empty() || config.out == "-") {
        fallback << text;
        return;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot write '" + config.out + "'");
    }
    file << text;
}

void summarize(const ScenarioSpec &spec, const std::vector<SweepRecord> &records, std::size_t points,
               std::ostream &info) {
    double lo = 1;
    double hi = 0;
    double oracle_gap = 0;
    bool has_oracle = false;
    for (const auto &r : records) {
        lo = std::min(lo, r.fidelity);
        hi = std::max(hi, r.fidelity);
        if (r.oracle_fidelity) {
            has_oracle = true;
            oracle_gap = std::max(oracle_gap, std::abs(r.fidelity - *r.oracle_fidelity));
        }
    }
    info << "scenario: " << spec.name << " (" << family_name(spec.family) << ", n=" << spec.n << ", "
         << outcome_policy_name(spec.outcome_policy) << ")\n";
    info << "grid points: " << points << ", rows: " << records.size() << "\n";
    if (!records.empty()) {
        info << "fidelity range: [" << format_number(lo) << ", " << format_number(hi) << "]\n";
    }
    if (has_oracle) {
        info << "max |fidelity - closed form|: " << format_number(oracle_gap) << "\n";
    }
    if (!spec.note.empty()) {
        info << "note: " << spec.note << "\n";
    }
    info << "note: " << kOneVsRestNote << "\n";
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string sweep_csv(const std::vector<SweepRecord> &records, bool emit_oracle) {
    std::ostringstream out;
    out << kSweepHeader << "\n";
    for (const auto &r : records) {
        out << format_number(r.p) << ',' << format_number(r.q) << ',' << r.outcome << ','
            << format_number(r.fidelity) << ',';
        if (emit_oracle && r.oracle_fidelity) {
            out << format_number(*r.oracle_fidelity);
        }
        out << ',' << format_number(r.conc_pairwise) << ',' << format_number(r.conc_one_vs_rest) << "\n";
    }
    return out.str();
}

int cmd_sweep(const RunConfig &config, std::ostream &data, std::ostream &info) {
    const auto &spec = require_scenario(config);
    SweepGrid grid;
    grid.p = linspace(config.grid.sweep.start, config.grid.sweep.stop, config.grid.sweep.points);
    grid.lock_q_to_p = config.grid.lock_q_to_p;
    if (!grid.lock_q_to_p) {
        grid.q = {config.q};
    }
    const auto records = sweep(spec, grid);
    emit(config, sweep_csv(records, config.emit_oracle), data);
    summarize(spec, records, grid.p.size(), info);
    return kExitOk;
}

int cmd_grid(const RunConfig &config, std::ostream &data, std::ostream &info) {
    const auto &spec = require_scenario(config);
    SweepGrid grid;
    grid.p = linspace(config.grid.grid_p.start, config.grid.grid_p.stop, config.grid.grid_p.points);
    grid.q = linspace(config.grid.grid_q.start, config.grid.grid_q.stop, config.grid.grid_q.points);
    grid.lock_q_to_p = false;
    const auto records = sweep(spec, grid);
    emit(config, sweep_csv(records, config.emit_oracle), data);
    summarize(spec, records, grid.p.size() * grid.q.size(), info);
    return kExitOk;
}

int cmd_verify(std::ostream &out) {
    const auto checks = verify_propositions();
    bool all = true;
    std::size_t width = 0;
    for (const auto &c : checks) {
        width = std::max(width, c.name.size());
    }
    for (const auto &c : checks) {
        all = all && c.passed;
        char measured[64];
        std::snprintf(measured, sizeof measured, "%.9f", c.measured);
        out << (c.passed ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ')
            << "fidelity " << measured;
        if (c.tolerance > 0) {
            out << "  tol " << format_number(c.tolerance);
        } else {
            out << "  floor " << format_number(c.expected);
        }
        out << "  " << c.claim;
        if (!c.note.empty()) {
            out << "  [" << c.note << "]";
        }
        out << "\n";
    }
    out << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? kExitOk : kExitFailed;
}

int cmd_optimize(const RunConfig &config, std::ostream &data, std::ostream &info) {
    const auto &spec = require_scenario(config);
    if (!has_free_amplitudes(spec.family)) {
        throw ConfigError("family '" + std::string(family_name(spec.family)) + "' has no free vacuum amplitudes");
    }
    OptimizerOptions options;
    options.restarts = config.restarts;
    options.max_iterations = config.iterations;
    const auto result = optimize_amplitudes(spec, config.p, config.q, config.seed, options);

    nlohmann::json cfg = nlohmann::json::array();
    for (const auto &v : result.best_config.amplitudes) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto &a : v) {
            row.push_back(a.real());
        }
        cfg.push_back(std::move(row));
    }
    nlohmann::json j{{"scenario", spec.name},
                     {"p", config.p},
                     {"q", config.q},
                     {"best_fidelity", result.best_fidelity},
                     {"best_config", std::move(cfg)},
                     {"seed", result.seed},
                     {"restarts", result.restarts},
                     {"iterations", result.iterations},
                     {"best_restart", result.best_restart}};
    emit(config, j.dump(2) + "\n", data);
    info << "scenario: " << spec.name << " at p=" << format_number(config.p) << ", q=" << format_number(config.q)
         << "\n";
    info << "best fidelity: " << format_number(result.best_fidelity) << " (restart " << result.best_restart << " of "
         << result.restarts << ", seed " << result.seed << ")\n";
    return kExitOk;
}

int cmd_walk(const RunConfig &config, std::ostream &data, std::ostream &info) {
    const auto spec = walk_spec(config.walk);
    const auto dist = evolve(spec);
    std::ostringstream csv;
    csv << "step,position,probability\n";
    for (std::size_t s = 0; s < dist.size(); ++s) {
        for (std::size_t x = 0; x < dist[s].size(); ++x) {
            csv << s << ',' << x << ',' << format_number(dist[s][x]) << "\n";
        }
    }
    emit(config, csv.str(), data);
    double asym = 0;
    const auto &last = dist.back();
    const std::size_t n = spec.positions;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t right = (config.walk.start + k) % n;
        const std::size_t left = (config.walk.start + n - k % n) % n;
        asym = std::max(asym, std::abs(last[right] - last[left]));
    }
    info << "walk: " << n << " sites, " << spec.steps << " steps, start " << config.walk.start << "\n";
    info << "max left/right asymmetry after the last step: " << format_number(asym) << "\n";
    return kExitOk;
}

}  // namespace vacsup::cli
