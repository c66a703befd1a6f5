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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli_config.h"
#include "commands.h"
#include "vacsup/error.h"

using vacsup::cli::ConfigError;
using vacsup::cli::RunConfig;

namespace {

struct Flags {
    std::string config_path;
    std::string scenario;
    std::optional<double> p;
    std::optional<double> q;
    std::optional<std::size_t> points;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> restarts;
    std::optional<std::size_t> iterations;
    std::optional<std::size_t> steps;
    std::optional<std::string> out;
    bool dump_config = false;
};

RunConfig resolve(const Flags &f, const std::string &command) {
    RunConfig c = f.config_path.empty() ? vacsup::cli::default_config() : vacsup::cli::load_config(f.config_path);
    if (!f.scenario.empty()) {
        c.scenario = vacsup::cli::scenario_from_json(nlohmann::json(f.scenario));
    }
    if (f.p) {
        c.p = *f.p;
        c.q = *f.p;
        if (command == "sweep") {
            c.grid.sweep = {*f.p, *f.p, 1};
        }
    }
    if (f.q) {
        c.q = *f.q;
        if (command == "sweep") {
            c.grid.lock_q_to_p = false;
        }
    }
    if (f.points) {
        if (*f.points == 0) {
            throw ConfigError("--points must be at least 1");
        }
        c.grid.sweep.points = *f.points;
        c.grid.grid_p.points = *f.points;
        c.grid.grid_q.points = *f.points;
    }
    if (f.seed) {
        c.seed = *f.seed;
    }
    if (f.restarts) {
        c.restarts = *f.restarts;
    }
    if (f.iterations) {
        c.iterations = *f.iterations;
    }
    if (f.steps) {
        c.walk.steps = *f.steps;
    }
    if (f.out) {
        c.out = *f.out;
    }
    if (c.restarts == 0) {
        throw ConfigError("--restarts must be at least 1");
    }
    return c;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Coherent superposition of vacuum-extended channels: sweeps, checks, optimization, walks"};
    app.require_subcommand(0, 1);
    Flags f;
    app.add_option("-c,--config", f.config_path, "JSON run configuration");
    app.add_option("-s,--scenario", f.scenario, "builtin scenario name (overrides the config)");
    app.add_option("--p", f.p, "noise p (sweep: evaluate this single p)")->check(CLI::Range(0.0, 1.0));
    app.add_option("--q", f.q, "noise q (sweep: fix q instead of locking it to p)")->check(CLI::Range(0.0, 1.0));
    app.add_option("--points", f.points, "grid points per axis");
    app.add_option("--seed", f.seed, "optimizer seed");
    app.add_option("--restarts", f.restarts, "optimizer restarts");
    app.add_option("--iterations", f.iterations, "simplex iterations per restart");
    app.add_option("--steps", f.steps, "walk steps");
    app.add_option("-o,--out", f.out, "output file (default: standard output)");
    app.add_flag("--dump-config", f.dump_config, "print the resolved configuration as JSON and exit");
    bool list = false;
    app.add_flag("--list", list, "list builtin scenarios and exit");

    auto *sweep = app.add_subcommand("sweep", "1-D noise sweep to CSV")->fallthrough();
    auto *grid = app.add_subcommand("grid", "2-D (p, q) grid to CSV")->fallthrough();
    auto *verify = app.add_subcommand("verify", "check every proposition; exit 1 on failure")->fallthrough();
    auto *optimize = app.add_subcommand("optimize", "optimize vacuum amplitudes to JSON")->fallthrough();
    auto *walk = app.add_subcommand("walk", "coined quantum walk distributions to CSV")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : vacsup::cli::kExitConfig;
    }

    std::string command;
    for (auto *sub : {sweep, grid, verify, optimize, walk}) {
        if (sub->parsed()) {
            command = sub->get_name();
        }
    }
    try {
        if (list) {
            for (const auto &name : vacsup::builtin_names()) {
                std::cout << name << "\n";
            }
            return vacsup::cli::kExitOk;
        }
        const RunConfig config = resolve(f, command);
        if (f.dump_config) {
            std::cout << vacsup::cli::to_json(config).dump(2) << "\n";
            return vacsup::cli::kExitOk;
        }
        // With CSV on standard output the summary goes to standard error.
        const bool to_stdout = config.out.empty() || config.out == "-";
        std::ostream &info = to_stdout ? std::cerr : std::cout;
        if (command == "sweep") {
            return vacsup::cli::cmd_sweep(config, std::cout, info);
        }
        if (command == "grid") {
            return vacsup::cli::cmd_grid(config, std::cout, info);
        }
        if (command == "verify") {
            return vacsup::cli::cmd_verify(std::cout);
        }
        if (command == "optimize") {
            return vacsup::cli::cmd_optimize(config, std::cout, info);
        }
        if (command == "walk") {
            return vacsup::cli::cmd_walk(config, std::cout, info);
        }
        std::cerr << app.help();
        return vacsup::cli::kExitConfig;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return vacsup::cli::kExitConfig;
    } catch (const vacsup::Error &e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return vacsup::cli::kExitScenario;
    }
}
