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

#include "vacsup/optimize.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "vacsup/error.h"
#include "vacsup/parallel.h"

namespace vacsup {

namespace {

struct Vertex {
    std::vector<double> x;
    double f = 0;
};

// Splits a flat parameter vector into per-channel blocks.
struct Layout {
    std::vector<std::vector<std::size_t>> slots;
    std::vector<std::size_t> widths;  // full amplitude-vector length per channel

    std::size_t size() const {
        std::size_t s = 0;
        for (const auto &b : slots) {
            s += b.size();
        }
        return s;
    }

    void project(std::vector<double> &x) const {
        std::size_t offset = 0;
        for (const auto &block : slots) {
            double norm = 0;
            for (std::size_t k = 0; k < block.size(); ++k) {
                norm += x[offset + k] * x[offset + k];
            }
            norm = std::sqrt(norm);
            if (norm < 1e-12) {
                std::fill(x.begin() + offset, x.begin() + offset + block.size(), 0.0);
                x[offset] = 1.0;
            } else {
                for (std::size_t k = 0; k < block.size(); ++k) {
                    x[offset + k] /= norm;
                }
            }
            offset += block.size();
        }
    }

    VacuumConfig to_config(std::span<const double> x) const {
        VacuumConfig cfg;
        std::size_t offset = 0;
        for (std::size_t c = 0; c < slots.size(); ++c) {
            std::vector<complex> amps(widths[c], 0.0);
            for (std::size_t k = 0; k < slots[c].size(); ++k) {
                amps[slots[c][k]] = x[offset + k];
            }
            offset += slots[c].size();
            cfg.amplitudes.push_back(std::move(amps));
        }
        return cfg;
    }

    std::vector<double> from_config(const VacuumConfig &cfg) const {
        std::vector<double> x;
        for (std::size_t c = 0; c < slots.size(); ++c) {
            for (std::size_t s : slots[c]) {
                x.push_back(cfg.amplitudes.at(c).at(s).real());
            }
        }
        return x;
    }
};

Layout make_layout(const ScenarioSpec &spec) {
    Layout layout;
    layout.slots = free_slots(spec);
    switch (spec.family) {
        case Family::kWMemoryless:
            layout.widths.assign(layout.slots.size(), 2);
            break;
        case Family::kCustom:
            for (const auto &c : spec.channels) {
                layout.widths.push_back(c.kind == ChannelSpec::Kind::kUnitary           ? 1
                                        : c.kind == ChannelSpec::Kind::kMemorylessBitflip ? 2
                                                                                          : 4);
            }
            break;
        default:
            layout.widths.assign(layout.slots.size(), 4);
    }
    return layout;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)> &objective,
                             std::vector<double> start, const NelderMeadOptions &options,
                             const std::function<void(std::vector<double> &)> &project) {
    const std::size_t dim = start.size();
    if (dim == 0) {
        throw Error(ErrorKind::kInvalidArgument, "simplex search needs at least one parameter");
    }
    auto make_vertex = [&](std::vector<double> x) {
        if (project) {
            project(x);
        }
        const double f = objective(x);
        return Vertex{std::move(x), f};
    };

    std::vector<Vertex> simplex;
    simplex.reserve(dim + 1);
    simplex.push_back(make_vertex(start));
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<double> x = simplex.front().x;
        x[k] += options.initial_step;
        simplex.push_back(make_vertex(std::move(x)));
    }
    auto by_value = [](const Vertex &a, const Vertex &b) { return a.f < b.f; };

    std::size_t it = 0;
    for (; it < options.max_iterations; ++it) {
        std::stable_sort(simplex.begin(), simplex.end(), by_value);
        if (simplex.back().f - simplex.front().f <= options.value_tolerance) {
            break;
        }
        std::vector<double> centroid(dim, 0.0);
        for (std::size_t v = 0; v < dim; ++v) {
            for (std::size_t k = 0; k < dim; ++k) {
                centroid[k] += simplex[v].x[k] / static_cast<double>(dim);
            }
        }
        const Vertex &worst = simplex.back();
        auto along = [&](double t) {
            std::vector<double> x(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                x[k] = centroid[k] + t * (worst.x[k] - centroid[k]);
            }
            return make_vertex(std::move(x));
        };

        Vertex reflected = along(-1.0);
        if (reflected.f < simplex.front().f) {
            Vertex expanded = along(-2.0);
            simplex.back() = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
            continue;
        }
        if (reflected.f < simplex[dim - 1].f) {
            simplex.back() = std::move(reflected);
            continue;
        }
        const bool outside = reflected.f < worst.f;
        Vertex contracted = along(outside ? -0.5 : 0.5);
        if (contracted.f < (outside ? reflected.f : worst.f)) {
            simplex.back() = std::move(contracted);
            continue;
        }
        for (std::size_t v = 1; v <= dim; ++v) {
            std::vector<double> x(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                x[k] = simplex[0].x[k] + 0.5 * (simplex[v].x[k] - simplex[0].x[k]);
            }
            simplex[v] = make_vertex(std::move(x));
        }
    }
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    return NelderMeadResult{simplex.front().x, simplex.front().f, it};
}

std::vector<std::vector<std::size_t>> free_slots(const ScenarioSpec &spec) {
    const std::vector<std::size_t> all4 = {0, 1, 2, 3};
    switch (spec.family) {
        case Family::kBellDepolarizing:
        case Family::kGhzDepolarizing:
            return {all4, all4};
        case Family::kBellBitphase:
        case Family::kGhzBitphase:
            return {{0, 1}, {0, 3}};
        case Family::kWMemoryless:
            return std::vector<std::vector<std::size_t>>(spec.n, {0, 1});
        case Family::kCustom: {
            std::vector<std::vector<std::size_t>> out;
            for (const auto &c : spec.channels) {
                switch (c.kind) {
                    case ChannelSpec::Kind::kBitFlip:
                        out.push_back({0, 1});
                        break;
                    case ChannelSpec::Kind::kPhaseFlip:
                        out.push_back({0, 3});
                        break;
                    case ChannelSpec::Kind::kMemorylessBitflip:
                        out.push_back({0, 1});
                        break;
                    case ChannelSpec::Kind::kUnitary:
                        out.push_back({0});
                        break;
                    default:
                        out.push_back(all4);
                }
            }
            return out;
        }
        default:
            throw Error(ErrorKind::kInvalidArgument,
                        "family '" + std::string(family_name(spec.family)) + "' has no free vacuum amplitudes");
    }
}

double plus_outcome_fidelity(const ScenarioSpec &spec, const VacuumConfig &config) {
    ScenarioSpec s = spec;
    s.config = config;
    const auto outcomes = run(build_scenario(s));
    const auto &o = outcomes.front();
    if (!o.post_state) {
        return 0.0;
    }
    return outcome_fidelity(s, 0, *o.post_state);
}

OptimizationResult optimize_amplitudes(const ScenarioSpec &spec, double p, double q, std::uint64_t seed,
                                       const OptimizerOptions &options) {
    if (!has_free_amplitudes(spec.family)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "family '" + std::string(family_name(spec.family)) + "' has no free vacuum amplitudes");
    }
    if (options.restarts == 0) {
        throw Error(ErrorKind::kInvalidArgument, "optimizer needs at least one restart");
    }
    const ScenarioSpec point = with_noise(spec, p, q);
    const Layout layout = make_layout(point);
    const std::size_t dim = layout.size();

    std::vector<double> anchor;
    if (options.include_published) {
        double best = -1;
        std::vector<VacuumConfig> candidates = published_configs(point);
        candidates.push_back(point.config);
        for (const auto &cfg : candidates) {
            if (cfg.amplitudes.size() != layout.slots.size()) {
                continue;
            }
            std::vector<double> x = layout.from_config(cfg);
            layout.project(x);
            double f = -1;
            try {
                f = plus_outcome_fidelity(point, layout.to_config(x));
            } catch (const Error &) {
                continue;
            }
            if (f > best) {
                best = f;
                anchor = std::move(x);
            }
        }
    }

    auto objective = [&](std::span<const double> x) { return -plus_outcome_fidelity(point, layout.to_config(x)); };
    auto project = [&](std::vector<double> &x) { layout.project(x); };
    NelderMeadOptions nm;
    nm.max_iterations = options.max_iterations;

    std::vector<NelderMeadResult> results(options.restarts);
    parallel_for(
        options.restarts,
        [&](std::size_t r) {
            std::vector<double> start;
            if (r == 0 && !anchor.empty()) {
                start = anchor;
            } else {
                std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                  static_cast<std::uint32_t>(r)};
                std::mt19937_64 rng(seq);
                std::normal_distribution<double> gauss;
                start.resize(dim);
                for (auto &v : start) {
                    v = gauss(rng);
                }
            }
            results[r] = nelder_mead(objective, std::move(start), nm, project);
        },
        options.threads);

    std::size_t best = 0;
    for (std::size_t r = 1; r < results.size(); ++r) {
        if (results[r].value < results[best].value) {
            best = r;
        }
    }
    OptimizationResult out;
    out.best_config = layout.to_config(results[best].x);
    out.best_fidelity = -results[best].value;
    out.iterations = results[best].iterations;
    out.best_restart = best;
    out.seed = seed;
    out.restarts = options.restarts;
    return out;
}

}  // namespace vacsup
