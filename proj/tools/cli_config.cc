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

#include "cli_config.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "vacsup/error.h"

namespace vacsup::cli {

namespace {

using nlohmann::json;

constexpr double kRenormalizeWindow = 1e-6;
constexpr double kRenormalizeFloor = 1e-12;

void check_keys(const json &j, const char *where, std::initializer_list<const char *> allowed) {
    if (!j.is_object()) {
        throw ConfigError(std::string(where) + " must be a JSON object");
    }
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto &item : j.items()) {
        if (!ok.count(item.key())) {
            throw ConfigError(std::string("unknown key '") + item.key() + "' in " + where);
        }
    }
}

complex parse_complex(const json &j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ConfigError("complex numbers are written as a number or [re, im], got " + j.dump());
}

json complex_to_json(complex c) {
    if (c.imag() == 0.0) {
        return c.real();
    }
    return json::array({c.real(), c.imag()});
}

std::vector<complex> parse_vector(const json &j) {
    if (!j.is_array()) {
        throw ConfigError("expected an array of complex numbers, got " + j.dump());
    }
    std::vector<complex> out;
    for (const auto &e : j) {
        out.push_back(parse_complex(e));
    }
    return out;
}

json vector_to_json(const std::vector<complex> &v) {
    json out = json::array();
    for (const auto &c : v) {
        out.push_back(complex_to_json(c));
    }
    return out;
}

Matrix parse_matrix(const json &j) {
    if (!j.is_array() || j.empty()) {
        throw ConfigError("matrices are written as a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    std::vector<complex> entries;
    std::size_t cols = 0;
    for (const auto &row : j) {
        auto r = parse_vector(row);
        if (cols == 0) {
            cols = r.size();
        } else if (r.size() != cols) {
            throw ConfigError("matrix rows differ in length");
        }
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(rows, cols, std::move(entries));
}

json matrix_to_json(const Matrix &m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

void renormalize(std::vector<complex> &v) {
    double s = 0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    const double defect = std::abs(s - 1.0);
    if (defect > kRenormalizeFloor && defect <= kRenormalizeWindow) {
        const double scale = 1.0 / std::sqrt(s);
        for (auto &a : v) {
            a *= scale;
        }
    }
}

double probability(const json &j, const char *what) {
    if (!j.is_number()) {
        throw ConfigError(std::string(what) + " must be a number");
    }
    const double v = j.get<double>();
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ConfigError(std::string(what) + " must lie in [0, 1]");
    }
    return v;
}

Range parse_range(const json &j, const char *where, Range r) {
    check_keys(j, where, {"start", "stop", "points"});
    if (j.contains("start")) {
        r.start = probability(j["start"], "grid start");
    }
    if (j.contains("stop")) {
        r.stop = probability(j["stop"], "grid stop");
    }
    if (j.contains("points")) {
        r.points = j["points"].get<std::size_t>();
    }
    if (r.points == 0) {
        throw ConfigError(std::string(where) + ": points must be at least 1");
    }
    return r;
}

json range_to_json(const Range &r) { return json{{"start", r.start}, {"stop", r.stop}, {"points", r.points}}; }

NoiseBinding parse_binding(const std::string &s) {
    if (s == "fixed") {
        return NoiseBinding::kFixed;
    }
    if (s == "p") {
        return NoiseBinding::kP;
    }
    if (s == "q") {
        return NoiseBinding::kQ;
    }
    throw ConfigError("channel binding must be fixed, p or q");
}

const char *binding_name(NoiseBinding b) {
    switch (b) {
        case NoiseBinding::kP:
            return "p";
        case NoiseBinding::kQ:
            return "q";
        default:
            return "fixed";
    }
}

ChannelSpec parse_channel(const json &j) {
    check_keys(j, "channel", {"type", "p", "weights", "qubit", "binding", "unitary"});
    if (!j.contains("type")) {
        throw ConfigError("channel needs a type");
    }
    ChannelSpec c;
    c.kind = parse_channel_kind(j["type"].get<std::string>());
    if (j.contains("p")) {
        c.probability = probability(j["p"], "channel p");
    }
    if (j.contains("weights")) {
        c.weights = j["weights"].get<std::vector<double>>();
    }
    if (j.contains("qubit")) {
        c.qubit = j["qubit"].get<std::size_t>();
    }
    if (j.contains("binding")) {
        c.binding = parse_binding(j["binding"].get<std::string>());
    }
    if (j.contains("unitary")) {
        c.unitary = parse_matrix(j["unitary"]);
    }
    if (c.kind == ChannelSpec::Kind::kPauli && c.weights.size() != 4) {
        throw ConfigError("pauli channel needs four weights");
    }
    if (c.kind == ChannelSpec::Kind::kUnitary && !c.unitary) {
        throw ConfigError("unitary channel needs a unitary matrix");
    }
    return c;
}

json channel_to_json(const ChannelSpec &c) {
    json j{{"type", std::string(channel_kind_name(c.kind))}, {"binding", binding_name(c.binding)}};
    switch (c.kind) {
        case ChannelSpec::Kind::kPauli:
            j["weights"] = c.weights;
            break;
        case ChannelSpec::Kind::kUnitary:
            j["unitary"] = matrix_to_json(*c.unitary);
            break;
        case ChannelSpec::Kind::kMemorylessBitflip:
            j["qubit"] = c.qubit;
            j["p"] = c.probability;
            break;
        default:
            j["p"] = c.probability;
    }
    return j;
}

TargetState parse_target(const json &j, std::size_t n) {
    if (j.is_array()) {
        return TargetState::custom(parse_vector(j));
    }
    const auto name = j.get<std::string>();
    if (name == "bell_phi_plus") {
        return TargetState::bell_phi_plus();
    }
    if (name == "bell_phi_minus") {
        return TargetState::bell_phi_minus();
    }
    if (name == "ghz") {
        return TargetState::ghz(n);
    }
    if (name == "w") {
        return TargetState::w(n);
    }
    throw ConfigError("unknown target '" + name + "'");
}

WalkSettings default_walk() {
    WalkSettings w;
    const double h = 1.0 / std::sqrt(2.0);
    w.coin = Matrix{{h, h}, {h, -h}};
    w.coin_state = {h, complex(0, h)};
    return w;
}

Matrix parse_coin(const json &j) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        const double h = 1.0 / std::sqrt(2.0);
        if (name == "hadamard") {
            return Matrix{{h, h}, {h, -h}};
        }
        if (name == "identity") {
            return Matrix::identity(2);
        }
        if (name == "x") {
            return Matrix{{0, 1}, {1, 0}};
        }
        throw ConfigError("unknown coin '" + name + "' (hadamard, identity, x or a 2x2 matrix)");
    }
    return parse_matrix(j);
}

WalkSettings parse_walk(const json &j) {
    check_keys(j, "walk", {"positions", "coin", "steps", "start", "coin_state"});
    WalkSettings w = default_walk();
    if (j.contains("positions")) {
        w.positions = j["positions"].get<std::size_t>();
        w.start = w.positions / 2;
    }
    if (j.contains("coin")) {
        w.coin = parse_coin(j["coin"]);
    }
    if (j.contains("steps")) {
        w.steps = j["steps"].get<std::size_t>();
    }
    if (j.contains("start")) {
        w.start = j["start"].get<std::size_t>();
    }
    if (j.contains("coin_state")) {
        w.coin_state = parse_vector(j["coin_state"]);
    }
    if (w.positions == 0 || w.start >= w.positions) {
        throw ConfigError("walk start must be a site index below positions");
    }
    return w;
}

RunConfig parse_config_impl(const json &doc) {
    check_keys(doc, "config",
               {"scenario", "sweep", "grid", "p", "q", "seed", "restarts", "iterations", "emit_oracle", "out",
                "outcome_policy", "walk"});
    RunConfig c = default_config();
    if (doc.contains("scenario")) {
        c.scenario = scenario_from_json(doc["scenario"]);
    }
    if (doc.contains("outcome_policy")) {
        if (!c.scenario) {
            throw ConfigError("outcome_policy given without a scenario");
        }
        c.scenario->outcome_policy = parse_outcome_policy(doc["outcome_policy"].get<std::string>());
    }
    if (doc.contains("sweep")) {
        const auto &s = doc["sweep"];
        check_keys(s, "sweep", {"start", "stop", "points", "lock_q_to_p"});
        json range = s;
        range.erase("lock_q_to_p");
        c.grid.sweep = parse_range(range, "sweep", c.grid.sweep);
        if (s.contains("lock_q_to_p")) {
            c.grid.lock_q_to_p = s["lock_q_to_p"].get<bool>();
        }
    }
    if (doc.contains("grid")) {
        const auto &g = doc["grid"];
        check_keys(g, "grid", {"p", "q"});
        if (g.contains("p")) {
            c.grid.grid_p = parse_range(g["p"], "grid.p", c.grid.grid_p);
        }
        if (g.contains("q")) {
            c.grid.grid_q = parse_range(g["q"], "grid.q", c.grid.grid_q);
        }
    }
    if (doc.contains("p")) {
        c.p = probability(doc["p"], "p");
        c.q = c.p;
    }
    if (doc.contains("q")) {
        c.q = probability(doc["q"], "q");
    }
    if (doc.contains("seed")) {
        c.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("restarts")) {
        c.restarts = doc["restarts"].get<std::size_t>();
    }
    if (doc.contains("iterations")) {
        c.iterations = doc["iterations"].get<std::size_t>();
    }
    if (doc.contains("emit_oracle")) {
        c.emit_oracle = doc["emit_oracle"].get<bool>();
    }
    if (doc.contains("out")) {
        c.out = doc["out"].get<std::string>();
    }
    if (doc.contains("walk")) {
        c.walk = parse_walk(doc["walk"]);
    }
    if (c.restarts == 0) {
        throw ConfigError("restarts must be at least 1");
    }
    return c;
}

}  // namespace

RunConfig default_config() {
    RunConfig c;
    c.walk = default_walk();
    return c;
}

ScenarioSpec scenario_from_json(const json &j) {
    if (j.is_string()) {
        return builtin(j.get<std::string>());
    }
    check_keys(j, "scenario",
               {"builtin", "name", "family", "n", "noise", "config", "outcome_policy", "channels", "target", "note"});
    ScenarioSpec s;
    if (j.contains("builtin")) {
        s = builtin(j["builtin"].get<std::string>());
    } else if (!j.contains("family")) {
        throw ConfigError("inline scenario needs a family or a builtin base");
    } else {
        s.name = "inline";
    }
    if (j.contains("name")) {
        s.name = j["name"].get<std::string>();
    }
    if (j.contains("family")) {
        s.family = parse_family(j["family"].get<std::string>());
    }
    if (j.contains("n")) {
        s.n = j["n"].get<std::size_t>();
    }
    if (j.contains("noise")) {
        s.noise.clear();
        for (const auto &v : j["noise"]) {
            s.noise.push_back(probability(v, "noise parameter"));
        }
    }
    if (j.contains("config")) {
        s.config.amplitudes.clear();
        for (const auto &v : j["config"]) {
            s.config.amplitudes.push_back(parse_vector(v));
        }
    }
    for (auto &v : s.config.amplitudes) {
        renormalize(v);
    }
    if (j.contains("outcome_policy")) {
        s.outcome_policy = parse_outcome_policy(j["outcome_policy"].get<std::string>());
    }
    if (j.contains("channels")) {
        s.channels.clear();
        for (const auto &c : j["channels"]) {
            s.channels.push_back(parse_channel(c));
        }
    }
    if (j.contains("target")) {
        s.target = parse_target(j["target"], s.n);
    }
    if (j.contains("note")) {
        s.note = j["note"].get<std::string>();
    }
    if (s.family == Family::kCustom) {
        if (s.channels.empty()) {
            throw ConfigError("custom scenario needs a channels list");
        }
        if (!s.target) {
            throw ConfigError("custom scenario needs a target state");
        }
    }
    return s;
}

json scenario_to_json(const ScenarioSpec &spec) {
    json j{{"name", spec.name},
           {"family", std::string(family_name(spec.family))},
           {"n", spec.n},
           {"noise", spec.noise},
           {"outcome_policy", std::string(outcome_policy_name(spec.outcome_policy))}};
    json cfg = json::array();
    for (const auto &v : spec.config.amplitudes) {
        cfg.push_back(vector_to_json(v));
    }
    j["config"] = std::move(cfg);
    if (!spec.channels.empty()) {
        json ch = json::array();
        for (const auto &c : spec.channels) {
            ch.push_back(channel_to_json(c));
        }
        j["channels"] = std::move(ch);
    }
    if (spec.target) {
        j["target"] = vector_to_json(spec.target->vector);
    }
    if (!spec.note.empty()) {
        j["note"] = spec.note;
    }
    return j;
}

RunConfig parse_config(const json &doc) {
    try {
        return parse_config_impl(doc);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::kUnknownScenario) {
            throw;
        }
        throw ConfigError(e.what());
    }
}

RunConfig parse_config_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(doc);
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

json to_json(const RunConfig &c) {
    json j;
    if (c.scenario) {
        j["scenario"] = scenario_to_json(*c.scenario);
    }
    json sweep = range_to_json(c.grid.sweep);
    sweep["lock_q_to_p"] = c.grid.lock_q_to_p;
    j["sweep"] = std::move(sweep);
    j["grid"] = json{{"p", range_to_json(c.grid.grid_p)}, {"q", range_to_json(c.grid.grid_q)}};
    j["p"] = c.p;
    j["q"] = c.q;
    j["seed"] = c.seed;
    j["restarts"] = c.restarts;
    j["iterations"] = c.iterations;
    j["emit_oracle"] = c.emit_oracle;
    j["out"] = c.out;
    j["walk"] = json{{"positions", c.walk.positions},
                     {"coin", matrix_to_json(c.walk.coin)},
                     {"steps", c.walk.steps},
                     {"start", c.walk.start},
                     {"coin_state", vector_to_json(c.walk.coin_state)}};
    return j;
}

WalkSpec walk_spec(const WalkSettings &walk) {
    WalkSpec spec;
    spec.positions = walk.positions;
    spec.coin = walk.coin;
    spec.steps = walk.steps;
    spec.initial = localized_state(walk.positions, walk.start, walk.coin_state);
    return spec;
}

}  // namespace vacsup::cli
