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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vacsup/dtqw.h"
#include "vacsup/error.h"
#include "vacsup/metrics.h"
#include "vacsup/optimize.h"
#include "vacsup/scenarios.h"

namespace py = pybind11;
using namespace vacsup;

namespace {

using ComplexArray = py::array_t<complex, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const ComplexArray &a) {
    if (a.ndim() != 2) {
        throw Error(ErrorKind::kDimMismatch, "expected a 2-D array");
    }
    const auto rows = static_cast<std::size_t>(a.shape(0));
    const auto cols = static_cast<std::size_t>(a.shape(1));
    return Matrix(rows, cols, std::vector<complex>(a.data(), a.data() + rows * cols));
}

ComplexArray to_array(const Matrix &m) {
    ComplexArray out({m.rows(), m.cols()});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

std::vector<complex> to_vector(const ComplexArray &a) {
    if (a.ndim() != 1) {
        throw Error(ErrorKind::kDimMismatch, "expected a 1-D array");
    }
    return std::vector<complex>(a.data(), a.data() + a.shape(0));
}

DensityMatrix qubit_state(const ComplexArray &rho) {
    Matrix m = to_matrix(rho);
    std::size_t n = 0;
    while ((std::size_t{1} << n) < m.rows()) {
        ++n;
    }
    return DensityMatrix(std::vector<std::size_t>(n, 2), std::move(m));
}

py::dict record_to_dict(const SweepRecord &r) {
    py::dict d;
    d["p"] = r.p;
    d["q"] = r.q;
    d["outcome"] = r.outcome;
    d["probability"] = r.probability;
    d["fidelity"] = r.fidelity;
    d["oracle_fidelity"] = r.oracle_fidelity ? py::cast(*r.oracle_fidelity) : py::none();
    d["conc_pairwise"] = r.conc_pairwise;
    d["conc_one_vs_rest"] = r.conc_one_vs_rest;
    return d;
}

py::list records_to_list(const std::vector<SweepRecord> &records) {
    py::list out;
    for (const auto &r : records) {
        out.append(record_to_dict(r));
    }
    return out;
}

ScenarioSpec resolve(const py::object &spec) {
    if (py::isinstance<py::str>(spec)) {
        return builtin(spec.cast<std::string>());
    }
    return spec.cast<ScenarioSpec>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coherent superposition of vacuum-extended quantum channels";

    static py::exception<Error> error(m, "VacsupError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    py::enum_<Family>(m, "Family")
        .value("ideal_bell", Family::kIdealBell)
        .value("ideal_ghz", Family::kIdealGhz)
        .value("ideal_w", Family::kIdealW)
        .value("bell_depolarizing", Family::kBellDepolarizing)
        .value("bell_bitphase", Family::kBellBitphase)
        .value("ghz_depolarizing", Family::kGhzDepolarizing)
        .value("ghz_bitphase", Family::kGhzBitphase)
        .value("w_memoryless", Family::kWMemoryless)
        .value("custom", Family::kCustom);

    py::enum_<OutcomePolicy>(m, "OutcomePolicy")
        .value("plus_only", OutcomePolicy::kPlusOnly)
        .value("all_outcomes", OutcomePolicy::kAllOutcomes);

    py::class_<VacuumConfig>(m, "VacuumConfig")
        .def(py::init<>())
        .def(py::init([](std::vector<std::vector<complex>> a) { return VacuumConfig{std::move(a)}; }))
        .def_readwrite("amplitudes", &VacuumConfig::amplitudes)
        .def("normalization_defect", &VacuumConfig::normalization_defect);

    py::class_<ScenarioSpec>(m, "ScenarioSpec")
        .def_readwrite("name", &ScenarioSpec::name)
        .def_readwrite("family", &ScenarioSpec::family)
        .def_readwrite("n", &ScenarioSpec::n)
        .def_readwrite("noise", &ScenarioSpec::noise)
        .def_readwrite("config", &ScenarioSpec::config)
        .def_readwrite("outcome_policy", &ScenarioSpec::outcome_policy)
        .def_readwrite("note", &ScenarioSpec::note)
        .def("__repr__", [](const ScenarioSpec &s) {
            return "<ScenarioSpec " + s.name + " family=" + std::string(family_name(s.family)) +
                   " n=" + std::to_string(s.n) + ">";
        });

    m.def("builtin", &builtin, py::arg("name"));
    m.def("builtin_names", &builtin_names);
    m.def(
        "evaluate_point",
        [](const py::object &spec, double p, double q) { return records_to_list(evaluate_point(resolve(spec), p, q)); },
        py::arg("spec"), py::arg("p"), py::arg("q"));
    m.def(
        "sweep",
        [](const py::object &spec, std::vector<double> p, std::optional<std::vector<double>> q, unsigned threads) {
            SweepGrid grid{std::move(p), q.value_or(std::vector<double>{}), !q.has_value()};
            const ScenarioSpec s = resolve(spec);
            std::vector<SweepRecord> records;
            {
                py::gil_scoped_release release;
                records = sweep(s, grid, threads);
            }
            return records_to_list(records);
        },
        py::arg("spec"), py::arg("p"), py::arg("q") = py::none(), py::arg("threads") = 0,
        "Sweep over p (q locked to p) or over the p x q grid when q is given.");
    m.def("linspace", &linspace, py::arg("start"), py::arg("stop"), py::arg("points"));
    m.def("verify_propositions", [] {
        py::list out;
        for (const auto &c : verify_propositions()) {
            py::dict d;
            d["name"] = c.name;
            d["claim"] = c.claim;
            d["measured"] = c.measured;
            d["expected"] = c.expected;
            d["tolerance"] = c.tolerance;
            d["passed"] = c.passed;
            d["note"] = c.note;
            out.append(d);
        }
        return out;
    });
    m.def(
        "optimize_amplitudes",
        [](const py::object &spec, double p, double q, std::uint64_t seed, std::size_t restarts,
           std::size_t iterations, bool include_published) {
            OptimizerOptions opts;
            opts.restarts = restarts;
            opts.max_iterations = iterations;
            opts.include_published = include_published;
            const ScenarioSpec s = resolve(spec);
            OptimizationResult r;
            {
                py::gil_scoped_release release;
                r = optimize_amplitudes(s, p, q, seed, opts);
            }
            py::dict d;
            d["best_fidelity"] = r.best_fidelity;
            d["best_config"] = r.best_config.amplitudes;
            d["iterations"] = r.iterations;
            d["best_restart"] = r.best_restart;
            d["seed"] = r.seed;
            d["restarts"] = r.restarts;
            return d;
        },
        py::arg("spec"), py::arg("p"), py::arg("q"), py::arg("seed") = 7, py::arg("restarts") = 20,
        py::arg("iterations") = 500, py::arg("include_published") = true);

    m.def(
        "concurrence", [](const ComplexArray &rho) { return concurrence(qubit_state(rho)); }, py::arg("rho"));
    m.def(
        "fidelity_pure",
        [](const ComplexArray &rho, const ComplexArray &psi) {
            return fidelity_pure(qubit_state(rho), TargetState::custom(to_vector(psi)));
        },
        py::arg("rho"), py::arg("psi"));
    m.def(
        "fidelity_uhlmann",
        [](const ComplexArray &rho, const ComplexArray &sigma) {
            return fidelity_uhlmann(to_matrix(rho), to_matrix(sigma));
        },
        py::arg("rho"), py::arg("sigma"));
    m.def(
        "fid_closed_depolarizing",
        [](double p, double q, std::vector<std::vector<complex>> cfg) {
            return fid_closed_depolarizing(p, q, VacuumConfig{std::move(cfg)});
        },
        py::arg("p"), py::arg("q"), py::arg("config"));
    m.def(
        "fid_closed_bitphase",
        [](double p, double q, std::vector<std::vector<complex>> cfg) {
            return fid_closed_bitphase(p, q, VacuumConfig{std::move(cfg)});
        },
        py::arg("p"), py::arg("q"), py::arg("config"));

    m.def(
        "walk",
        [](std::size_t positions, const ComplexArray &coin, std::size_t steps, std::size_t start,
           const ComplexArray &coin_state) {
            WalkSpec spec{positions, to_matrix(coin), steps,
                          localized_state(positions, start, to_vector(coin_state))};
            const auto dist = evolve(spec);
            py::array_t<double> out({dist.size(), positions});
            auto view = out.mutable_unchecked<2>();
            for (std::size_t s = 0; s < dist.size(); ++s) {
                for (std::size_t x = 0; x < positions; ++x) {
                    view(s, x) = dist[s][x];
                }
            }
            return out;
        },
        py::arg("positions"), py::arg("coin"), py::arg("steps"), py::arg("start"), py::arg("coin_state"),
        "Position distributions after 0..steps steps, one row per step.");
    m.def(
        "step_operator",
        [](std::size_t positions, const ComplexArray &coin) {
            return to_array(step_operator(WalkSpec{positions, to_matrix(coin), 0, {}}));
        },
        py::arg("positions"), py::arg("coin"));
    m.def(
        "verify_embedding",
        [](const ComplexArray &u1, const ComplexArray &u2) { return verify_embedding(to_matrix(u1), to_matrix(u2)); },
        py::arg("u1"), py::arg("u2"));
}
