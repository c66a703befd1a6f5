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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.h"
#include "vacsup/channels.h"
#include "vacsup/error.h"
#include "vacsup/metrics.h"
#include "vacsup/scenarios.h"

using namespace vacsup;
using namespace vacsup::testing;

namespace {

DensityMatrix pure(std::size_t n, const std::vector<complex> &psi) {
    return DensityMatrix::from_pure(std::vector<std::size_t>(n, 2), psi);
}

DensityMatrix werner(double w) {
    const Matrix phi = Matrix::projector(TargetState::bell_phi_plus().vector);
    return DensityMatrix({2, 2}, phi * complex(w) + Matrix::identity(4) * complex((1 - w) / 4));
}

}  // namespace

TEST_CASE("fidelity of Bell states with themselves and each other") {
    const auto plus = TargetState::bell_phi_plus();
    const auto minus = TargetState::bell_phi_minus();
    CHECK(fidelity_pure(pure(2, plus.vector), plus) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(fidelity_pure(pure(2, minus.vector), plus) < 1e-15);
    // |00> against Phi+ is the separable baseline 1/sqrt2.
    CHECK(fidelity_pure(DensityMatrix::zero_qubits(2), plus) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("Uhlmann fidelity reduces to the pure-state formula and is symmetric") {
    for (int t = 0; t < 10; ++t) {
        const Matrix rho = random_density(4, 1 + t % 4);
        const auto psi = random_unit_vector(4, true);
        const double direct = fidelity_pure(DensityMatrix({2, 2}, rho), TargetState::custom(psi));
        CHECK(std::abs(fidelity_uhlmann(rho, Matrix::projector(psi)) - direct) < 1e-12);
        const Matrix sigma = random_density(4, 3);
        const double f = fidelity_uhlmann(rho, sigma);
        CHECK(std::abs(f - fidelity_uhlmann(sigma, rho)) < 1e-9);
        CHECK(f <= 1.0 + 1e-12);
    }
    const Matrix rho = random_density(4, 4);
    CHECK(fidelity_uhlmann(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("GHZ fidelity up to phase recovers the relative phase") {
    for (double phi : {0.0, 0.3, 2.0, 4.5}) {
        std::vector<complex> psi(8, 0.0);
        psi[0] = 1.0 / std::sqrt(2.0);
        psi[7] = std::polar(1.0 / std::sqrt(2.0), phi);
        const auto r = fidelity_up_to_phase(pure(3, psi), 3);
        CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(r.phase == doctest::Approx(phi).epsilon(1e-12));
    }
    CHECK(fidelity_up_to_phase(DensityMatrix::zero_qubits(3), 3).fidelity ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("W targets are normalized and the k = 0 state has equal real amplitudes") {
    const auto w = TargetState::w(3);
    CHECK(norm(w.vector) == doctest::Approx(1.0).epsilon(1e-15));
    for (std::size_t idx : {1u, 2u, 4u}) {
        CHECK(std::abs(w.vector[idx] - 1.0 / std::sqrt(3.0)) < 1e-15);
    }
    CHECK(std::abs(inner(TargetState::w(3, 1).vector, w.vector)) < 1e-15);
}

TEST_CASE("concurrence of reference states") {
    CHECK(concurrence(pure(2, TargetState::bell_phi_plus().vector)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(DensityMatrix::zero_qubits(2)) < 1e-12);
    for (double w : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
        const double expected = std::max(0.0, (3 * w - 1) / 2);
        CHECK(std::abs(concurrence(werner(w)) - expected) < 1e-12);
    }
}

TEST_CASE("concurrence agrees with the brute-force rho rho~ spectrum on random mixed states") {
    for (int t = 0; t < 50; ++t) {
        const Matrix rho = random_density(4, 2 + t % 3);
        CHECK(std::abs(concurrence(DensityMatrix({2, 2}, rho)) - brute_force_concurrence(rho)) < 1e-9);
    }
}

TEST_CASE("concurrence is invariant under local unitaries") {
    for (int t = 0; t < 20; ++t) {
        const Matrix rho = random_density(4, 2);
        const Matrix u = kron(random_unitary(2), random_unitary(2));
        const double before = concurrence(DensityMatrix({2, 2}, rho));
        const double after = concurrence(DensityMatrix({2, 2}, sandwich(u, rho)));
        CHECK(std::abs(before - after) < 1e-9);
    }
}

TEST_CASE("aggregate concurrences on GHZ and W states") {
    const auto ghz = pure(3, TargetState::ghz(3).vector);
    const auto w = pure(3, TargetState::w(3).vector);
    CHECK(avg_pairwise_concurrence(ghz) < 1e-12);
    CHECK(avg_one_vs_rest_concurrence(ghz) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(avg_pairwise_concurrence(w) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(avg_one_vs_rest_concurrence(w) == doctest::Approx(std::sqrt(8.0) / 3.0).epsilon(1e-14));
}

// Random amplitude vectors, real and complex, against direct simulation.
TEST_CASE("closed-form fidelities match simulation for random configurations") {
    const std::size_t per_family = 200;
    double worst[3] = {0, 0, 0};
    for (std::size_t t = 0; t < per_family; ++t) {
        const bool cplx = t % 2 == 1;
        const double p = uniform(), q = uniform();
        {
            ScenarioSpec s = builtin("bell_depolarizing");
            s.noise = {p, q};
            s.config = VacuumConfig{{random_unit_vector(4, cplx), random_unit_vector(4, cplx)}};
            const auto rec = evaluate_point(s, p, q);
            if (!rec.empty() && rec[0].oracle_fidelity) {
                worst[0] = std::max(worst[0], std::abs(rec[0].fidelity - *rec[0].oracle_fidelity));
            }
        }
        {
            ScenarioSpec s = builtin("bell_bitphase");
            s.config = VacuumConfig{{restrict_slots(random_unit_vector(4, cplx), {0, 1}),
                                     restrict_slots(random_unit_vector(4, cplx), {0, 3})}};
            const auto rec = evaluate_point(s, p, q);
            if (!rec.empty() && rec[0].oracle_fidelity) {
                worst[1] = std::max(worst[1], std::abs(rec[0].fidelity - *rec[0].oracle_fidelity));
            }
        }
        {
            ScenarioSpec s = builtin("w_memoryless");
            s.config = VacuumConfig{
                {random_unit_vector(2, cplx), random_unit_vector(2, cplx), random_unit_vector(2, cplx)}};
            s.noise = {uniform(), uniform(), uniform()};
            const auto outcomes = run(build_scenario(s));
            const auto oracle = oracle_fidelity(s, 0);
            if (outcomes[0].post_state && oracle) {
                worst[2] = std::max(worst[2], std::abs(outcome_fidelity(s, 0, *outcomes[0].post_state) - *oracle));
            }
        }
    }
    CHECK(worst[0] < 1e-8);
    CHECK(worst[1] < 1e-8);
    CHECK(worst[2] < 1e-8);
}

TEST_CASE("closed forms at published points") {
    const double s3 = 1 / std::sqrt(3.0), s2 = 1 / std::sqrt(2.0), s6 = 1 / std::sqrt(6.0);
    const VacuumConfig eq10{{{0, s3, -s3, -s3}, {0, -s3, s3, s3}}};
    const VacuumConfig eq11{{{-s2, s6, -s6, -s6}, {s2, -s6, s6, s6}}};
    CHECK(fid_closed_depolarizing(1, 1, eq10) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fid_closed_depolarizing(0.5, 0.5, eq11) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(fid_closed_depolarizing(0.530611, 0.530611, eq10) - 0.816824) < 1e-6);
    const VacuumConfig eq13{{{-s2, s2, 0, 0}, {s2, 0, 0, s2}}};
    CHECK(fid_closed_bitphase(0.5, 0.5, eq13) == doctest::Approx(1.0).epsilon(1e-14));
    const VacuumConfig w_full{{{0, 1}, {0, 1}, {0, 1}}};
    const double ones[] = {1, 1, 1};
    CHECK(fid_closed_w3(ones, w_full) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("metric inputs are shape-checked") {
    CHECK_THROWS_AS(concurrence(DensityMatrix::zero_qubits(3)), Error);
    CHECK_THROWS_AS(fidelity_pure(DensityMatrix::zero_qubits(3), TargetState::bell_phi_plus()), Error);
    CHECK_THROWS_AS(fid_closed_w3(std::vector<double>{1, 1}, VacuumConfig{}), Error);
    CHECK_THROWS_AS(fid_closed_bitphase(1.5, 0.5, VacuumConfig{{{1, 0, 0, 0}, {1, 0, 0, 0}}}), Error);
}
