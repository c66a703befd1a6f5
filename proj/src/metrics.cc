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

#include "vacsup/metrics.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vacsup/channels.h"
#include "vacsup/error.h"

namespace vacsup {

namespace {

void require_qubits(const DensityMatrix &rho, std::size_t min_qubits, const char *what) {
    for (std::size_t d : rho.dims()) {
        if (d != 2) {
            throw Error(ErrorKind::kDimMismatch, std::string(what) + " needs qubit subsystems");
        }
    }
    if (rho.subsystem_count() < min_qubits) {
        throw Error(ErrorKind::kDimMismatch, std::string(what) + " needs at least " +
                                                 std::to_string(min_qubits) + " qubits");
    }
}

}  // namespace

TargetState TargetState::bell_phi_plus() {
    auto t = ghz(2, +1);
    t.kind = TargetKind::kBellPhiPlus;
    return t;
}

TargetState TargetState::bell_phi_minus() {
    auto t = ghz(2, -1);
    t.kind = TargetKind::kBellPhiMinus;
    return t;
}

TargetState TargetState::ghz(std::size_t n, int sign) {
    if (n == 0 || n > 12) {
        throw Error(ErrorKind::kInvalidArgument, "GHZ target needs 1..12 qubits");
    }
    TargetState t;
    t.kind = sign >= 0 ? TargetKind::kGhzPlus : TargetKind::kGhzMinus;
    t.qubits = n;
    t.vector.assign(std::size_t{1} << n, 0.0);
    t.vector.front() = 1.0 / std::numbers::sqrt2;
    t.vector.back() = (sign >= 0 ? 1.0 : -1.0) / std::numbers::sqrt2;
    return t;
}

TargetState TargetState::w(std::size_t n, std::size_t k) {
    if (n < 2 || n > 12) {
        throw Error(ErrorKind::kInvalidArgument, "W target needs 2..12 qubits");
    }
    TargetState t;
    t.kind = TargetKind::kW;
    t.qubits = n;
    t.vector.assign(std::size_t{1} << n, 0.0);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t l = 0; l < n; ++l) {
        // Qubit l is the l-th factor from the left, i.e. bit (n - 1 - l).
        const std::size_t index = std::size_t{1} << (n - 1 - l);
        const double angle = -2.0 * std::numbers::pi * static_cast<double>((k * l) % n) / static_cast<double>(n);
        t.vector[index] = scale * std::polar(1.0, angle);
    }
    return t;
}

TargetState TargetState::custom(std::vector<complex> psi) {
    if (std::abs(norm(psi) - 1.0) > 1e-10) {
        throw Error(ErrorKind::kBadNormalization, "target state is not unit norm");
    }
    TargetState t;
    t.kind = TargetKind::kCustom;
    t.vector = std::move(psi);
    std::size_t q = 0;
    while ((std::size_t{1} << q) < t.vector.size()) {
        ++q;
    }
    t.qubits = (std::size_t{1} << q) == t.vector.size() ? q : 0;
    return t;
}

std::string TargetState::name() const {
    switch (kind) {
        case TargetKind::kBellPhiPlus:
            return "Phi+";
        case TargetKind::kBellPhiMinus:
            return "Phi-";
        case TargetKind::kGhzPlus:
            return "GHZ+(" + std::to_string(qubits) + ")";
        case TargetKind::kGhzMinus:
            return "GHZ-(" + std::to_string(qubits) + ")";
        case TargetKind::kW:
            return "W(" + std::to_string(qubits) + ")";
        case TargetKind::kCustom:
            return "custom";
    }
    return "custom";
}

double VacuumConfig::normalization_defect() const {
    double worst = 0;
    for (const auto &v : amplitudes) {
        double s = 0;
        for (const auto &a : v) {
            s += std::norm(a);
        }
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

double fidelity_pure(const DensityMatrix &rho, const TargetState &target) {
    if (rho.dim() != target.vector.size()) {
        throw Error(ErrorKind::kDimMismatch, "state and target dimensions differ");
    }
    return std::sqrt(std::max(expectation(rho.matrix(), target.vector).real(), 0.0));
}

namespace {

// Eigenvalues this far below the largest one are rounding residue of exact
// zeros; taking their square root would inject ~1e-8 noise.
constexpr double kSpectralFloor = 1e-13;

std::vector<double> floored_roots(const Matrix &hermitian) {
    const auto eig = eig_hermitian(hermitian);
    const double scale = std::max(1.0, eig.values.empty() ? 0.0 : std::abs(eig.values.front()));
    std::vector<double> roots;
    for (double v : eig.values) {
        roots.push_back(v > kSpectralFloor * scale ? std::sqrt(v) : 0.0);
    }
    return roots;
}

}  // namespace

double fidelity_uhlmann(const Matrix &rho, const Matrix &sigma) {
    if (rho.rows() != sigma.rows() || !rho.is_square() || !sigma.is_square()) {
        throw Error(ErrorKind::kDimMismatch, "fidelity of differently sized states");
    }
    const Matrix root = sqrt_psd(rho);
    Matrix inner_product = root * sigma * root;
    inner_product = 0.5 * (inner_product + inner_product.adjoint());
    double total = 0;
    for (double r : floored_roots(inner_product)) {
        total += r;
    }
    return total;
}

PhaseFidelity fidelity_up_to_phase(const DensityMatrix &rho, std::size_t n) {
    if (n == 0 || rho.dim() != (std::size_t{1} << n)) {
        throw Error(ErrorKind::kDimMismatch, "state is not an n-qubit state");
    }
    const Matrix &m = rho.matrix();
    const std::size_t last = rho.dim() - 1;
    const double diag = 0.5 * (m(0, 0).real() + m(last, last).real());
    const complex coherence = m(0, last);
    // <psi_phi|rho|psi_phi> = diag + Re(e^{i phi} rho_{0,last}); maximal at phi = -arg.
    double phase = coherence == complex(0) ? 0.0 : -std::arg(coherence);
    phase = std::fmod(phase, 2.0 * std::numbers::pi);
    if (phase < 0) {
        phase += 2.0 * std::numbers::pi;
    }
    if (phase >= 2.0 * std::numbers::pi - 1e-15) {
        phase = 0;
    }
    return {std::sqrt(std::max(diag + std::abs(coherence), 0.0)), phase};
}

double concurrence(const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw Error(ErrorKind::kDimMismatch, "concurrence needs a two-qubit state");
    }
    static const Matrix yy = pauli_string("YY");
    const Matrix &m = rho.matrix();
    const Matrix flipped = yy * m.conj() * yy;
    const Matrix root = sqrt_psd(m);
    Matrix r = root * flipped * root;
    r = 0.5 * (r + r.adjoint());
    const auto lambda = floored_roots(r);
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double avg_pairwise_concurrence(const DensityMatrix &rho) {
    require_qubits(rho, 2, "pairwise concurrence");
    const std::size_t n = rho.subsystem_count();
    double total = 0;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::array<std::size_t, 2> keep = {a, b};
            total += concurrence(partial_trace(rho, keep));
            ++pairs;
        }
    }
    return total / static_cast<double>(pairs);
}

double avg_one_vs_rest_concurrence(const DensityMatrix &rho) {
    require_qubits(rho, 2, "one-vs-rest concurrence");
    const std::size_t n = rho.subsystem_count();
    double total = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::array<std::size_t, 1> keep = {k};
        const Matrix reduced = partial_trace(rho, keep).matrix();
        const double purity = (reduced * reduced).trace().real();
        total += std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
    }
    return total / static_cast<double>(n);
}

namespace {

// Real part of conj(a) b: the symmetrized product used for complex amplitudes.
double sym(complex a, complex b) { return (std::conj(a) * b).real(); }

void check_probability(double p) {
    if (!(p >= -1e-12 && p <= 1.0 + 1e-12)) {
        throw Error(ErrorKind::kBadProbability, "noise probability outside [0, 1]");
    }
}

void check_config(const VacuumConfig &cfg, std::size_t channels, std::size_t length) {
    if (cfg.amplitudes.size() != channels) {
        throw Error(ErrorKind::kDimMismatch, "closed form expects " + std::to_string(channels) + " amplitude vectors");
    }
    for (const auto &v : cfg.amplitudes) {
        if (v.size() != length) {
            throw Error(ErrorKind::kDimMismatch, "closed form expects amplitude vectors of length " +
                                                     std::to_string(length));
        }
    }
}

double checked_ratio(double numerator, double denominator) {
    if (denominator <= 1e-14) {
        throw Error(ErrorKind::kDivisionByZero, "closed-form denominator vanishes");
    }
    return std::sqrt(std::max(numerator / denominator, 0.0));
}

}  // namespace

double fid_closed_depolarizing(double p, double q, const VacuumConfig &cfg) {
    check_probability(p);
    check_probability(q);
    check_config(cfg, 2, 4);
    p = std::clamp(p, 0.0, 1.0);
    q = std::clamp(q, 0.0, 1.0);
    const auto &a = cfg.amplitudes[0];
    const auto &b = cfg.amplitudes[1];
    const double s00 = std::sqrt((1 - p) * (1 - q));
    const double s_p = std::sqrt(3 * p * (1 - q));
    const double s_q = std::sqrt(3 * q * (1 - p));
    const double s_pq = std::sqrt(p * q);

    // (a1 - a2 + a3) style combinations expand into products with b.
    auto alt = [](const std::vector<complex> &v) { return v[1] - v[2] + v[3]; };
    auto diff = [](const std::vector<complex> &v) { return v[1] - v[2]; };

    const double c = 3 + 3 * s00 * sym(a[0], b[0]) + s_p * sym(alt(a), b[0]) + s_q * sym(a[0], alt(b)) +
                     s_pq * sym(alt(a), alt(b));
    const double d = 2 * (3 + 3 * s00 * sym(a[0], b[0]) + s_pq * sym(a[3], b[3]) + s_p * sym(a[3], b[0]) +
                          s_q * sym(a[0], b[3]) + s_pq * sym(diff(a), diff(b)));
    return checked_ratio(c, d);
}

double fid_closed_bitphase(double p, double q, const VacuumConfig &cfg) {
    check_probability(p);
    check_probability(q);
    check_config(cfg, 2, 4);
    p = std::clamp(p, 0.0, 1.0);
    q = std::clamp(q, 0.0, 1.0);
    const auto &a = cfg.amplitudes[0];
    const auto &b = cfg.amplitudes[1];
    const double base =
        1 + std::sqrt(q * (1 - p)) * sym(a[0], b[3]) + std::sqrt((1 - p) * (1 - q)) * sym(a[0], b[0]);
    const double numerator = base + std::sqrt(p * (1 - q)) * sym(a[1], b[0]) + std::sqrt(p * q) * sym(a[1], b[3]);
    return checked_ratio(numerator, 2 * base);
}

double fid_closed_w3(std::span<const double> p, const VacuumConfig &cfg) {
    if (p.size() != 3) {
        throw Error(ErrorKind::kDimMismatch, "three-branch closed form needs three probabilities");
    }
    check_config(cfg, 3, 2);
    std::array<double, 3> pr{};
    for (std::size_t k = 0; k < 3; ++k) {
        check_probability(p[k]);
        pr[k] = std::clamp(p[k], 0.0, 1.0);
    }
    const auto &al = cfg.amplitudes;
    double numerator = pr[0] + pr[1] + pr[2];
    double denominator = 9;
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = j + 1; k < 3; ++k) {
            numerator += 2 * sym(al[j][1], al[k][1]) * std::sqrt(pr[j] * pr[k]);
            denominator += 6 * sym(al[j][0], al[k][0]) * std::sqrt((1 - pr[j]) * (1 - pr[k]));
        }
    }
    return checked_ratio(numerator, denominator);
}

}  // namespace vacsup
