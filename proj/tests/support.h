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

#ifndef VACSUP_TESTS_SUPPORT_H
#define VACSUP_TESTS_SUPPORT_H

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "vacsup/channels.h"
#include "vacsup/matrix.h"
#include "vacsup/numerics.h"

namespace vacsup::testing {

inline std::mt19937_64 &rng() {
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline std::vector<complex> random_unit_vector(std::size_t n, bool complex_entries) {
    std::normal_distribution<double> g;
    std::vector<complex> v(n);
    double s = 0;
    for (auto &x : v) {
        x = complex_entries ? complex(g(rng()), g(rng())) : complex(g(rng()), 0.0);
        s += std::norm(x);
    }
    for (auto &x : v) {
        x /= std::sqrt(s);
    }
    return v;
}

/// Zeroes the slots not listed in `keep` and renormalizes.
inline std::vector<complex> restrict_slots(std::vector<complex> v, std::initializer_list<std::size_t> keep) {
    std::vector<complex> out(v.size(), 0.0);
    double s = 0;
    for (std::size_t k : keep) {
        out[k] = v[k];
        s += std::norm(v[k]);
    }
    for (auto &x : out) {
        x /= std::sqrt(s);
    }
    return out;
}

inline Matrix random_density(std::size_t dim, std::size_t rank) {
    Matrix rho(dim, dim);
    for (std::size_t r = 0; r < rank; ++r) {
        const auto v = random_unit_vector(dim, true);
        rho.add_scaled(Matrix::projector(v), uniform(0.1, 1.0));
    }
    rho *= 1.0 / rho.trace().real();
    return rho;
}

/// Haar-ish unitary from Gram-Schmidt on a complex Gaussian matrix.
inline Matrix random_unitary(std::size_t n) {
    std::vector<std::vector<complex>> cols;
    for (std::size_t c = 0; c < n; ++c) {
        auto v = random_unit_vector(n, true);
        for (const auto &u : cols) {
            const complex overlap = inner(u, v);
            for (std::size_t k = 0; k < n; ++k) {
                v[k] -= overlap * u[k];
            }
        }
        const double nv = norm(v);
        for (auto &x : v) {
            x /= nv;
        }
        cols.push_back(v);
    }
    Matrix u(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            u(r, c) = cols[c][r];
        }
    }
    return u;
}

inline Eigen::MatrixXcd to_eigen(const Matrix &m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            e(r, c) = m(r, c);
        }
    }
    return e;
}

/// Concurrence from the spectrum of the non-Hermitian product rho * rho~,
/// computed with a general complex eigensolver. The eigenvalues are real and
/// non-negative in exact arithmetic; imaginary parts and values below 1e-13
/// of the largest are rounding residue and are dropped.
inline double brute_force_concurrence(const Matrix &rho) {
    Eigen::Matrix4cd yy;
    yy.setZero();
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;
    const Eigen::MatrixXcd r = to_eigen(rho);
    const Eigen::MatrixXcd tilde = yy * r.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(r * tilde);
    double scale = 1.0;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        scale = std::max(scale, std::abs(solver.eigenvalues()(k)));
    }
    std::vector<double> lambda;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const double v = solver.eigenvalues()(k).real();
        lambda.push_back(v > 1e-13 * scale ? std::sqrt(v) : 0.0);
    }
    std::sort(lambda.rbegin(), lambda.rend());
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

/// Smallest eigenvalue of a Hermitian matrix, via Eigen.
inline double eigen_min_eigenvalue(const Matrix &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
    return solver.eigenvalues().minCoeff();
}

struct TwoBranchOutput {
    Matrix unnormalized;  // projected target state, trace = probability
};

/// Two channels in superposition with the control in |+>, projected on
/// |+> (sign = +1) or |-> (sign = -1), written out term by term:
///   1/4 sum_ij (b_j F_i + s a_i N_j) rho (b_j F_i + s a_i N_j)^dag.
inline Matrix literal_two_branch(const VacuumExtendedChannel &f, const VacuumExtendedChannel &n, const Matrix &rho,
                                 int sign) {
    Matrix out(rho.rows(), rho.cols());
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < n.size(); ++j) {
            Matrix k = f.kraus[i] * n.vacuum_amplitudes[j];
            k.add_scaled(n.kraus[j], static_cast<double>(sign) * f.vacuum_amplitudes[i]);
            out += sandwich(k, rho);
        }
    }
    out *= 0.25;
    return out;
}

}  // namespace vacsup::testing

#endif
