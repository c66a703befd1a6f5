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

#include "vacsup/dtqw.h"

#include <cmath>

#include "vacsup/channels.h"
#include "vacsup/error.h"

namespace vacsup {

namespace {

constexpr double kEmbeddingTolerance = 1e-12;

Matrix coin_projector(std::size_t c) {
    Matrix m(2, 2);
    m(c, c) = 1.0;
    return m;
}

}  // namespace

std::vector<complex> localized_state(std::size_t positions, std::size_t position,
                                     const std::vector<complex> &coin_state) {
    if (position >= positions) {
        throw Error(ErrorKind::kBadIndex, "walker position out of range");
    }
    if (coin_state.size() != 2) {
        throw Error(ErrorKind::kDimMismatch, "coin state must have two amplitudes");
    }
    std::vector<complex> psi(2 * positions, 0.0);
    psi[2 * position] = coin_state[0];
    psi[2 * position + 1] = coin_state[1];
    return psi;
}

Matrix shift_operator(std::size_t positions) {
    if (positions == 0) {
        throw Error(ErrorKind::kInvalidArgument, "walk needs at least one site");
    }
    const std::size_t n = positions;
    Matrix t(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        t(2 * ((i + 1) % n), 2 * i) += 1.0;
        t(2 * ((i + n - 1) % n) + 1, 2 * i + 1) += 1.0;
    }
    return t;
}

Matrix step_operator(const WalkSpec &spec) {
    if (spec.coin.rows() != 2 || spec.coin.cols() != 2) {
        throw Error(ErrorKind::kDimMismatch, "coin must be 2x2");
    }
    if (unitarity_defect(spec.coin) > 1e-10) {
        throw Error(ErrorKind::kNotUnitary, "coin is not unitary to 1e-10");
    }
    return shift_operator(spec.positions) * kron(Matrix::identity(spec.positions), spec.coin);
}

std::vector<std::vector<double>> evolve(const WalkSpec &spec) {
    const Matrix u = step_operator(spec);
    if (spec.initial.size() != u.rows()) {
        throw Error(ErrorKind::kDimMismatch, "initial walk state has the wrong dimension");
    }
    if (std::abs(norm(spec.initial) - 1.0) > 1e-10) {
        throw Error(ErrorKind::kBadNormalization, "initial walk state is not normalized");
    }
    auto distribution = [&](const std::vector<complex> &psi) {
        std::vector<double> d(spec.positions, 0.0);
        for (std::size_t i = 0; i < spec.positions; ++i) {
            d[i] = std::norm(psi[2 * i]) + std::norm(psi[2 * i + 1]);
        }
        return d;
    };
    std::vector<std::vector<double>> out;
    out.reserve(spec.steps + 1);
    std::vector<complex> psi = spec.initial;
    out.push_back(distribution(psi));
    for (std::size_t s = 0; s < spec.steps; ++s) {
        psi = u.apply(psi);
        out.push_back(distribution(psi));
    }
    return out;
}

bool verify_embedding(const Matrix &u1, const Matrix &u2) {
    if (!u1.is_square() || !u2.is_square() || u1.rows() != u2.rows() || u1.rows() == 0) {
        throw Error(ErrorKind::kDimMismatch, "embedding needs two square unitaries of equal size");
    }
    const Matrix s = kron(u1, coin_projector(0)) + kron(u2, coin_projector(1));
    return s.max_abs_diff(shift_operator(u1.rows())) <= kEmbeddingTolerance;
}

}  // namespace vacsup
