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

#include "vacsup/superposition.h"

#include <cmath>
#include <numbers>
#include <string>

#include "vacsup/error.h"

namespace vacsup {

ControlState::ControlState(std::vector<complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw Error(ErrorKind::kDimMismatch, "control state needs at least one branch");
    }
    if (std::abs(norm(amplitudes_) - 1.0) > 1e-12) {
        throw Error(ErrorKind::kBadNormalization, "control state is not unit norm");
    }
}

ControlState ControlState::plus() { return uniform(2); }

ControlState ControlState::uniform(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::kDimMismatch, "control state needs at least one branch");
    }
    return ControlState(std::vector<complex>(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

ControlBasis plus_minus_basis() {
    const double r = 1.0 / std::numbers::sqrt2;
    return {{r, r}, {r, -r}};
}

ControlBasis fourier_basis(std::size_t n) {
    ControlBasis basis(n, std::vector<complex>(n));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            // Reduce k*l mod n first so the phase stays exact for large products.
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * l) % n) / static_cast<double>(n);
            basis[k][l] = scale * std::polar(1.0, angle);
        }
    }
    return basis;
}

ControlBasis computational_basis(std::size_t n) {
    ControlBasis basis(n, std::vector<complex>(n));
    for (std::size_t k = 0; k < n; ++k) {
        basis[k][k] = 1.0;
    }
    return basis;
}

double orthonormality_defect(const ControlBasis &basis) {
    double worst = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const complex expected = j == k ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner(basis[j], basis[k]) - expected));
        }
    }
    return worst;
}

void SuperpositionScenario::check() const {
    const std::size_t n = channels.size();
    if (n < 2) {
        throw Error(ErrorKind::kDimMismatch, "superposition needs at least two channels");
    }
    if (control.dim() != n) {
        throw Error(ErrorKind::kDimMismatch, "control dimension differs from channel count");
    }
    if (measurement_basis.size() != n) {
        throw Error(ErrorKind::kDimMismatch, "measurement basis size differs from channel count");
    }
    for (const auto &b : measurement_basis) {
        if (b.size() != n) {
            throw Error(ErrorKind::kDimMismatch, "measurement basis vector has wrong length");
        }
    }
    if (orthonormality_defect(measurement_basis) > 1e-10) {
        throw Error(ErrorKind::kBadNormalization, "measurement basis is not orthonormal");
    }
    for (const auto &ch : channels) {
        if (ch.dim() != input.dim()) {
            throw Error(ErrorKind::kDimMismatch, "channel '" + ch.label + "' does not act on the input dimension");
        }
        if (ch.kraus.size() != ch.vacuum_amplitudes.size()) {
            throw Error(ErrorKind::kDimMismatch, "channel '" + ch.label + "' has mismatched amplitudes");
        }
    }
    if (input.dim() * n > kMaxJointDim) {
        throw Error(ErrorKind::kDimMismatch, "joint dimension exceeds " + std::to_string(kMaxJointDim));
    }
}

std::vector<Matrix> global_kraus(std::span<const VacuumExtendedChannel> channels) {
    const std::size_t n = channels.size();
    if (n < 2) {
        throw Error(ErrorKind::kDimMismatch, "superposition needs at least two channels");
    }
    const std::size_t d = channels.front().dim();
    for (const auto &ch : channels) {
        if (ch.dim() != d || ch.kraus.empty()) {
            throw Error(ErrorKind::kDimMismatch, "channels act on different target dimensions");
        }
        if (ch.kraus.size() != ch.vacuum_amplitudes.size()) {
            throw Error(ErrorKind::kDimMismatch, "channel '" + ch.label + "' has mismatched amplitudes");
        }
    }
    std::vector<Matrix> branch_projectors;
    for (std::size_t l = 0; l < n; ++l) {
        Matrix p(n, n);
        p(l, l) = 1.0;
        branch_projectors.push_back(std::move(p));
    }

    std::vector<Matrix> out;
    std::vector<std::size_t> index(n, 0);
    while (true) {
        Matrix s(d * n, d * n);
        for (std::size_t l = 0; l < n; ++l) {
            complex coef = 1.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != l) {
                    coef *= channels[k].vacuum_amplitudes[index[k]];
                }
            }
            if (coef == complex(0)) {
                continue;
            }
            s.add_scaled(kron(channels[l].kraus[index[l]], branch_projectors[l]), coef);
        }
        out.push_back(std::move(s));

        // Odometer increment with the last channel varying fastest.
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++index[k] < channels[k].kraus.size()) {
                break;
            }
            index[k] = 0;
            if (k == 0) {
                return out;
            }
        }
    }
}

DensityMatrix apply(const SuperpositionScenario &scenario) {
    scenario.check();
    const auto &c = scenario.control.amplitudes();
    const Matrix joint_in = kron(scenario.input.matrix(), Matrix::projector(c));
    Matrix joint_out(joint_in.rows(), joint_in.cols());
    for (const auto &s : global_kraus(scenario.channels)) {
        joint_out += sandwich(s, joint_in);
    }
    std::vector<std::size_t> dims = scenario.input.dims();
    dims.push_back(scenario.channels.size());
    return DensityMatrix(std::move(dims), std::move(joint_out));
}

std::vector<MeasurementOutcome> measure_control(const DensityMatrix &joint, const ControlBasis &basis) {
    if (joint.dims().empty()) {
        throw Error(ErrorKind::kDimMismatch, "joint state has no control subsystem");
    }
    const std::size_t n = joint.dims().back();
    const std::size_t d = joint.dim() / n;
    std::vector<std::size_t> target_dims(joint.dims().begin(), joint.dims().end() - 1);
    const Matrix &m = joint.matrix();

    std::vector<MeasurementOutcome> outcomes;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto &b = basis[k];
        if (b.size() != n) {
            throw Error(ErrorKind::kDimMismatch, "measurement vector length differs from control dimension");
        }
        Matrix projected(d, d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                complex acc = 0;
                for (std::size_t l = 0; l < n; ++l) {
                    for (std::size_t q = 0; q < n; ++q) {
                        acc += std::conj(b[l]) * m(r * n + l, c * n + q) * b[q];
                    }
                }
                projected(r, c) = acc;
            }
        }
        MeasurementOutcome outcome;
        outcome.outcome_index = k;
        outcome.probability = std::max(projected.trace().real(), 0.0);
        if (outcome.probability > kZeroProbability) {
            projected *= 1.0 / outcome.probability;
            // Restore exact hermiticity lost to rounding.
            outcome.post_state = DensityMatrix(target_dims, 0.5 * (projected + projected.adjoint()));
        } else {
            outcome.probability = 0;
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

std::vector<MeasurementOutcome> run(const SuperpositionScenario &scenario) {
    return measure_control(apply(scenario), scenario.measurement_basis);
}

}  // namespace vacsup
