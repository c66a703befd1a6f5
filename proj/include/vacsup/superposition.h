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

#ifndef VACSUP_SUPERPOSITION_H
#define VACSUP_SUPERPOSITION_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vacsup/channels.h"
#include "vacsup/matrix.h"
#include "vacsup/numerics.h"

namespace vacsup {

inline constexpr std::size_t kMaxJointDim = 4096;

/// Pure state of the control system; one amplitude per branch.
class ControlState {
   public:
    explicit ControlState(std::vector<complex> amplitudes);

    /// (|0> + |1>) / sqrt(2)
    static ControlState plus();
    /// Uniform superposition over `n` branches (the zeroth Fourier vector).
    static ControlState uniform(std::size_t n);

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    const std::vector<complex> &amplitudes() const noexcept { return amplitudes_; }

   private:
    std::vector<complex> amplitudes_;
};

using ControlBasis = std::vector<std::vector<complex>>;

/// {|+>, |->}
ControlBasis plus_minus_basis();
/// |k~> = n^{-1/2} sum_l w^{kl} |l>, w = exp(2 pi i / n).
ControlBasis fourier_basis(std::size_t n);
ControlBasis computational_basis(std::size_t n);

/// Max |<b_j|b_k> - delta_jk|.
double orthonormality_defect(const ControlBasis &basis);

struct SuperpositionScenario {
    std::vector<VacuumExtendedChannel> channels;
    DensityMatrix input;
    ControlState control = ControlState::plus();
    ControlBasis measurement_basis;

    /// Throws kDimMismatch / kBadNormalization on inconsistent fields.
    void check() const;
};

struct MeasurementOutcome {
    std::size_t outcome_index = 0;
    double probability = 0;
    /// Normalized target state; empty when the outcome has zero probability.
    std::optional<DensityMatrix> post_state;
};

inline constexpr double kZeroProbability = 1e-12;

/// Global Kraus operators on target (x) control, one per multi-index
/// (i_0, ..., i_{N-1}) in lexicographic order:
///   S = sum_l [prod_{k != l} alpha^(k)_{i_k}] E^(l)_{i_l} (x) |l><l|.
std::vector<Matrix> global_kraus(std::span<const VacuumExtendedChannel> channels);

/// sum_S S (rho_t (x) |c><c|) S^dag; the control is the last subsystem.
DensityMatrix apply(const SuperpositionScenario &scenario);

std::vector<MeasurementOutcome> measure_control(const DensityMatrix &joint, const ControlBasis &basis);

std::vector<MeasurementOutcome> run(const SuperpositionScenario &scenario);

}  // namespace vacsup

#endif
