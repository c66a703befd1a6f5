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

#ifndef VACSUP_METRICS_H
#define VACSUP_METRICS_H

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vacsup/matrix.h"
#include "vacsup/numerics.h"

namespace vacsup {

enum class TargetKind { kBellPhiPlus, kBellPhiMinus, kGhzPlus, kGhzMinus, kW, kCustom };

/// Pure reference state for fidelity.
struct TargetState {
    TargetKind kind = TargetKind::kCustom;
    std::size_t qubits = 0;
    std::vector<complex> vector;

    static TargetState bell_phi_plus();
    static TargetState bell_phi_minus();
    static TargetState ghz(std::size_t n, int sign = +1);
    /// n^{-1/2} sum_l w^{-k l} |0..1_l..0>, w = exp(2 pi i / n). k = 0 is the
    /// textbook W state; k > 0 are the states heralded by the other Fourier
    /// outcomes.
    static TargetState w(std::size_t n, std::size_t k = 0);
    static TargetState custom(std::vector<complex> psi);

    std::string name() const;
};

/// Vacuum amplitudes for every channel of a scenario, in channel order.
struct VacuumConfig {
    std::vector<std::vector<complex>> amplitudes;

    /// Max |sum |a|^2 - 1| across channels.
    double normalization_defect() const;
};

/// sqrt(<psi|rho|psi>).
double fidelity_pure(const DensityMatrix &rho, const TargetState &target);

/// Tr sqrt(sqrt(rho) sigma sqrt(rho)) for arbitrary states.
double fidelity_uhlmann(const Matrix &rho, const Matrix &sigma);

struct PhaseFidelity {
    double fidelity = 0;
    double phase = 0;  // in [0, 2 pi)
};

/// max over phi of the fidelity with (|0..0> + e^{i phi} |1..1>) / sqrt(2).
PhaseFidelity fidelity_up_to_phase(const DensityMatrix &rho, std::size_t n);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix &rho);

/// Mean Wootters concurrence over all two-qubit reductions.
double avg_pairwise_concurrence(const DensityMatrix &rho);

/// Mean over qubits k of sqrt(max(0, 2 (1 - Tr rho_k^2))). This is an
/// entanglement measure only when the global state is pure; for mixed
/// states it is a descriptive statistic.
double avg_one_vs_rest_concurrence(const DensityMatrix &rho);

// Closed-form |+>-outcome fidelities against Phi+ (or W for the three-branch
// memoryless case). Complex amplitude products a_i b_j enter as
// Re(conj(a_i) b_j).

/// Two correlated depolarizing channels; amplitudes are length-4 Pauli-slot
/// vectors.
double fid_closed_depolarizing(double p, double q, const VacuumConfig &cfg);

/// Bit flip (slots 0, 1) superposed with phase flip (slots 0, 3).
double fid_closed_bitphase(double p, double q, const VacuumConfig &cfg);

/// Three memoryless bit-flip channels, control measured on the uniform
/// Fourier vector.
double fid_closed_w3(std::span<const double> p, const VacuumConfig &cfg);

}  // namespace vacsup

#endif
