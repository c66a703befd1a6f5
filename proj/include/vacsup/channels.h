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

#ifndef VACSUP_CHANNELS_H
#define VACSUP_CHANNELS_H

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vacsup/matrix.h"

namespace vacsup {

/// Pauli indices used everywhere amplitudes are stored per Pauli slot:
/// 0 = I, 1 = X, 2 = Y, 3 = Z.
enum class Pauli : std::size_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

inline constexpr std::array<char, 4> kPauliLetters = {'I', 'X', 'Y', 'Z'};

const Matrix &pauli_matrix(Pauli p);

/// Kronecker product of single-qubit Paulis, left to right: "IXI" = I (x) X (x) I.
Matrix pauli_string(std::string_view letters);

/// P (x) P (x) ... (x) P on `n` qubits.
Matrix pauli_power(Pauli p, std::size_t n);

/// X acting on qubit `i` of `n`.
Matrix single_qubit_x(std::size_t i, std::size_t n);

/// A channel together with one vacuum amplitude per Kraus operator. Kraus
/// operators with zero weight are kept so amplitude vectors stay aligned
/// with the Pauli slots across a noise sweep.
struct VacuumExtendedChannel {
    std::vector<Matrix> kraus;
    std::vector<complex> vacuum_amplitudes;
    std::string label;

    std::size_t dim() const { return kraus.empty() ? 0 : kraus.front().rows(); }
    std::size_t size() const { return kraus.size(); }
};

struct ChannelReport {
    double cptp_defect = 0;       // max |sum K^dag K - I|
    double amplitude_defect = 0;  // |sum |alpha|^2 - 1|
    bool shape_ok = true;         // square, same dims, matching lengths
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

inline constexpr double kCptpTolerance = 1e-10;
inline constexpr double kAmplitudeTolerance = 1e-12;

/// Diagnostic only; never throws.
ChannelReport validate(const VacuumExtendedChannel &channel);

/// Correlated depolarizing noise on n qubits:
/// {sqrt(1-p) I, sqrt(p/3) X^n, sqrt(p/3) Y^n, sqrt(p/3) Z^n}.
VacuumExtendedChannel depolarizing_correlated(double p, std::size_t n, std::span<const complex> amps);

/// Kraus sqrt(w_k) P_k^n for the four Pauli slots.
VacuumExtendedChannel pauli_channel_correlated(std::span<const double> weights, std::size_t n,
                                               std::span<const complex> amps);

/// Weights (1-p, p, 0, 0). Slots 2 and 3 must carry zero amplitude.
VacuumExtendedChannel bit_flip_correlated(double p, std::size_t n, std::span<const complex> amps);

/// Weights (1-q, 0, 0, q). Slots 1 and 2 must carry zero amplitude.
VacuumExtendedChannel phase_flip_correlated(double q, std::size_t n, std::span<const complex> amps);

/// {sqrt(1-p) I, sqrt(p) X_i} with two vacuum amplitudes.
VacuumExtendedChannel memoryless_bitflip(std::size_t i, std::size_t n, double p, std::span<const complex> amps);

VacuumExtendedChannel unitary_channel(const Matrix &u, std::string label = "unitary");

/// Max elementwise |u^dag u - I|.
double unitarity_defect(const Matrix &u);

/// Applies the reduced (vacuum-free) channel: sum_k K rho K^dag.
Matrix apply_channel(const VacuumExtendedChannel &channel, const Matrix &rho);

}  // namespace vacsup

#endif
