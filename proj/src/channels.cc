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

#include "vacsup/channels.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vacsup/error.h"

namespace vacsup {

namespace {

constexpr double kProbabilitySlack = 1e-12;
constexpr double kInputNormTolerance = 1e-10;

double checked_probability(double p, const char *what) {
    if (!(p >= -kProbabilitySlack && p <= 1.0 + kProbabilitySlack)) {
        std::ostringstream msg;
        msg << what << " = " << p << " is outside [0, 1]";
        throw Error(ErrorKind::kBadProbability, msg.str());
    }
    return std::clamp(p, 0.0, 1.0);
}

void check_amplitudes(std::span<const complex> amps, std::size_t expected, const char *what) {
    if (amps.size() != expected) {
        throw Error(ErrorKind::kDimMismatch, std::string(what) + ": expected " + std::to_string(expected) +
                                                 " vacuum amplitudes, got " + std::to_string(amps.size()));
    }
    double s = 0;
    for (const auto &a : amps) {
        s += std::norm(a);
    }
    if (std::abs(s - 1.0) > kInputNormTolerance) {
        std::ostringstream msg;
        msg << what << ": sum of |amplitude|^2 is " << s;
        throw Error(ErrorKind::kBadNormalization, msg.str());
    }
}

void require_zero_slots(std::span<const complex> amps, std::initializer_list<std::size_t> slots, const char *what) {
    for (std::size_t s : slots) {
        if (std::abs(amps[s]) > kInputNormTolerance) {
            throw Error(ErrorKind::kInvalidArgument, std::string(what) + ": Pauli slot " + std::to_string(s) +
                                                         " has zero weight and must carry zero amplitude");
        }
    }
}

}  // namespace

const Matrix &pauli_matrix(Pauli p) {
    static const Matrix kI = Matrix::identity(2);
    static const Matrix kX{{0, 1}, {1, 0}};
    static const Matrix kY{{0, complex(0, -1)}, {complex(0, 1), 0}};
    static const Matrix kZ{{1, 0}, {0, -1}};
    switch (p) {
        case Pauli::kI:
            return kI;
        case Pauli::kX:
            return kX;
        case Pauli::kY:
            return kY;
        case Pauli::kZ:
            return kZ;
    }
    throw Error(ErrorKind::kBadIndex, "Pauli index out of range");
}

Matrix pauli_string(std::string_view letters) {
    Matrix out = Matrix::identity(1);
    for (char c : letters) {
        Pauli p;
        switch (c) {
            case 'I':
                p = Pauli::kI;
                break;
            case 'X':
                p = Pauli::kX;
                break;
            case 'Y':
                p = Pauli::kY;
                break;
            case 'Z':
                p = Pauli::kZ;
                break;
            default:
                throw Error(ErrorKind::kBadLetter, std::string("'") + c + "' is not one of I, X, Y, Z");
        }
        out = kron(out, pauli_matrix(p));
    }
    return out;
}

Matrix pauli_power(Pauli p, std::size_t n) {
    return pauli_string(std::string(n, kPauliLetters[static_cast<std::size_t>(p)]));
}

Matrix single_qubit_x(std::size_t i, std::size_t n) {
    if (i >= n) {
        throw Error(ErrorKind::kBadIndex, "qubit " + std::to_string(i) + " out of range for " + std::to_string(n));
    }
    std::string letters(n, 'I');
    letters[i] = 'X';
    return pauli_string(letters);
}

ChannelReport validate(const VacuumExtendedChannel &channel) {
    ChannelReport report;
    if (channel.kraus.empty()) {
        report.shape_ok = false;
        report.violations.push_back("channel has no Kraus operators");
        return report;
    }
    if (channel.kraus.size() != channel.vacuum_amplitudes.size()) {
        report.shape_ok = false;
        report.violations.push_back("Kraus count differs from vacuum amplitude count");
    }
    const std::size_t d = channel.kraus.front().rows();
    for (const auto &k : channel.kraus) {
        if (!k.is_square() || k.rows() != d) {
            report.shape_ok = false;
            report.violations.push_back("Kraus operators are not square of a common dimension");
            return report;
        }
    }
    Matrix sum(d, d);
    for (const auto &k : channel.kraus) {
        sum += k.adjoint() * k;
    }
    report.cptp_defect = sum.max_abs_diff(Matrix::identity(d));
    if (report.cptp_defect > kCptpTolerance) {
        std::ostringstream msg;
        msg << "CPTP defect " << report.cptp_defect;
        report.violations.push_back(msg.str());
    }
    double s = 0;
    for (const auto &a : channel.vacuum_amplitudes) {
        s += std::norm(a);
    }
    report.amplitude_defect = std::abs(s - 1.0);
    if (report.amplitude_defect > kAmplitudeTolerance) {
        std::ostringstream msg;
        msg << "amplitude-norm defect " << report.amplitude_defect;
        report.violations.push_back(msg.str());
    }
    return report;
}

VacuumExtendedChannel pauli_channel_correlated(std::span<const double> weights, std::size_t n,
                                               std::span<const complex> amps) {
    if (weights.size() != 4) {
        throw Error(ErrorKind::kDimMismatch, "Pauli channel needs four weights");
    }
    if (n == 0) {
        throw Error(ErrorKind::kInvalidArgument, "Pauli channel needs at least one qubit");
    }
    double total = 0;
    std::array<double, 4> w{};
    for (std::size_t k = 0; k < 4; ++k) {
        w[k] = checked_probability(weights[k], "Pauli weight");
        total += w[k];
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw Error(ErrorKind::kBadProbability, "Pauli weights do not sum to one");
    }
    check_amplitudes(amps, 4, "Pauli channel");
    VacuumExtendedChannel ch;
    for (std::size_t k = 0; k < 4; ++k) {
        ch.kraus.push_back(pauli_power(static_cast<Pauli>(k), n) * complex(std::sqrt(w[k])));
    }
    ch.vacuum_amplitudes.assign(amps.begin(), amps.end());
    std::ostringstream label;
    label << "pauli(" << w[0] << "," << w[1] << "," << w[2] << "," << w[3] << ")^" << n;
    ch.label = label.str();
    return ch;
}

VacuumExtendedChannel depolarizing_correlated(double p, std::size_t n, std::span<const complex> amps) {
    p = checked_probability(p, "depolarizing p");
    const std::array<double, 4> w = {1.0 - p, p / 3.0, p / 3.0, p / 3.0};
    auto ch = pauli_channel_correlated(w, n, amps);
    ch.label = "depolarizing(p=" + std::to_string(p) + ")";
    return ch;
}

VacuumExtendedChannel bit_flip_correlated(double p, std::size_t n, std::span<const complex> amps) {
    p = checked_probability(p, "bit-flip p");
    check_amplitudes(amps, 4, "bit-flip channel");
    require_zero_slots(amps, {2, 3}, "bit-flip channel");
    const std::array<double, 4> w = {1.0 - p, p, 0.0, 0.0};
    auto ch = pauli_channel_correlated(w, n, amps);
    ch.label = "bit_flip(p=" + std::to_string(p) + ")";
    return ch;
}

VacuumExtendedChannel phase_flip_correlated(double q, std::size_t n, std::span<const complex> amps) {
    q = checked_probability(q, "phase-flip q");
    check_amplitudes(amps, 4, "phase-flip channel");
    require_zero_slots(amps, {1, 2}, "phase-flip channel");
    const std::array<double, 4> w = {1.0 - q, 0.0, 0.0, q};
    auto ch = pauli_channel_correlated(w, n, amps);
    ch.label = "phase_flip(q=" + std::to_string(q) + ")";
    return ch;
}

VacuumExtendedChannel memoryless_bitflip(std::size_t i, std::size_t n, double p, std::span<const complex> amps) {
    p = checked_probability(p, "memoryless bit-flip p");
    const Matrix x = single_qubit_x(i, n);
    check_amplitudes(amps, 2, "memoryless bit-flip");
    VacuumExtendedChannel ch;
    ch.kraus.push_back(Matrix::identity(x.rows()) * complex(std::sqrt(1.0 - p)));
    ch.kraus.push_back(x * complex(std::sqrt(p)));
    ch.vacuum_amplitudes.assign(amps.begin(), amps.end());
    ch.label = "memoryless_bitflip(i=" + std::to_string(i) + ",p=" + std::to_string(p) + ")";
    return ch;
}

double unitarity_defect(const Matrix &u) {
    if (!u.is_square()) {
        throw Error(ErrorKind::kDimMismatch, "unitarity check on a non-square matrix");
    }
    return (u.adjoint() * u).max_abs_diff(Matrix::identity(u.rows()));
}

VacuumExtendedChannel unitary_channel(const Matrix &u, std::string label) {
    if (!u.is_square() || unitarity_defect(u) > kCptpTolerance) {
        throw Error(ErrorKind::kNotUnitary, "operator is not unitary to 1e-10");
    }
    return VacuumExtendedChannel{{u}, {complex(1.0)}, std::move(label)};
}

Matrix apply_channel(const VacuumExtendedChannel &channel, const Matrix &rho) {
    Matrix out(rho.rows(), rho.cols());
    for (const auto &k : channel.kraus) {
        out += sandwich(k, rho);
    }
    return out;
}

}  // namespace vacsup
