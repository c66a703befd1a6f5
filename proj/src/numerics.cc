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

#include "vacsup/numerics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vacsup/error.h"

namespace vacsup {

namespace {

constexpr int kMaxJacobiSweeps = 100;

// Offsets into the full index space for every multi-index over `subsystems`.
std::vector<std::size_t> subsystem_offsets(std::span<const std::size_t> dims,
                                           std::span<const std::size_t> subsystems) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) {
        strides[k - 1] = strides[k] * dims[k];
    }
    std::vector<std::size_t> offsets{0};
    for (std::size_t s : subsystems) {
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * dims[s]);
        for (std::size_t base : offsets) {
            for (std::size_t v = 0; v < dims[s]; ++v) {
                next.push_back(base + v * strides[s]);
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

}  // namespace

std::size_t product(std::span<const std::size_t> dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

DensityMatrix::DensityMatrix(std::vector<std::size_t> dims, Matrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    const std::size_t d = product(dims_);
    if (!matrix_.is_square() || matrix_.rows() != d) {
        throw Error(ErrorKind::kDimMismatch, "density matrix shape does not match subsystem dims");
    }
    if (matrix_.hermiticity_defect() > kHermitianTolerance) {
        throw Error(ErrorKind::kNonHermitian, "density matrix is not Hermitian");
    }
}

DensityMatrix DensityMatrix::from_pure(std::vector<std::size_t> dims, std::span<const complex> psi) {
    const double n = norm(psi);
    if (std::abs(n - 1.0) > 1e-10) {
        throw Error(ErrorKind::kBadNormalization, "pure state is not unit norm");
    }
    return DensityMatrix(std::move(dims), Matrix::projector(psi));
}

DensityMatrix DensityMatrix::zero_qubits(std::size_t n) {
    std::vector<std::size_t> dims(n, 2);
    Matrix m(std::size_t{1} << n, std::size_t{1} << n);
    m(0, 0) = 1.0;
    return DensityMatrix(std::move(dims), std::move(m));
}

DensityMatrix DensityMatrix::normalized() const {
    const double t = trace();
    if (!(t > 0)) {
        throw Error(ErrorKind::kDivisionByZero, "cannot normalize a zero-trace state");
    }
    Matrix m = matrix_;
    m *= 1.0 / t;
    return DensityMatrix(dims_, std::move(m));
}

void DensityMatrix::validate() const {
    if (std::abs(trace() - 1.0) > 1e-10) {
        throw Error(ErrorKind::kBadNormalization, "density matrix trace is " + std::to_string(trace()));
    }
    if (matrix_.hermiticity_defect() > 1e-12) {
        throw Error(ErrorKind::kNonHermitian, "density matrix is not Hermitian to 1e-12");
    }
    const auto eig = eig_hermitian(matrix_);
    if (!eig.values.empty() && eig.values.back() < -1e-10) {
        throw Error(ErrorKind::kNegativeEigenvalue,
                    "density matrix has eigenvalue " + std::to_string(eig.values.back()));
    }
}

EigenDecomposition eig_hermitian(const Matrix &m) {
    if (!m.is_square()) {
        throw Error(ErrorKind::kDimMismatch, "eigensolver needs a square matrix");
    }
    if (m.hermiticity_defect() > kHermitianTolerance) {
        throw Error(ErrorKind::kNonHermitian, "eigensolver input is not Hermitian");
    }
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix v = Matrix::identity(n);
    const double scale = std::max(a.frobenius_norm(), 1e-300);

    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (std::sqrt(off) <= 1e-17 * scale) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) {
                    continue;
                }
                const complex phase = apq / mag;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = theta == 0.0 ? 1.0
                                               : std::copysign(1.0, theta) /
                                                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Rotation restricted to the (p, q) plane.
                const complex jpp = c;
                const complex jpq = s;
                const complex jqp = -s * std::conj(phase);
                const complex jqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const complex akp = a(k, p);
                    const complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const complex apk = a(p, k);
                    const complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const complex vkp = v(k, p);
                    const complex vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
    EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

Matrix sqrt_psd(const Matrix &m) {
    const auto eig = eig_hermitian(m);
    const std::size_t n = m.rows();
    if (n > 0 && eig.values.back() < -kNegativeEigenvalueTolerance) {
        throw Error(ErrorKind::kNegativeEigenvalue,
                    "sqrt_psd input has eigenvalue " + std::to_string(eig.values.back()));
    }
    Matrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(std::max(eig.values[k], 0.0));
        if (root == 0.0) {
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            const complex vr = root * eig.vectors(r, k);
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += vr * std::conj(eig.vectors(c, k));
            }
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep) {
    const auto &dims = rho.dims();
    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw Error(ErrorKind::kBadIndex, "duplicate subsystem in partial trace");
    }
    for (std::size_t s : kept) {
        if (s >= dims.size()) {
            throw Error(ErrorKind::kBadIndex, "subsystem " + std::to_string(s) + " out of range");
        }
    }
    std::vector<std::size_t> traced;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (!std::binary_search(kept.begin(), kept.end(), s)) {
            traced.push_back(s);
        }
    }
    const auto kept_offsets = subsystem_offsets(dims, kept);
    const auto traced_offsets = subsystem_offsets(dims, traced);

    const std::size_t dk = kept_offsets.size();
    Matrix out(dk, dk);
    const Matrix &m = rho.matrix();
    for (std::size_t a = 0; a < dk; ++a) {
        for (std::size_t b = 0; b < dk; ++b) {
            complex acc = 0;
            for (std::size_t t : traced_offsets) {
                acc += m(kept_offsets[a] + t, kept_offsets[b] + t);
            }
            out(a, b) = acc;
        }
    }
    std::vector<std::size_t> kept_dims;
    for (std::size_t s : kept) {
        kept_dims.push_back(dims[s]);
    }
    return DensityMatrix(std::move(kept_dims), std::move(out));
}

}  // namespace vacsup
