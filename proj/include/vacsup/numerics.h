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

#ifndef VACSUP_NUMERICS_H
#define VACSUP_NUMERICS_H

#include <cstddef>
#include <span>
#include <vector>

#include "vacsup/matrix.h"

namespace vacsup {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kNegativeEigenvalueTolerance = 1e-8;

/// Density matrix over an ordered list of subsystems. Subsystem 0 is the
/// leftmost tensor factor.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    /// Checks shape against prod(dims) and hermiticity to 1e-10. Trace and
    /// positivity are checked by `validate()` only, since intermediate
    /// (unnormalized) states are legitimately built through this type.
    DensityMatrix(std::vector<std::size_t> dims, Matrix matrix);

    static DensityMatrix from_pure(std::vector<std::size_t> dims, std::span<const complex> psi);
    /// |0...0><0...0| on `n` qubits.
    static DensityMatrix zero_qubits(std::size_t n);

    const std::vector<std::size_t> &dims() const noexcept { return dims_; }
    const Matrix &matrix() const noexcept { return matrix_; }
    std::size_t dim() const noexcept { return matrix_.rows(); }
    std::size_t subsystem_count() const noexcept { return dims_.size(); }

    double trace() const { return matrix_.trace().real(); }
    DensityMatrix normalized() const;

    /// Throws unless trace = 1 +- 1e-10, Hermitian to 1e-12 and min
    /// eigenvalue >= -1e-10.
    void validate() const;

   private:
    std::vector<std::size_t> dims_;
    Matrix matrix_;
};

struct EigenDecomposition {
    std::vector<double> values;  // descending
    Matrix vectors;              // column k pairs with values[k]
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
EigenDecomposition eig_hermitian(const Matrix &m);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-1e-8, 0) are clamped to zero.
Matrix sqrt_psd(const Matrix &m);

/// Reduced state on the subsystems listed in `keep` (any order; the result
/// keeps them in ascending order).
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep);

std::size_t product(std::span<const std::size_t> dims);

}  // namespace vacsup

#endif
