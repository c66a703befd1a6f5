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

#include <cmath>

#include "doctest.h"
#include "support.h"
#include "vacsup/channels.h"
#include "vacsup/error.h"
#include "vacsup/numerics.h"

using namespace vacsup;
using namespace vacsup::testing;

namespace {

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::kInvalidArgument;
}

}  // namespace

TEST_CASE("kron of Paulis matches hand-written entries") {
    const Matrix xz = kron(pauli_matrix(Pauli::kX), pauli_matrix(Pauli::kZ));
    const Matrix expected{{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
    CHECK(xz.max_abs_diff(expected) == 0.0);
}

TEST_CASE("kron is associative") {
    for (int t = 0; t < 10; ++t) {
        const Matrix a = random_unitary(2), b = random_unitary(3), c = random_unitary(2);
        CHECK(kron(kron(a, b), c).max_abs_diff(kron(a, kron(b, c))) < 1e-14);
    }
}

TEST_CASE("product and adjoint obey (AB)^dag = B^dag A^dag") {
    const Matrix a = random_unitary(4), b = random_density(4, 2);
    CHECK((a * b).adjoint().max_abs_diff(b.adjoint() * a.adjoint()) < 1e-14);
}

TEST_CASE("eigenvalues of a diagonal matrix come back sorted descending") {
    const std::vector<double> d = {0.1, 0.7, 0.2};
    const auto e = eig_hermitian(Matrix::diagonal(d));
    REQUIRE(e.values.size() == 3);
    CHECK(e.values[0] == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(e.values[1] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(e.values[2] == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("Jacobi eigensolver reconstructs random Hermitian matrices") {
    for (std::size_t dim : {2u, 4u, 8u, 16u}) {
        const Matrix g = random_unitary(dim) * random_density(dim, dim);
        const Matrix h = g + g.adjoint();
        const auto e = eig_hermitian(h);
        double sum = 0;
        for (double v : e.values) {
            sum += v;
        }
        CHECK(std::abs(sum - h.trace().real()) < 1e-12);
        CHECK(unitarity_defect(e.vectors) < 1e-12);
        const Matrix rebuilt = e.vectors * Matrix::diagonal(e.values) * e.vectors.adjoint();
        CHECK(rebuilt.max_abs_diff(h) < 1e-12);
        CHECK(std::is_sorted(e.values.rbegin(), e.values.rend()));
        CHECK(std::abs(e.values.back() - eigen_min_eigenvalue(h)) < 1e-12);
    }
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
    const Matrix m{{1, 1}, {0, 1}};
    CHECK(kind_of([&] { eig_hermitian(m); }) == ErrorKind::kNonHermitian);
}

TEST_CASE("sqrt_psd squares back to its argument") {
    for (int t = 0; t < 10; ++t) {
        const Matrix rho = random_density(4, 1 + t % 4);
        const Matrix s = sqrt_psd(rho);
        CHECK((s * s).max_abs_diff(rho) < 1e-12);
        CHECK(s.hermiticity_defect() < 1e-14);
    }
}

TEST_CASE("sqrt_psd throws on a clearly negative eigenvalue") {
    const std::vector<double> d = {1.0, -1e-3};
    CHECK(kind_of([&] { sqrt_psd(Matrix::diagonal(d)); }) == ErrorKind::kNegativeEigenvalue);
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
    const double h = 1.0 / std::sqrt(2.0);
    const std::vector<complex> bell = {h, 0, 0, h};
    const auto rho = DensityMatrix::from_pure({2, 2}, bell);
    const std::size_t keep0[] = {0};
    const auto r = partial_trace(rho, keep0);
    CHECK(r.matrix().max_abs_diff(Matrix::identity(2) * complex(0.5)) < 1e-15);
}

TEST_CASE("partial trace of a product state returns the factor") {
    const Matrix a = random_density(2, 2), b = random_density(3, 2), c = random_density(2, 1);
    const DensityMatrix rho({2, 3, 2}, kron(kron(a, b), c));
    const std::size_t keep1[] = {1};
    CHECK(partial_trace(rho, keep1).matrix().max_abs_diff(b) < 1e-14);
    const std::size_t keep20[] = {2, 0};
    const auto ac = partial_trace(rho, keep20);
    CHECK(ac.dims() == std::vector<std::size_t>{2, 2});
    CHECK(ac.matrix().max_abs_diff(kron(a, c)) < 1e-14);
}

TEST_CASE("partial trace preserves the total trace and keeping everything is the identity map") {
    const DensityMatrix rho({2, 2, 2}, random_density(8, 3));
    const std::size_t all[] = {0, 1, 2};
    CHECK(partial_trace(rho, all).matrix().max_abs_diff(rho.matrix()) < 1e-15);
    const std::size_t none[] = {1};
    CHECK(std::abs(partial_trace(rho, none).trace() - 1.0) < 1e-14);
}

TEST_CASE("partial trace rejects bad subsystem indices") {
    const DensityMatrix rho({2, 2}, random_density(4, 2));
    const std::size_t dup[] = {0, 0};
    const std::size_t out[] = {2};
    CHECK(kind_of([&] { partial_trace(rho, dup); }) == ErrorKind::kBadIndex);
    CHECK(kind_of([&] { partial_trace(rho, out); }) == ErrorKind::kBadIndex);
}

TEST_CASE("DensityMatrix checks shape, hermiticity and validity") {
    CHECK(kind_of([] { DensityMatrix({2, 2}, Matrix::identity(2)); }) == ErrorKind::kDimMismatch);
    const Matrix skew{{0.5, 1}, {0, 0.5}};
    CHECK(kind_of([&] { DensityMatrix({2}, skew); }) == ErrorKind::kNonHermitian);
    const std::vector<double> neg = {1.5, -0.5};
    const DensityMatrix bad({2}, Matrix::diagonal(neg));
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::kNegativeEigenvalue);
    DensityMatrix::zero_qubits(3).validate();
}
