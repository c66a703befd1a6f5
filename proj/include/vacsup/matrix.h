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

#ifndef VACSUP_MATRIX_H
#define VACSUP_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace vacsup {

using complex = std::complex<double>;

/// Dense row-major complex matrix holding operators and density matrices.
/// Kets are plain `std::vector<complex>`.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<complex> entries);
    Matrix(std::initializer_list<std::initializer_list<complex>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix diagonal(std::span<const double> values);
    /// |a><b|
    static Matrix outer(std::span<const complex> a, std::span<const complex> b);
    static Matrix projector(std::span<const complex> v) { return outer(v, v); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    std::span<const complex> entries() const noexcept { return entries_; }
    std::span<complex> entries() noexcept { return entries_; }

    complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Matrix adjoint() const;
    Matrix conj() const;
    Matrix transpose() const;
    complex trace() const;

    /// Largest elementwise |a_ij - b_ij|; matrices must share a shape.
    double max_abs_diff(const Matrix &other) const;
    /// Largest elementwise |a_ij - conj(a_ji)|.
    double hermiticity_defect() const;
    double frobenius_norm() const;

    std::vector<complex> apply(std::span<const complex> v) const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(complex scale);

    /// this += scale * other, without a temporary.
    void add_scaled(const Matrix &other, complex scale);

    bool operator==(const Matrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complex> entries_;
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator*(complex scale, Matrix m);
Matrix operator*(Matrix m, complex scale);

/// Kronecker product; `a` is the left (most significant) tensor factor.
Matrix kron(const Matrix &a, const Matrix &b);

/// a * m * a^dagger
Matrix sandwich(const Matrix &a, const Matrix &m);

complex inner(std::span<const complex> a, std::span<const complex> b);
double norm(std::span<const complex> v);
std::vector<complex> kron(std::span<const complex> a, std::span<const complex> b);

/// <v|m|v>
complex expectation(const Matrix &m, std::span<const complex> v);

}  // namespace vacsup

#endif
