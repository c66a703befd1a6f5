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

#include "vacsup/matrix.h"

#include <algorithm>
#include <cmath>

#include "vacsup/error.h"

namespace vacsup {

namespace {

void require_same_shape(const Matrix &a, const Matrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::kDimMismatch, std::string(what) + ": shape mismatch");
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorKind::kDimMismatch, "entry count does not equal rows * cols");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorKind::kDimMismatch, "ragged initializer list");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        m(k, k) = values[k];
    }
    return m;
}

Matrix Matrix::outer(std::span<const complex> a, std::span<const complex> b) {
    Matrix m(a.size(), b.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < b.size(); ++c) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Matrix Matrix::conj() const {
    Matrix m = *this;
    for (auto &x : m.entries_) {
        x = std::conj(x);
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(c, r) = (*this)(r, c);
        }
    }
    return m;
}

complex Matrix::trace() const {
    complex t = 0;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) {
        t += (*this)(k, k);
    }
    return t;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    require_same_shape(*this, other, "max_abs_diff");
    double worst = 0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

double Matrix::hermiticity_defect() const {
    if (!is_square()) {
        throw Error(ErrorKind::kDimMismatch, "hermiticity of a non-square matrix");
    }
    double worst = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

double Matrix::frobenius_norm() const {
    double s = 0;
    for (const auto &x : entries_) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

std::vector<complex> Matrix::apply(std::span<const complex> v) const {
    if (v.size() != cols_) {
        throw Error(ErrorKind::kDimMismatch, "matrix-vector product");
    }
    std::vector<complex> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        complex acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Matrix &Matrix::operator+=(const Matrix &other) {
    require_same_shape(*this, other, "operator+=");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    require_same_shape(*this, other, "operator-=");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

Matrix &Matrix::operator*=(complex scale) {
    for (auto &x : entries_) {
        x *= scale;
    }
    return *this;
}

void Matrix::add_scaled(const Matrix &other, complex scale) {
    require_same_shape(*this, other, "add_scaled");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += scale * other.entries_[k];
    }
}

Matrix operator+(Matrix a, const Matrix &b) { return a += b; }

Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::kDimMismatch, "matrix product");
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const complex x = a(r, k);
            if (x == complex(0)) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

Matrix operator*(complex scale, Matrix m) { return m *= scale; }

Matrix operator*(Matrix m, complex scale) { return m *= scale; }

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const complex x = a(ar, ac);
            if (x == complex(0)) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

Matrix sandwich(const Matrix &a, const Matrix &m) { return a * m * a.adjoint(); }

complex inner(std::span<const complex> a, std::span<const complex> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::kDimMismatch, "inner product");
    }
    complex acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double norm(std::span<const complex> v) { return std::sqrt(inner(v, v).real()); }

std::vector<complex> kron(std::span<const complex> a, std::span<const complex> b) {
    std::vector<complex> out;
    out.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

complex expectation(const Matrix &m, std::span<const complex> v) { return inner(v, m.apply(v)); }

}  // namespace vacsup
