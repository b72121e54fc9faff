// Copyright 2026 The qfid Authors
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

#include "qfid/linalg.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

using namespace qfid;

namespace {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const RowMajorMatrix>;
using MutMap = Eigen::Map<RowMajorMatrix>;

ConstMap as_eigen(const ComplexMatrix &m) {
    return ConstMap(m.entries().data(), (Eigen::Index)m.rows(), (Eigen::Index)m.cols());
}

MutMap as_eigen(ComplexMatrix &m) {
    return MutMap(m.entries().data(), (Eigen::Index)m.rows(), (Eigen::Index)m.cols());
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::stringstream ss;
        ss << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
        throw DimensionError(ss.str());
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("ComplexMatrix must be at least 1x1");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> entries)
    : rows_(entries.size()), cols_(entries.size() ? entries.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("ComplexMatrix must be at least 1x1");
    }
    data_.reserve(rows_ * cols_);
    for (const auto &row : entries) {
        if (row.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged initializer rows");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> row_major_entries)
    : rows_(rows), cols_(cols), data_(std::move(row_major_entries)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("ComplexMatrix must be at least 1x1");
    }
    if (data_.size() != rows * cols) {
        throw DimensionError("ComplexMatrix: entry count does not match shape");
    }
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix result(n, n);
    for (size_t k = 0; k < n; k++) {
        result(k, k) = 1;
    }
    return result;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
    ComplexMatrix result(values.size(), values.size());
    for (size_t k = 0; k < values.size(); k++) {
        result(k, k) = values[k];
    }
    return result;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> a, std::span<const Complex> b) {
    ComplexMatrix result(a.size(), b.size());
    for (size_t r = 0; r < a.size(); r++) {
        for (size_t c = 0; c < b.size(); c++) {
            result(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return result;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix result(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            result(c, r) = std::conj((*this)(r, c));
        }
    }
    return result;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw DimensionError("trace of a non-square matrix");
    }
    Complex t = 0;
    for (size_t k = 0; k < rows_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double t = 0;
    for (const auto &z : data_) {
        t += std::norm(z);
    }
    return std::sqrt(t);
}

double ComplexMatrix::max_hermitian_deviation() const {
    if (!is_square()) {
        throw DimensionError("Hermiticity of a non-square matrix");
    }
    double worst = 0;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = r; c < cols_; c++) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != cols_) {
        throw DimensionError("matrix-vector product: length mismatch");
    }
    std::vector<Complex> out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        Complex acc = 0;
        for (size_t c = 0; c < cols_; c++) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "add");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "subtract");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix qfid::operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix qfid::operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix qfid::operator*(ComplexMatrix a, Complex scale) {
    a *= scale;
    return a;
}

ComplexMatrix qfid::operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix qfid::operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        std::stringstream ss;
        ss << "multiply: inner dimensions differ (" << a.cols() << " vs " << b.rows() << ")";
        throw DimensionError(ss.str());
    }
    ComplexMatrix result(a.rows(), b.cols());
    as_eigen(result).noalias() = as_eigen(a) * as_eigen(b);
    return result;
}

double qfid::frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "frobenius_distance");
    double t = 0;
    auto x = a.entries();
    auto y = b.entries();
    for (size_t k = 0; k < x.size(); k++) {
        t += std::norm(x[k] - y[k]);
    }
    return std::sqrt(t);
}

ComplexMatrix qfid::kron(const ComplexMatrix &a, const ComplexMatrix &b, size_t max_dim) {
    size_t rows = a.rows() * b.rows();
    size_t cols = a.cols() * b.cols();
    if (rows / b.rows() != a.rows() || cols / b.cols() != a.cols() || rows > max_dim || cols > max_dim) {
        std::stringstream ss;
        ss << "kron: result " << a.rows() << "*" << b.rows() << " x " << a.cols() << "*" << b.cols()
           << " exceeds the dimension cap " << max_dim;
        throw CapacityError(ss.str());
    }
    ComplexMatrix result(rows, cols);
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            Complex s = a(ar, ac);
            if (s == Complex{0}) {
                continue;
            }
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    result(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return result;
}

HermitianEigen qfid::hermitian_eigendecompose(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) {
        std::stringstream ss;
        ss << "hermitian_eigendecompose: matrix is " << a.rows() << "x" << a.cols() << ", not square";
        throw DimensionError(ss.str());
    }
    if (!a.all_finite()) {
        throw DomainError("hermitian_eigendecompose: matrix has non-finite entries");
    }
    double deviation = a.max_hermitian_deviation();
    if (deviation > tol) {
        std::stringstream ss;
        ss.precision(3);
        ss << "hermitian_eigendecompose: matrix is not Hermitian (max |A - A^dagger| = " << deviation
           << " > tol " << tol << ")";
        throw DomainError(ss.str());
    }

    Eigen::Index n = (Eigen::Index)a.rows();
    Eigen::MatrixXcd sym = as_eigen(a);
    sym = (0.5 * (sym + sym.adjoint())).eval();

    // Householder tridiagonalization followed by implicit symmetric QR; ascending output.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw DomainError("hermitian_eigendecompose: eigensolver failed to converge");
    }

    HermitianEigen result{std::vector<double>((size_t)n), ComplexMatrix((size_t)n, (size_t)n)};
    for (Eigen::Index k = 0; k < n; k++) {
        result.eigenvalues[(size_t)k] = solver.eigenvalues()(k);
    }
    as_eigen(result.eigenvectors) = solver.eigenvectors();
    return result;
}
