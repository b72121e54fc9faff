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

#ifndef QFID_LINALG_H
#define QFID_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qfid/errors.h"

namespace qfid {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Always at least 1 x 1.
class ComplexMatrix {
   public:
    /// Zero matrix of the given shape.
    ComplexMatrix(size_t rows, size_t cols);
    /// Row-major construction from nested initializer lists; rows must be equal length.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> entries);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> row_major_entries);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> values);
    /// |a><b| for column vectors a and b.
    static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    Complex &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const Complex> entries() const {
        return data_;
    }
    std::span<Complex> entries() {
        return data_;
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// Max |A(r,c) - conj(A(c,r))|. Requires a square matrix.
    double max_hermitian_deviation() const;
    bool all_finite() const;

    /// Matrix-vector product.
    std::vector<Complex> apply(std::span<const Complex> v) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t rows_;
    size_t cols_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product a (x) b. Block (i, j) of the result is a(i, j) * b.
///
/// Throws CapacityError when either result dimension would exceed max_dim.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, size_t max_dim = size_t{1} << DEFAULT_QUBIT_CAP);

/// Spectrum of a Hermitian matrix. eigenvalues are ascending; column i of
/// eigenvectors is the unit eigenvector paired with eigenvalues[i].
struct HermitianEigen {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

inline constexpr double DEFAULT_HERMITIAN_TOL = 1e-10;

/// Eigendecomposition of a Hermitian matrix.
///
/// The input is checked for Hermiticity (max entrywise |A - A^dagger| <= tol)
/// and symmetrized before solving. Output is a deterministic function of the
/// input bits; within a degenerate eigenspace the basis is unspecified.
///
/// Throws DimensionError for non-square input and DomainError, naming the
/// observed deviation, when the Hermiticity check fails.
HermitianEigen hermitian_eigendecompose(const ComplexMatrix &a, double tol = DEFAULT_HERMITIAN_TOL);

}  // namespace qfid

#endif
