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

#ifndef QFID_QFI_H
#define QFID_QFI_H

#include <array>
#include <cstdint>

#include "qfid/spin_ops.h"
#include "qfid/states.h"

namespace qfid {

/// Eigenpairs (i, j) with p_i + p_j below this are left out of the spectral sums.
inline constexpr double DEFAULT_SPECTRUM_TOL = 1e-12;
/// chi^2 is reported as +infinity when the mean QFI falls below this.
inline constexpr double MEAN_QFI_FLOOR = 1e-15;

/// 3x3 real symmetric matrix whose quadratic form n C n^T is the QFI of rho
/// for the generator J_n. Indices ordered (x, y, z).
struct CMatrix {
    std::array<std::array<double, 3>, 3> m{};

    double operator()(size_t k, size_t l) const {
        return m[k][l];
    }
    double quadratic_form(const Direction &n) const;
    double max_asymmetry() const;
    /// Ascending eigenvalues.
    std::array<double, 3> eigenvalues() const;
};

struct QfiResult {
    /// Maximal QFI over directions, divided by the qubit count.
    double mean_qfi;
    double total_qfi;
    Direction optimal_direction;
    /// 1 / mean_qfi, or +infinity when mean_qfi < MEAN_QFI_FLOOR.
    double chi_squared;
};

struct Usefulness {
    double chi_squared;
    /// chi^2 < 1, i.e. sub-shot-noise phase sensitivity.
    bool useful;
};

/// Builds C_kl = sum_{i != j} (p_i - p_j)^2 / (p_i + p_j) * 2 Re(<i|J_k|j><j|J_l|i>)
/// over the eigenpairs of rho.
///
/// Throws DomainError if rho is not a valid density operator.
CMatrix c_matrix(const DensityMatrix &rho, double spectrum_tol = DEFAULT_SPECTRUM_TOL);

/// F(rho, J_n) = sum_{i != j} 2 (p_i - p_j)^2 / (p_i + p_j) |<i|J_n|j>|^2, evaluated
/// directly rather than through c_matrix.
double directional_qfi(const DensityMatrix &rho, const Direction &dir, double spectrum_tol = DEFAULT_SPECTRUM_TOL);

/// Largest eigenvalue of C divided by the qubit count, with its eigenvector.
QfiResult max_mean_qfi(const DensityMatrix &rho, double spectrum_tol = DEFAULT_SPECTRUM_TOL);

/// Pure-state QFI from state-vector expectation values only:
/// C_kl = 2 (<J_k J_l + J_l J_k> - 2 <J_k><J_l>), returning lambda_max / n.
/// Shares no code path with c_matrix (no density matrix, no eigensolver).
double pure_qfi_oracle(const PureState &psi);

/// 1 / sqrt(n_measurements * total_qfi). Throws DomainError for total_qfi <= 0
/// or n_measurements == 0.
double cramer_rao_bound(double total_qfi, uint64_t n_measurements);

Usefulness chi_squared(const QfiResult &result);
Usefulness chi_squared_from_mean_qfi(double mean_qfi);

}  // namespace qfid

#endif
