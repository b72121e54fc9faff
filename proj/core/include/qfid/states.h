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

#ifndef QFID_STATES_H
#define QFID_STATES_H

#include <span>
#include <string_view>
#include <vector>

#include "qfid/linalg.h"

namespace qfid {

inline constexpr double STATE_NORM_TOL = 1e-12;
inline constexpr double DENSITY_HERMITIAN_TOL = 1e-10;
inline constexpr double DENSITY_TRACE_TOL = 1e-10;
inline constexpr double DENSITY_PSD_TOL = 1e-9;

/// Register dimension 2^n_qubits, after checking 1 <= n_qubits <= qubit_cap.
size_t register_dim(size_t n_qubits, size_t qubit_cap = DEFAULT_QUBIT_CAP);

/// Bit mask selecting qubit q in a basis index. Qubit 0 is the most significant bit.
inline size_t qubit_mask(size_t n_qubits, size_t q) {
    return size_t{1} << (n_qubits - 1 - q);
}

/// Normalized state vector over n_qubits qubits. Amplitude b belongs to the
/// computational basis ket |b>.
class PureState {
   public:
    /// Throws DomainError unless the amplitudes have unit norm within STATE_NORM_TOL.
    PureState(size_t n_qubits, std::vector<Complex> amplitudes, size_t qubit_cap = DEFAULT_QUBIT_CAP);

    size_t n_qubits() const {
        return n_qubits_;
    }
    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](size_t index) const {
        return amplitudes_[index];
    }

    double norm() const;
    Complex inner(const PureState &other) const;

   private:
    size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

struct DensityCheck {
    double hermitian_deviation;
    double trace_deviation;
    double min_eigenvalue;

    bool ok() const {
        return hermitian_deviation <= DENSITY_HERMITIAN_TOL && trace_deviation <= DENSITY_TRACE_TOL &&
               min_eigenvalue >= -DENSITY_PSD_TOL;
    }
};

/// Density operator on n_qubits qubits.
class DensityMatrix {
   public:
    /// Validating constructor: Hermitian, unit trace and positive semidefinite
    /// within the DENSITY_* tolerances, else DomainError.
    DensityMatrix(size_t n_qubits, ComplexMatrix matrix, size_t qubit_cap = DEFAULT_QUBIT_CAP);

    /// Skips the spectral checks. For outputs of maps already known to be
    /// trace preserving and completely positive.
    static DensityMatrix trusted(size_t n_qubits, ComplexMatrix matrix);

    size_t n_qubits() const {
        return n_qubits_;
    }
    size_t dim() const {
        return matrix_.rows();
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }

    /// Measures every invariant (requires an eigendecomposition).
    DensityCheck check() const;

   private:
    struct Unchecked {};
    DensityMatrix(Unchecked, size_t n_qubits, ComplexMatrix matrix);

    size_t n_qubits_;
    ComplexMatrix matrix_;
};

/// Computational basis state from a string of '0'/'1' characters, qubit 0 first.
PureState basis_state(std::string_view bits, size_t qubit_cap = DEFAULT_QUBIT_CAP);

/// (|10..0> + |010..0> + ... + |0..01>) / sqrt(n). Requires n >= 2.
PureState w_state(size_t n, size_t qubit_cap = DEFAULT_QUBIT_CAP);

/// (|0..0> + |1..1>) / sqrt(2). Requires n >= 2.
PureState ghz_state(size_t n, size_t qubit_cap = DEFAULT_QUBIT_CAP);

/// alpha |W_n> + sqrt(1 - alpha^2) |GHZ_n> for real alpha in [0, 1].
PureState wghz_superposition(double alpha, size_t n, size_t qubit_cap = DEFAULT_QUBIT_CAP);

/// |psi><psi|.
DensityMatrix to_density(const PureState &psi);

}  // namespace qfid

#endif
