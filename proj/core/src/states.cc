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

#include "qfid/states.h"

#include <cmath>
#include <sstream>

using namespace qfid;

size_t qfid::register_dim(size_t n_qubits, size_t qubit_cap) {
    if (n_qubits < 1 || n_qubits > qubit_cap) {
        std::stringstream ss;
        ss << "qubit count " << n_qubits << " outside [1, " << qubit_cap << "]";
        throw CapacityError(ss.str());
    }
    return size_t{1} << n_qubits;
}

PureState::PureState(size_t n_qubits, std::vector<Complex> amplitudes, size_t qubit_cap)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    size_t dim = register_dim(n_qubits, qubit_cap);
    if (amplitudes_.size() != dim) {
        std::stringstream ss;
        ss << "PureState: " << amplitudes_.size() << " amplitudes for " << n_qubits << " qubits (expected " << dim
           << ")";
        throw DimensionError(ss.str());
    }
    double deviation = std::abs(norm() - 1.0);
    if (!(deviation <= STATE_NORM_TOL)) {
        std::stringstream ss;
        ss << "PureState: amplitudes are not normalized (|norm - 1| = " << deviation << ")";
        throw DomainError(ss.str());
    }
}

double PureState::norm() const {
    double t = 0;
    for (const auto &z : amplitudes_) {
        t += std::norm(z);
    }
    return std::sqrt(t);
}

Complex PureState::inner(const PureState &other) const {
    if (other.dim() != dim()) {
        throw DimensionError("PureState::inner: dimension mismatch");
    }
    Complex t = 0;
    for (size_t k = 0; k < amplitudes_.size(); k++) {
        t += std::conj(amplitudes_[k]) * other.amplitudes_[k];
    }
    return t;
}

DensityMatrix::DensityMatrix(Unchecked, size_t n_qubits, ComplexMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
}

DensityMatrix DensityMatrix::trusted(size_t n_qubits, ComplexMatrix matrix) {
    return DensityMatrix(Unchecked{}, n_qubits, std::move(matrix));
}

DensityMatrix::DensityMatrix(size_t n_qubits, ComplexMatrix matrix, size_t qubit_cap)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    size_t dim = register_dim(n_qubits, qubit_cap);
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        std::stringstream ss;
        ss << "DensityMatrix: " << matrix_.rows() << "x" << matrix_.cols() << " matrix for " << n_qubits
           << " qubits (expected " << dim << "x" << dim << ")";
        throw DimensionError(ss.str());
    }
    if (!matrix_.all_finite()) {
        throw DomainError("DensityMatrix: non-finite entries");
    }
    DensityCheck c = check();
    if (!c.ok()) {
        std::stringstream ss;
        ss << "DensityMatrix: invalid density operator (hermitian deviation " << c.hermitian_deviation
           << ", trace deviation " << c.trace_deviation << ", min eigenvalue " << c.min_eigenvalue << ")";
        throw DomainError(ss.str());
    }
}

DensityCheck DensityMatrix::check() const {
    DensityCheck c{};
    c.hermitian_deviation = matrix_.max_hermitian_deviation();
    c.trace_deviation = std::abs(matrix_.trace() - Complex{1});
    if (c.hermitian_deviation <= DENSITY_HERMITIAN_TOL) {
        c.min_eigenvalue = hermitian_eigendecompose(matrix_, DENSITY_HERMITIAN_TOL).eigenvalues.front();
    } else {
        c.min_eigenvalue = std::nan("");
    }
    return c;
}

PureState qfid::basis_state(std::string_view bits, size_t qubit_cap) {
    size_t n = bits.size();
    size_t dim = register_dim(n, qubit_cap);
    size_t index = 0;
    for (char b : bits) {
        if (b != '0' && b != '1') {
            throw DomainError("basis_state: bit string may only contain '0' and '1'");
        }
        index = (index << 1) | (size_t)(b == '1');
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1;
    return PureState(n, std::move(amps), qubit_cap);
}

namespace {

void require_multi_qubit(size_t n, const char *name) {
    if (n < 2) {
        std::stringstream ss;
        ss << name << ": needs at least 2 qubits, got " << n;
        throw DomainError(ss.str());
    }
}

}  // namespace

PureState qfid::w_state(size_t n, size_t qubit_cap) {
    require_multi_qubit(n, "w_state");
    std::vector<Complex> amps(register_dim(n, qubit_cap));
    double a = 1.0 / std::sqrt((double)n);
    for (size_t q = 0; q < n; q++) {
        amps[qubit_mask(n, q)] = a;
    }
    return PureState(n, std::move(amps), qubit_cap);
}

PureState qfid::ghz_state(size_t n, size_t qubit_cap) {
    require_multi_qubit(n, "ghz_state");
    std::vector<Complex> amps(register_dim(n, qubit_cap));
    amps.front() = M_SQRT1_2;
    amps.back() = M_SQRT1_2;
    return PureState(n, std::move(amps), qubit_cap);
}

PureState qfid::wghz_superposition(double alpha, size_t n, size_t qubit_cap) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        std::stringstream ss;
        ss << "wghz_superposition: alpha = " << alpha << " outside [0, 1]";
        throw DomainError(ss.str());
    }
    require_multi_qubit(n, "wghz_superposition");
    std::vector<Complex> amps(register_dim(n, qubit_cap));
    double w = alpha / std::sqrt((double)n);
    double g = std::sqrt(1.0 - alpha * alpha) * M_SQRT1_2;
    for (size_t q = 0; q < n; q++) {
        amps[qubit_mask(n, q)] = w;
    }
    amps.front() = g;
    amps.back() = g;
    return PureState(n, std::move(amps), qubit_cap);
}

DensityMatrix qfid::to_density(const PureState &psi) {
    return DensityMatrix::trusted(psi.n_qubits(), ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}
