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

#include "qfid/qfi.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

using namespace qfid;

namespace {

// Directional values in [-NEGATIVE_QFI_TOL, 0) are round-off and clamp to 0.
constexpr double NEGATIVE_QFI_TOL = 1e-8;
constexpr double IMAG_RESIDUE_TOL = 1e-10;

HermitianEigen checked_spectrum(const DensityMatrix &rho) {
    HermitianEigen eig = hermitian_eigendecompose(rho.matrix(), DENSITY_HERMITIAN_TOL);
    double trace_dev = std::abs(rho.matrix().trace() - Complex{1});
    double min_eig = eig.eigenvalues.front();
    if (trace_dev > DENSITY_TRACE_TOL || min_eig < -DENSITY_PSD_TOL) {
        std::stringstream ss;
        ss << "invalid density operator (trace deviation " << trace_dev << ", min eigenvalue " << min_eig << ")";
        throw DomainError(ss.str());
    }
    return eig;
}

// (p_i - p_j)^2 / (p_i + p_j), or 0 for pairs below the spectrum tolerance.
double pair_weight(double pi, double pj, double spectrum_tol) {
    double s = pi + pj;
    if (s < spectrum_tol) {
        return 0;
    }
    double d = pi - pj;
    return d * d / s;
}

// Moves an eigenvector of a real symmetric matrix to a real unit vector whose
// largest-magnitude component is positive.
Direction real_direction(const ComplexMatrix &vectors, size_t col) {
    size_t pivot = 0;
    for (size_t k = 1; k < 3; k++) {
        if (std::abs(vectors(k, col)) > std::abs(vectors(pivot, col))) {
            pivot = k;
        }
    }
    Complex phase = std::conj(vectors(pivot, col)) / std::abs(vectors(pivot, col));
    std::array<double, 3> v{};
    for (size_t k = 0; k < 3; k++) {
        v[k] = (vectors(k, col) * phase).real();
    }
    return Direction::normalized(v[0], v[1], v[2]);
}

// Cyclic Jacobi for a real symmetric 3x3 matrix; returns the largest eigenvalue.
double symmetric3_max_eigenvalue(std::array<std::array<double, 3>, 3> a) {
    for (int sweep = 0; sweep < 64; sweep++) {
        double off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
        double diag = a[0][0] * a[0][0] + a[1][1] * a[1][1] + a[2][2] * a[2][2];
        if (off <= 1e-32 * diag || off == 0) {
            break;
        }
        for (size_t p = 0; p < 2; p++) {
            for (size_t q = p + 1; q < 3; q++) {
                if (a[p][q] == 0) {
                    continue;
                }
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (size_t k = 0; k < 3; k++) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < 3; k++) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    return std::max({a[0][0], a[1][1], a[2][2]});
}

// J_axis |psi> by direct bit manipulation (no operator matrices).
std::vector<Complex> apply_collective(Axis axis, const PureState &psi) {
    size_t n = psi.n_qubits();
    size_t dim = psi.dim();
    std::vector<Complex> out(dim);
    for (size_t q = 0; q < n; q++) {
        size_t mask = qubit_mask(n, q);
        for (size_t b = 0; b < dim; b++) {
            Complex amp = psi[b];
            bool one = (b & mask) != 0;
            switch (axis) {
                case Axis::X:
                    out[b ^ mask] += 0.5 * amp;
                    break;
                case Axis::Y:
                    // sigma_y |0> = i|1>, sigma_y |1> = -i|0>.
                    out[b ^ mask] += Complex{0, one ? -0.5 : 0.5} * amp;
                    break;
                case Axis::Z:
                    out[b] += (one ? -0.5 : 0.5) * amp;
                    break;
            }
        }
    }
    return out;
}

Complex braket(std::span<const Complex> a, std::span<const Complex> b) {
    Complex t = 0;
    for (size_t k = 0; k < a.size(); k++) {
        t += std::conj(a[k]) * b[k];
    }
    return t;
}

}  // namespace

double CMatrix::quadratic_form(const Direction &n) const {
    double t = 0;
    for (size_t k = 0; k < 3; k++) {
        for (size_t l = 0; l < 3; l++) {
            t += n[k] * m[k][l] * n[l];
        }
    }
    return t;
}

double CMatrix::max_asymmetry() const {
    return std::max({std::abs(m[0][1] - m[1][0]), std::abs(m[0][2] - m[2][0]), std::abs(m[1][2] - m[2][1])});
}

std::array<double, 3> CMatrix::eigenvalues() const {
    ComplexMatrix c(3, 3);
    for (size_t k = 0; k < 3; k++) {
        for (size_t l = 0; l < 3; l++) {
            c(k, l) = m[k][l];
        }
    }
    auto eig = hermitian_eigendecompose(c);
    return {eig.eigenvalues[0], eig.eigenvalues[1], eig.eigenvalues[2]};
}

CMatrix qfid::c_matrix(const DensityMatrix &rho, double spectrum_tol) {
    HermitianEigen eig = checked_spectrum(rho);
    const ComplexMatrix &v = eig.eigenvectors;
    ComplexMatrix v_dag = v.adjoint();
    std::array<ComplexMatrix, 3> elems{ComplexMatrix(1, 1), ComplexMatrix(1, 1), ComplexMatrix(1, 1)};
    for (Axis a : ALL_AXES) {
        elems[(size_t)a] = v_dag * collective_j(a, rho.n_qubits(), rho.n_qubits()) * v;
    }

    const auto &p = eig.eigenvalues;
    size_t dim = p.size();
    std::array<std::array<Complex, 3>, 3> acc{};
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            if (i == j) {
                continue;
            }
            double w = pair_weight(p[i], p[j], spectrum_tol);
            if (w == 0) {
                continue;
            }
            for (size_t k = 0; k < 3; k++) {
                for (size_t l = k; l < 3; l++) {
                    acc[k][l] += w * (elems[k](i, j) * elems[l](j, i) + elems[l](i, j) * elems[k](j, i));
                }
            }
        }
    }

    CMatrix c;
    for (size_t k = 0; k < 3; k++) {
        for (size_t l = k; l < 3; l++) {
            if (std::abs(acc[k][l].imag()) > IMAG_RESIDUE_TOL * std::max(1.0, std::abs(acc[k][l].real()))) {
                std::stringstream ss;
                ss << "c_matrix: imaginary residue " << acc[k][l].imag() << " in entry (" << k << ", " << l << ")";
                throw DomainError(ss.str());
            }
            c.m[k][l] = acc[k][l].real();
            c.m[l][k] = acc[k][l].real();
        }
    }
    return c;
}

double qfid::directional_qfi(const DensityMatrix &rho, const Direction &dir, double spectrum_tol) {
    HermitianEigen eig = checked_spectrum(rho);
    const ComplexMatrix &v = eig.eigenvectors;
    ComplexMatrix elems = v.adjoint() * directional_j(dir, rho.n_qubits(), rho.n_qubits()) * v;
    const auto &p = eig.eigenvalues;
    double f = 0;
    for (size_t i = 0; i < p.size(); i++) {
        for (size_t j = 0; j < p.size(); j++) {
            if (i != j) {
                f += 2 * pair_weight(p[i], p[j], spectrum_tol) * std::norm(elems(i, j));
            }
        }
    }
    if (f < -NEGATIVE_QFI_TOL) {
        std::stringstream ss;
        ss << "directional_qfi: negative value " << f << " indicates a broken density operator";
        throw DomainError(ss.str());
    }
    return std::max(f, 0.0);
}

QfiResult qfid::max_mean_qfi(const DensityMatrix &rho, double spectrum_tol) {
    CMatrix c = c_matrix(rho, spectrum_tol);
    ComplexMatrix cm(3, 3);
    for (size_t k = 0; k < 3; k++) {
        for (size_t l = 0; l < 3; l++) {
            cm(k, l) = c.m[k][l];
        }
    }
    HermitianEigen eig = hermitian_eigendecompose(cm);
    double lambda_max = std::max(eig.eigenvalues[2], 0.0);
    double n = (double)rho.n_qubits();
    double mean = lambda_max / n;
    return QfiResult{
        mean,
        lambda_max,
        real_direction(eig.eigenvectors, 2),
        chi_squared_from_mean_qfi(mean).chi_squared,
    };
}

double qfid::pure_qfi_oracle(const PureState &psi) {
    std::array<std::vector<Complex>, 3> applied;
    std::array<double, 3> mean{};
    for (Axis a : ALL_AXES) {
        size_t k = (size_t)a;
        applied[k] = apply_collective(a, psi);
        mean[k] = braket(psi.amplitudes(), applied[k]).real();
    }
    std::array<std::array<double, 3>, 3> c{};
    for (size_t k = 0; k < 3; k++) {
        for (size_t l = k; l < 3; l++) {
            // <J_k J_l + J_l J_k> = 2 Re <J_k psi | J_l psi> for Hermitian J.
            double anti = 2 * braket(applied[k], applied[l]).real();
            c[k][l] = 2 * (anti - 2 * mean[k] * mean[l]);
            c[l][k] = c[k][l];
        }
    }
    return std::max(symmetric3_max_eigenvalue(c), 0.0) / (double)psi.n_qubits();
}

double qfid::cramer_rao_bound(double total_qfi, uint64_t n_measurements) {
    if (!(total_qfi > 0) || !std::isfinite(total_qfi)) {
        std::stringstream ss;
        ss << "cramer_rao_bound: total QFI " << total_qfi << " must be positive (phase not estimable)";
        throw DomainError(ss.str());
    }
    if (n_measurements == 0) {
        throw DomainError("cramer_rao_bound: need at least one measurement");
    }
    return 1.0 / std::sqrt((double)n_measurements * total_qfi);
}

Usefulness qfid::chi_squared_from_mean_qfi(double mean_qfi) {
    double chi2 = mean_qfi < MEAN_QFI_FLOOR ? std::numeric_limits<double>::infinity() : 1.0 / mean_qfi;
    return Usefulness{chi2, chi2 < 1.0};
}

Usefulness qfid::chi_squared(const QfiResult &result) {
    return chi_squared_from_mean_qfi(result.mean_qfi);
}
