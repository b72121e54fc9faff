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

#ifndef QFID_SPIN_OPS_H
#define QFID_SPIN_OPS_H

#include <array>

#include "qfid/linalg.h"

namespace qfid {

enum class Axis { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> ALL_AXES{Axis::X, Axis::Y, Axis::Z};

inline constexpr double DIRECTION_NORM_TOL = 1e-12;

/// Unit vector in R^3, components ordered (x, y, z).
class Direction {
   public:
    /// Throws DomainError unless nx^2 + ny^2 + nz^2 = 1 within DIRECTION_NORM_TOL.
    Direction(double nx, double ny, double nz);

    /// Rescales a nonzero vector to unit length.
    static Direction normalized(double x, double y, double z);
    static Direction along(Axis axis);

    double x() const {
        return v_[0];
    }
    double y() const {
        return v_[1];
    }
    double z() const {
        return v_[2];
    }
    double operator[](size_t k) const {
        return v_[k];
    }
    const std::array<double, 3> &components() const {
        return v_;
    }

   private:
    std::array<double, 3> v_;
};

/// Standard Pauli matrix; |0> is the +1 eigenvector of sigma_z.
ComplexMatrix pauli(Axis axis);

/// Collective spin J = sum_q sigma^(q) / 2 over an n-qubit register (qubit 0 most significant).
ComplexMatrix collective_j(Axis axis, size_t n, size_t qubit_cap = DEFAULT_QUBIT_CAP);

/// nx Jx + ny Jy + nz Jz.
ComplexMatrix directional_j(const Direction &dir, size_t n, size_t qubit_cap = DEFAULT_QUBIT_CAP);

}  // namespace qfid

#endif
