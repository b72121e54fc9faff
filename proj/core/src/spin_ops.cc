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

#include "qfid/spin_ops.h"

#include <cmath>
#include <sstream>

#include "qfid/states.h"

using namespace qfid;

Direction::Direction(double nx, double ny, double nz) : v_{nx, ny, nz} {
    double norm2 = nx * nx + ny * ny + nz * nz;
    if (!(std::abs(norm2 - 1.0) <= DIRECTION_NORM_TOL)) {
        std::stringstream ss;
        ss.precision(17);
        ss << "Direction (" << nx << ", " << ny << ", " << nz << ") is not unit length (|n|^2 = " << norm2 << ")";
        throw DomainError(ss.str());
    }
}

Direction Direction::normalized(double x, double y, double z) {
    double len = std::sqrt(x * x + y * y + z * z);
    if (!(len > 0) || !std::isfinite(len)) {
        throw DomainError("Direction::normalized: zero or non-finite vector");
    }
    return Direction(x / len, y / len, z / len);
}

Direction Direction::along(Axis axis) {
    switch (axis) {
        case Axis::X:
            return Direction(1, 0, 0);
        case Axis::Y:
            return Direction(0, 1, 0);
        default:
            return Direction(0, 0, 1);
    }
}

ComplexMatrix qfid::pauli(Axis axis) {
    switch (axis) {
        case Axis::X:
            return {{0, 1}, {1, 0}};
        case Axis::Y:
            return {{0, Complex{0, -1}}, {Complex{0, 1}, 0}};
        default:
            return {{1, 0}, {0, -1}};
    }
}

ComplexMatrix qfid::collective_j(Axis axis, size_t n, size_t qubit_cap) {
    size_t dim = register_dim(n, qubit_cap);
    ComplexMatrix j(dim, dim);
    for (size_t q = 0; q < n; q++) {
        size_t mask = qubit_mask(n, q);
        for (size_t b = 0; b < dim; b++) {
            bool one = (b & mask) != 0;
            switch (axis) {
                case Axis::X:
                    j(b, b ^ mask) += 0.5;
                    break;
                case Axis::Y:
                    // <0|sigma_y|1> = -i, <1|sigma_y|0> = +i.
                    j(b, b ^ mask) += Complex{0, one ? 0.5 : -0.5};
                    break;
                case Axis::Z:
                    j(b, b) += one ? -0.5 : 0.5;
                    break;
            }
        }
    }
    return j;
}

ComplexMatrix qfid::directional_j(const Direction &dir, size_t n, size_t qubit_cap) {
    return collective_j(Axis::X, n, qubit_cap) * dir.x() + collective_j(Axis::Y, n, qubit_cap) * dir.y() +
           collective_j(Axis::Z, n, qubit_cap) * dir.z();
}
