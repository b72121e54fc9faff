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

#ifndef QFID_ERRORS_H
#define QFID_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfid {

/// Largest register size accepted by default (dense 1024 x 1024 operators).
inline constexpr size_t DEFAULT_QUBIT_CAP = 10;

/// An argument is outside the mathematical domain of an operation
/// (alpha outside [0, 1], a non-Hermitian "density matrix", ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operand shapes are incompatible.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A register or operator would exceed the configured qubit cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

}  // namespace qfid

#endif
