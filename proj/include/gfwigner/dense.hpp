// Copyright 2026 The gfwigner Authors
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

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "gfwigner/galois.hpp"

namespace gfw {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense operators are built only up to this many qubits.
inline constexpr int kMaxDenseQubits = 6;

/// Throws Error(DimensionTooLarge) when n exceeds kMaxDenseQubits.
void require_dense(int n, const char *what);

/// Dense basis index of a qubit bit string: qubit 0 is the leftmost tensor
/// factor, i.e. the most significant bit of the index.
inline Bits qubits_to_index(Bits qubits, int n) noexcept {
    Bits out = 0;
    for (int i = 0; i < n; ++i)
        if ((qubits >> i) & 1u) out |= Bits{1} << (n - 1 - i);
    return out;
}

/// Multiplies by the unit-modulus phase that makes the first amplitude with
/// magnitude above `tol` real and positive.
void fix_global_phase(Vector &v, double tol = 1e-9);

/// max |a_ij - b_ij|
double max_abs_diff(const Matrix &a, const Matrix &b);

}  // namespace gfw
