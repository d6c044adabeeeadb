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

// Translation operators T(q, p) = i^(q.p) X^q Z^p and their products, with the
// global phase tracked exactly as a power of i.

#include <string>
#include <string_view>
#include <vector>

#include "gfwigner/dense.hpp"
#include "gfwigner/phasespace.hpp"

namespace gfw {

/// i^phase X^x Z^z on n qubits; bit k of x and z addresses qubit k.
class PauliTranslation {
   public:
    PauliTranslation() = default;
    PauliTranslation(int n, Bits x, Bits z, int phase);

    /// T(x, z): the hermitian, unitary translation with phase x.z.
    static PauliTranslation canonical(int n, Bits x, Bits z);
    static PauliTranslation canonical(int n, BinaryPoint point) { return canonical(n, point.q, point.p); }
    static PauliTranslation identity(int n) { return {n, 0, 0, 0}; }
    /// Parses "+XXI", "-iYZX", "iZ", "XY" (missing sign means +).
    static PauliTranslation parse(std::string_view text);

    int n() const noexcept { return n_; }
    Bits x() const noexcept { return x_; }
    Bits z() const noexcept { return z_; }
    int phase() const noexcept { return phase_; }
    BinaryPoint point() const noexcept { return {x_, z_}; }

    /// k such that *this == i^k T(x, z).
    int relative_phase() const noexcept { return (phase_ - popcount(x_ & z_)) & 3; }
    bool is_canonical() const noexcept { return relative_phase() == 0; }
    bool is_hermitian() const noexcept { return (relative_phase() & 1) == 0; }
    PauliTranslation with_phase(int phase) const { return {n_, x_, z_, phase}; }
    PauliTranslation negated() const { return {n_, x_, z_, phase_ + 2}; }

    std::string to_string() const;
    /// Dense 2^n x 2^n matrix; throws DimensionTooLarge for n > kMaxDenseQubits.
    Matrix to_matrix() const;
    /// T|psi> without building the matrix.
    Vector apply(const Vector &psi) const;
    /// T M T^dagger without building the matrix.
    Matrix conjugate(const Matrix &m) const;

    bool operator==(const PauliTranslation &) const = default;

   private:
    int n_ = 0;
    Bits x_ = 0;
    Bits z_ = 0;
    int phase_ = 0;  // in [0, 4)
};

/// Exact product a * b. Throws DimensionMismatch for different qubit counts.
PauliTranslation compose(const PauliTranslation &a, const PauliTranslation &b);
bool commutes(const PauliTranslation &a, const PauliTranslation &b);

/// T(q, p) for the bit strings of a binary phase-space point.
inline PauliTranslation translation_for(int n, BinaryPoint point) { return PauliTranslation::canonical(n, point); }

/// The translations attached to one ray: the identity followed by T of the ray
/// points w^j * seed, j = 0 .. N-2.
struct CommutingClass {
    StriationLabel label;
    std::vector<PauliTranslation> members;
};

/// One class per striation, in striation order (h, v, 0, 1, ...). Classes are
/// seeded by the binary strings (1, 0), (0, 1) and (1, b) for b != 0.
std::vector<CommutingClass> commuting_classes(const PhaseSpace &space);

}  // namespace gfw
