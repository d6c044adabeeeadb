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

// The N x N phase-space grid over GF(2^n).
//
// Two coordinate systems are used:
//  * PhasePoint: field coordinates (q, p), each an element word of GF(2^n).
//  * BinaryPoint: the bit strings that select a Pauli translation. q is expanded
//    in the canonical basis {1, w, ..., w^(n-1)}; p is expanded in the basis
//    f_i = w^s * dual_i, scaled so that p = 1 has bits 10...0. Along the momentum
//    axis the bits follow the orbit of 10...0 under the transposed companion matrix.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfwigner/galois.hpp"

namespace gfw {

struct PhasePoint {
    Bits q = 0;
    Bits p = 0;
    bool operator==(const PhasePoint &) const = default;
    PhasePoint operator+(const PhasePoint &o) const noexcept { return {q ^ o.q, p ^ o.p}; }
    bool is_origin() const noexcept { return q == 0 && p == 0; }
};

struct BinaryPoint {
    Bits q = 0;  // X part
    Bits p = 0;  // Z part
    bool operator==(const BinaryPoint &) const = default;
    BinaryPoint operator+(const BinaryPoint &o) const noexcept { return {q ^ o.q, p ^ o.p}; }
    bool is_origin() const noexcept { return q == 0 && p == 0; }
};

/// Symplectic product q_a . p_b - q_b . p_a (mod 2) of two binary points.
inline int wedge(BinaryPoint a, BinaryPoint b) noexcept { return parity((a.q & b.p) ^ (b.q & a.p)); }

/// The set {(q, p) : a q + b p = c}, stored with the leading nonzero of (a, b) equal to 1.
struct Line {
    Bits a = 0;
    Bits b = 0;
    Bits c = 0;
    bool operator==(const Line &) const = default;
};

enum class StriationKind { Horizontal, Vertical, Diagonal };

/// h is the ray p = 0, v the ray q = 0, and diagonal slope j the ray p = w^j q.
struct StriationLabel {
    StriationKind kind = StriationKind::Horizontal;
    int slope = 0;

    static StriationLabel horizontal() { return {StriationKind::Horizontal, 0}; }
    static StriationLabel vertical() { return {StriationKind::Vertical, 0}; }
    static StriationLabel diagonal(int slope) { return {StriationKind::Diagonal, slope}; }
    /// "h", "v" or the slope exponent.
    std::string to_string() const;
    static StriationLabel parse(const std::string &text);
    bool operator==(const StriationLabel &) const = default;
};

struct Striation {
    StriationLabel label;
    std::vector<Line> lines;  // ray first, then offsets c = 1, w, w^2, ...
};

struct Intersection {
    enum class Kind { Parallel, Point, SameLine };
    Kind kind = Kind::Parallel;
    PhasePoint point;
};

class PhaseSpace {
   public:
    explicit PhaseSpace(Field field);

    const Field &field() const noexcept { return field_; }
    int n() const noexcept { return field_.n(); }
    Bits size() const noexcept { return field_.size(); }
    int num_striations() const noexcept { return static_cast<int>(size()) + 1; }

    // --- coordinate maps -------------------------------------------------
    Bits momentum_bits(Bits p) const noexcept { return p_to_bits_[p]; }
    Bits momentum_from_bits(Bits bits) const noexcept { return bits_to_p_[bits]; }
    BinaryPoint to_binary(PhasePoint a) const noexcept { return {a.q, p_to_bits_[a.p]}; }
    PhasePoint from_binary(BinaryPoint b) const noexcept { return {b.q, bits_to_p_[b.p]}; }
    /// Elements whose momentum bits are the unit vectors.
    const std::vector<Bits> &momentum_basis() const noexcept { return momentum_basis_; }
    /// s with momentum_basis()[i] == w^s * dual(canonical)[i].
    int momentum_scale_exponent() const noexcept { return momentum_scale_; }
    /// Symplectic product written with field operations: tr(w^-s (q_a p_b - q_b p_a)).
    int wedge_field(PhasePoint a, PhasePoint b) const noexcept;

    /// Point at axis positions (0 -> 0, k -> w^(k-1)).
    PhasePoint point_at_axis(std::uint32_t q_index, std::uint32_t p_index) const;

    // --- striations and lines -------------------------------------------
    /// Order: h, v, 0, 1, ..., N-2.
    StriationLabel striation_label(int index) const;
    int striation_index(StriationLabel label) const;
    std::vector<Striation> all_striations() const;
    Striation striation(StriationLabel label) const;

    /// Normalizes (a, b, c); throws InvalidArgument when a = b = 0.
    Line make_line(Bits a, Bits b, Bits c) const;
    Line ray(StriationLabel label) const;
    Line line(StriationLabel label, Bits offset) const;
    StriationLabel striation_of(const Line &l) const;
    /// Ray through a point other than the origin.
    StriationLabel ray_through(PhasePoint point) const;

    bool contains(const Line &l, PhasePoint point) const noexcept;
    std::vector<PhasePoint> points_on(const Line &l) const;
    Intersection intersect(const Line &l1, const Line &l2) const;
    /// { alpha + d : alpha in l }.
    Line translate(const Line &l, PhasePoint d) const;
    /// Lexicographically smallest d (by axis positions of q, then p) with ray + d = l.
    PhasePoint displacement_to(const Line &l) const;

    /// The n ray points (other than the origin) whose translations generate the ray's
    /// commuting class: (w^k, 0), (0, w^k) or (w^k, w^(k+slope)) for k < n.
    std::vector<PhasePoint> generator_points(StriationLabel label) const;

   private:
    Field field_;
    std::vector<Bits> p_to_bits_;
    std::vector<Bits> bits_to_p_;
    std::vector<Bits> momentum_basis_;
    int momentum_scale_ = 0;
};

}  // namespace gfw
