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

// Arithmetic in GF(2^n), 1 <= n <= 16.
//
// An element is an n-bit word: bit i is the coefficient of omega^i, where omega
// is a root of the field's primitive polynomial. Linear maps over GF(2) act on
// row vectors from the right (v' = v M), so multiplying an element by omega is
// `companion().apply(v)`.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gfw {

using Bits = std::uint32_t;

inline int parity(Bits x) noexcept { return __builtin_parity(x); }
inline int popcount(Bits x) noexcept { return __builtin_popcount(x); }

/// Square matrix over GF(2). Row r is stored as a word whose bit c is entry (r, c).
class BinaryMatrix {
   public:
    explicit BinaryMatrix(int n = 0) : n_(n), rows_(static_cast<size_t>(n), 0) {}
    static BinaryMatrix identity(int n);
    static BinaryMatrix from_rows(std::vector<Bits> rows);

    int size() const noexcept { return n_; }
    bool get(int r, int c) const noexcept { return (rows_[r] >> c) & 1u; }
    void set(int r, int c, bool v) noexcept;
    Bits row(int r) const noexcept { return rows_[r]; }
    const std::vector<Bits> &rows() const noexcept { return rows_; }

    /// Row vector times matrix.
    Bits apply(Bits v) const noexcept;
    BinaryMatrix transpose() const;
    BinaryMatrix operator*(const BinaryMatrix &o) const;
    BinaryMatrix pow(std::uint64_t e) const;
    /// Throws Error(SingularBasis) when the matrix is not invertible.
    BinaryMatrix inverse() const;
    int rank() const;
    int trace() const noexcept;

    bool operator==(const BinaryMatrix &o) const = default;

   private:
    int n_;
    std::vector<Bits> rows_;
};

namespace detail {
struct FieldTables;
}

class FieldElement;

/// Immutable description of GF(2^n): the primitive polynomial, its companion
/// matrix, and log/antilog tables. Copies share the tables.
class Field {
   public:
    static constexpr int kMaxDegree = 16;

    /// Uses the built-in primitive polynomial for n.
    explicit Field(int n);
    /// `poly` holds the n+1 coefficients r_0..r_{n-1},1 with bit i = coefficient of x^i.
    Field(int n, Bits poly);

    static Bits default_polynomial(int n);
    /// "1011" (low-to-high) -> x^3 + x^2 + 1.
    static Bits parse_polynomial(std::string_view low_to_high);
    static std::string format_polynomial(Bits poly, int n);
    /// Human-readable form, e.g. "x^3+x^2+1".
    static std::string polynomial_string(Bits poly, int n);

    int n() const noexcept;
    Bits size() const noexcept;  // N = 2^n
    Bits polynomial() const noexcept;
    Bits mask() const noexcept { return size() - 1; }

    Bits add(Bits x, Bits y) const noexcept { return x ^ y; }
    Bits mul(Bits x, Bits y) const noexcept;
    Bits inv(Bits x) const;
    Bits div(Bits x, Bits y) const { return mul(x, inv(y)); }
    /// omega^j for any integer j (negative exponents wrap modulo N-1).
    Bits omega_pow(long long j) const noexcept;
    /// Discrete log base omega of a nonzero element, in [0, N-2].
    int log(Bits x) const;
    int trace(Bits x) const noexcept;
    /// Trace from the defining sum x + x^2 + x^4 + ...; the fast `trace` uses a
    /// precomputed linear form and is checked against this.
    int trace_by_frobenius(Bits x) const noexcept;

    FieldElement element(Bits bits) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement omega(long long power = 1) const;

    const BinaryMatrix &companion() const noexcept;
    /// Matrix of y -> y*x in the canonical basis (row action). For x = omega this is
    /// the companion matrix.
    BinaryMatrix multiplication_matrix(Bits x) const;

    /// Dual of `basis` under the trace form: tr(dual_i * basis_j) = delta_ij.
    std::vector<Bits> dual_basis(std::span<const Bits> basis) const;
    /// seed, seed*G, seed*G^2, ..., N-1 entries. Throws Error(ZeroSeed) on seed 0.
    std::vector<Bits> power_ordering(const BinaryMatrix &generator, Bits seed) const;
    /// Field elements in axis order: 0, 1, omega, omega^2, ..., omega^(N-2).
    std::vector<Bits> axis_elements() const;
    /// Position of an element in axis order (0 -> 0, omega^j -> j+1).
    std::uint32_t axis_index(Bits x) const;

    bool operator==(const Field &o) const noexcept;

   private:
    std::shared_ptr<const detail::FieldTables> t_;
};

/// Bit string of an n-bit word, bit 0 first ("100" is the element 1 for n = 3).
std::string bit_string(Bits x, int n);
Bits parse_bit_string(std::string_view s);

/// Reads a primitive polynomial table: one polynomial per line, low-to-high
/// binary coefficients; blank lines and '#' comments are skipped.
/// Returns degree -> polynomial.
std::map<int, Bits> read_polynomial_table(std::istream &in);

/// Field element bound to its field; arithmetic between elements of different
/// fields throws Error(FieldMismatch).
class FieldElement {
   public:
    FieldElement(Field field, Bits bits);

    Bits bits() const noexcept { return bits_; }
    const Field &field() const noexcept { return field_; }
    bool is_zero() const noexcept { return bits_ == 0; }
    int trace() const noexcept { return field_.trace(bits_); }
    FieldElement inverse() const;
    /// j with x = omega^j; throws for zero.
    int log() const { return field_.log(bits_); }

    friend FieldElement operator+(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator*(const FieldElement &a, const FieldElement &b);
    friend bool operator==(const FieldElement &a, const FieldElement &b);

   private:
    Field field_;
    Bits bits_;
};

}  // namespace gfw
