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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfwigner/dense.hpp"
#include "gfwigner/net.hpp"

namespace gfw {

/// num/den in lowest terms with den > 0.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational reduced(long long num, long long den);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
    /// Accepts "3/16", "-1", "0".
    static Rational parse(const std::string &text);
    bool operator==(const Rational &) const = default;
};

enum class Provenance { Dense, StabilizerExact };

std::string provenance_name(Provenance p);

/// W(q, p) on the N x N grid. Storage index is q * N + p with q, p the field bits.
class WignerGrid {
   public:
    WignerGrid() = default;
    WignerGrid(int n, std::vector<double> values);
    /// Exact grid: W = numerators / N^2.
    static WignerGrid exact(int n, std::vector<long long> numerators);

    int n() const noexcept { return n_; }
    Bits size() const noexcept { return Bits{1} << n_; }
    Provenance provenance() const noexcept { return provenance_; }
    bool is_exact() const noexcept { return provenance_ == Provenance::StabilizerExact; }

    double at(Bits q, Bits p) const { return values_[static_cast<size_t>(q) * size() + p]; }
    double at(PhasePoint a) const { return at(a.q, a.p); }
    /// Exact value; only for exact grids.
    Rational exact_at(Bits q, Bits p) const;
    long long numerator(Bits q, Bits p) const { return numerators_[static_cast<size_t>(q) * size() + p]; }
    long long denominator() const noexcept { return static_cast<long long>(size()) * size(); }

    const std::vector<double> &values() const noexcept { return values_; }
    const std::vector<long long> &numerators() const noexcept { return numerators_; }

    double sum() const;
    double min() const;
    double line_sum(const PhaseSpace &space, const Line &line) const;
    /// W'(alpha) = W(alpha - d): the grid of T_d rho T_d^dagger.
    WignerGrid translated(PhasePoint d) const;
    /// Sum over alpha of this(alpha) * other(alpha).
    double overlap(const WignerGrid &other) const;

   private:
    int n_ = 0;
    Provenance provenance_ = Provenance::Dense;
    std::vector<double> values_;
    std::vector<long long> numerators_;
};

/// Exact copy of a dense grid whose values are all multiples of 1/N^2 within tol; nullopt otherwise.
std::optional<WignerGrid> rationalize(const WignerGrid &grid, double tol = 1e-9);

/// Throws InvalidDensityMatrix unless rho is hermitian, unit trace and positive semidefinite.
void validate_density_matrix(const Matrix &rho, int n);

/// Phase-space point operators of a net, A(alpha) = T_alpha A(0) T_alpha^dagger.
class PointOperators {
   public:
    explicit PointOperators(const QuantumNet &net);

    const QuantumNet &net() const noexcept { return net_; }
    const Matrix &origin() const noexcept { return a0_; }
    Matrix at(PhasePoint alpha) const;
    /// All N^2 operators in grid storage order.
    std::vector<Matrix> all() const;

   private:
    QuantumNet net_;
    Matrix a0_;
};

/// A(0) = (1/N) (sum of ray projectors - I).
Matrix point_operator_origin(const QuantumNet &net);
Matrix point_operator(const QuantumNet &net, PhasePoint alpha);
/// A(alpha) = (1/N^2) sum_beta (-1)^(alpha ^ beta) f_beta T_beta.
Matrix point_operator_from_translations(const QuantumNet &net, PhasePoint alpha);

/// W(alpha) = Tr(rho A(alpha)) via the parallel transform kernel.
WignerGrid wigner_of(const Matrix &rho, const QuantumNet &net);
/// Same values from explicit point operators, serially.
WignerGrid wigner_of_reference(const Matrix &rho, const QuantumNet &net);
WignerGrid wigner_of_state(const Vector &psi, const QuantumNet &net);

/// rho = N sum_alpha W(alpha) A(alpha), via the parallel transform kernel.
Matrix reconstruct(const WignerGrid &grid, const QuantumNet &net);
Matrix reconstruct_reference(const WignerGrid &grid, const QuantumNet &net);

/// Tr(rho T_beta) = f_beta sum_alpha W(alpha) (-1)^(alpha ^ beta).
double expectation_translation(const WignerGrid &grid, const QuantumNet &net, BinaryPoint beta);

struct PurityCheck {
    double lhs = 0;         // |sum_beta W(beta) (-1)^(alpha ^ beta)|^2
    double correlation = 0; // sum_beta W(beta) W(beta + alpha)
    double rhs = 0;         // N * correlation
    bool holds(double tol = 1e-10) const { return std::abs(lhs - rhs) <= tol; }
};

/// Pure states satisfy lhs == N * sum_beta W(beta) W(beta + alpha) for every alpha.
PurityCheck purity_identity_check(const WignerGrid &grid, const PhaseSpace &space, BinaryPoint alpha);

/// Tr(A_alpha A_beta A_gamma), n <= 4.
Complex triple_product(const PointOperators &ops, PhasePoint alpha, PhasePoint beta, PhasePoint gamma);

/// f_beta sum_alpha (-1)^(alpha ^ beta) A(alpha), which equals T_beta.
Matrix translation_from_A(const PointOperators &ops, BinaryPoint beta);

namespace kernels {

/// In-place Walsh-Hadamard transform (unnormalized); size must be a power of two.
void walsh_hadamard(std::vector<double> &v);
void walsh_hadamard_serial(std::vector<double> &v);
void walsh_hadamard(std::vector<long long> &v);

/// c[(x << n) | z] = Tr(rho T(x, z)).
std::vector<double> translation_expectations(const Matrix &rho, int n);
/// Same values, one dense trace per translation.
std::vector<double> translation_expectations_serial(const Matrix &rho, int n);

/// Wigner values in grid storage order from the expectations c.
std::vector<double> wigner_from_expectations(const std::vector<double> &c, const QuantumNet &net);
/// Inverse map: c from a grid.
std::vector<double> expectations_from_wigner(const WignerGrid &grid, const QuantumNet &net);
/// rho = (1/N) sum_beta c_beta T_beta.
Matrix density_from_expectations(const std::vector<double> &c, int n);

}  // namespace kernels

}  // namespace gfw
