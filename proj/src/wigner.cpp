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

#include "gfwigner/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "gfwigner/error.hpp"

namespace gfw {

// ---------------------------------------------------------------------------
// Rational

Rational Rational::reduced(long long num, long long den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string &text) {
    try {
        const auto slash = text.find('/');
        size_t used = 0;
        if (slash == std::string::npos) {
            const long long v = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, 1};
        }
        const std::string a = text.substr(0, slash);
        const std::string b = text.substr(slash + 1);
        size_t used_b = 0;
        const long long num = std::stoll(a, &used);
        const long long den = std::stoll(b, &used_b);
        if (used != a.size() || used_b != b.size()) throw std::invalid_argument(text);
        return reduced(num, den);
    } catch (const std::logic_error &) {
        throw Error(ErrorCode::ParseError, "not a fraction: '" + text + "'");
    }
}

std::string provenance_name(Provenance p) { return p == Provenance::Dense ? "dense" : "stabilizer-exact"; }

// ---------------------------------------------------------------------------
// WignerGrid

WignerGrid::WignerGrid(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(size()) * size())
        throw Error(ErrorCode::DimensionMismatch, "grid needs N^2 values");
}

WignerGrid WignerGrid::exact(int n, std::vector<long long> numerators) {
    const Bits N = Bits{1} << n;
    if (numerators.size() != static_cast<size_t>(N) * N) throw Error(ErrorCode::DimensionMismatch, "grid needs N^2 values");
    const double den = static_cast<double>(N) * N;
    std::vector<double> values(numerators.size());
    std::transform(numerators.begin(), numerators.end(), values.begin(),
                   [den](long long v) { return static_cast<double>(v) / den; });
    WignerGrid g(n, std::move(values));
    g.provenance_ = Provenance::StabilizerExact;
    g.numerators_ = std::move(numerators);
    return g;
}

Rational WignerGrid::exact_at(Bits q, Bits p) const {
    if (!is_exact()) throw Error(ErrorCode::InvalidArgument, "grid has no exact values");
    return Rational::reduced(numerator(q, p), denominator());
}

double WignerGrid::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double WignerGrid::min() const { return *std::min_element(values_.begin(), values_.end()); }

double WignerGrid::line_sum(const PhaseSpace &space, const Line &line) const {
    double s = 0;
    for (const PhasePoint &pt : space.points_on(line)) s += at(pt);
    return s;
}

WignerGrid WignerGrid::translated(PhasePoint d) const {
    const Bits N = size();
    WignerGrid out = *this;
    for (Bits q = 0; q < N; ++q)
        for (Bits p = 0; p < N; ++p) {
            const size_t from = static_cast<size_t>(q ^ d.q) * N + (p ^ d.p);
            const size_t to = static_cast<size_t>(q) * N + p;
            out.values_[to] = values_[from];
            if (is_exact()) out.numerators_[to] = numerators_[from];
        }
    return out;
}

double WignerGrid::overlap(const WignerGrid &other) const {
    if (other.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "grid sizes differ");
    return std::inner_product(values_.begin(), values_.end(), other.values_.begin(), 0.0);
}

std::optional<WignerGrid> rationalize(const WignerGrid &grid, double tol) {
    if (grid.is_exact()) return grid;
    const double den = static_cast<double>(grid.denominator());
    std::vector<long long> num(grid.values().size());
    for (size_t i = 0; i < num.size(); ++i) {
        const double scaled = grid.values()[i] * den;
        const double r = std::round(scaled);
        if (std::abs(scaled - r) > tol * den) return std::nullopt;
        num[i] = static_cast<long long>(r);
    }
    return WignerGrid::exact(grid.n(), std::move(num));
}

// ---------------------------------------------------------------------------
// Density matrices and point operators

void validate_density_matrix(const Matrix &rho, int n) {
    require_dense(n, "density matrix");
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (rho.rows() != dim || rho.cols() != dim)
        throw Error(ErrorCode::InvalidDensityMatrix, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    if (!rho.allFinite()) throw Error(ErrorCode::InvalidDensityMatrix, "non-finite entries");
    if (max_abs_diff(rho, rho.adjoint()) > 1e-10) throw Error(ErrorCode::InvalidDensityMatrix, "not hermitian");
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10) throw Error(ErrorCode::InvalidDensityMatrix, "trace is not 1");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(rho, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-10) throw Error(ErrorCode::InvalidDensityMatrix, "negative eigenvalue");
}

Matrix point_operator_origin(const QuantumNet &net) {
    const PhaseSpace &space = net.space();
    require_dense(space.n(), "point operator");
    const Eigen::Index dim = space.size();
    Matrix sum = -Matrix::Identity(dim, dim);
    for (int s = 0; s < space.num_striations(); ++s) {
        const StriationLabel label = space.striation_label(s);
        sum += ray_projector(ray_generators(space, label), net.signs(label));
    }
    return sum / static_cast<double>(dim);
}

PointOperators::PointOperators(const QuantumNet &net) : net_(net), a0_(point_operator_origin(net)) {}

Matrix PointOperators::at(PhasePoint alpha) const {
    return PauliTranslation::canonical(net_.n(), net_.space().to_binary(alpha)).conjugate(a0_);
}

std::vector<Matrix> PointOperators::all() const {
    const Bits N = net_.space().size();
    std::vector<Matrix> out(static_cast<size_t>(N) * N);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(out.size()); ++i)
        out[i] = at({static_cast<Bits>(i / N), static_cast<Bits>(i % N)});
    return out;
}

Matrix point_operator(const QuantumNet &net, PhasePoint alpha) { return PointOperators(net).at(alpha); }

Matrix point_operator_from_translations(const QuantumNet &net, PhasePoint alpha) {
    const PhaseSpace &space = net.space();
    const int n = space.n();
    require_dense(n, "point operator");
    const Bits N = space.size();
    const BinaryPoint a = space.to_binary(alpha);
    Matrix out = Matrix::Zero(N, N);
    for (Bits x = 0; x < N; ++x)
        for (Bits z = 0; z < N; ++z) {
            const BinaryPoint b{x, z};
            const int sign = net.f(b) * (wedge(a, b) ? -1 : 1);
            out += static_cast<double>(sign) * PauliTranslation::canonical(n, b).to_matrix();
        }
    return out / (static_cast<double>(N) * N);
}

// ---------------------------------------------------------------------------
// Wigner functions

WignerGrid wigner_of(const Matrix &rho, const QuantumNet &net) {
    validate_density_matrix(rho, net.n());
    return {net.n(), kernels::wigner_from_expectations(kernels::translation_expectations(rho, net.n()), net)};
}

WignerGrid wigner_of_reference(const Matrix &rho, const QuantumNet &net) {
    validate_density_matrix(rho, net.n());
    const PointOperators ops(net);
    const Bits N = net.space().size();
    std::vector<double> w(static_cast<size_t>(N) * N);
    for (Bits q = 0; q < N; ++q)
        for (Bits p = 0; p < N; ++p) w[static_cast<size_t>(q) * N + p] = (rho * ops.at({q, p})).trace().real();
    return {net.n(), std::move(w)};
}

WignerGrid wigner_of_state(const Vector &psi, const QuantumNet &net) {
    const double norm = psi.norm();
    if (norm < 1e-12) throw Error(ErrorCode::InvalidDensityMatrix, "zero state vector");
    const Vector v = psi / norm;
    return wigner_of(v * v.adjoint(), net);
}

Matrix reconstruct(const WignerGrid &grid, const QuantumNet &net) {
    return kernels::density_from_expectations(kernels::expectations_from_wigner(grid, net), net.n());
}

Matrix reconstruct_reference(const WignerGrid &grid, const QuantumNet &net) {
    if (grid.n() != net.n()) throw Error(ErrorCode::DimensionMismatch, "grid and net sizes differ");
    const PointOperators ops(net);
    const Bits N = net.space().size();
    Matrix rho = Matrix::Zero(N, N);
    for (Bits q = 0; q < N; ++q)
        for (Bits p = 0; p < N; ++p) rho += grid.at(q, p) * ops.at({q, p});
    return rho * static_cast<double>(N);
}

double expectation_translation(const WignerGrid &grid, const QuantumNet &net, BinaryPoint beta) {
    if (beta.is_origin()) return 1.0;
    const PhaseSpace &space = net.space();
    const Bits N = space.size();
    double s = 0;
    for (Bits q = 0; q < N; ++q)
        for (Bits p = 0; p < N; ++p) {
            const double w = grid.at(q, p);
            s += wedge(space.to_binary({q, p}), beta) ? -w : w;
        }
    return net.f(beta) * s;
}

PurityCheck purity_identity_check(const WignerGrid &grid, const PhaseSpace &space, BinaryPoint alpha) {
    const Bits N = space.size();
    const PhasePoint a = space.from_binary(alpha);
    double transform = 0;
    double correlation = 0;
    for (Bits q = 0; q < N; ++q)
        for (Bits p = 0; p < N; ++p) {
            const double w = grid.at(q, p);
            transform += wedge(alpha, space.to_binary({q, p})) ? -w : w;
            correlation += w * grid.at(q ^ a.q, p ^ a.p);
        }
    PurityCheck out;
    out.lhs = transform * transform;
    out.correlation = correlation;
    out.rhs = static_cast<double>(N) * correlation;
    return out;
}

Complex triple_product(const PointOperators &ops, PhasePoint alpha, PhasePoint beta, PhasePoint gamma) {
    if (ops.net().n() > 4) throw Error(ErrorCode::DimensionTooLarge, "triple product supports n <= 4");
    return (ops.at(alpha) * ops.at(beta) * ops.at(gamma)).trace();
}

Matrix translation_from_A(const PointOperators &ops, BinaryPoint beta) {
    const PhaseSpace &space = ops.net().space();
    const Bits N = space.size();
    Matrix out = Matrix::Zero(N, N);
    for (Bits q = 0; q < N; ++q)
        for (Bits p = 0; p < N; ++p) {
            const double sign = wedge(space.to_binary({q, p}), beta) ? -1.0 : 1.0;
            out += sign * ops.at({q, p});
        }
    return static_cast<double>(ops.net().f(beta)) * out;
}

}  // namespace gfw
