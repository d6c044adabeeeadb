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

// Reference implementations used only by the tests. They are written from the
// definitions and share no code with the library.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using u32 = std::uint32_t;

/// Schoolbook carry-less product reduced modulo poly (bit i = coefficient of x^i).
inline u32 gf_mul(u32 a, u32 b, u32 poly, int n) {
    std::uint64_t prod = 0;
    for (int i = 0; i < n; ++i)
        if ((b >> i) & 1u) prod ^= std::uint64_t{a} << i;
    for (int d = 2 * n - 2; d >= n; --d)
        if ((prod >> d) & 1u) prod ^= std::uint64_t{poly} << (d - n);
    return static_cast<u32>(prod);
}

/// x + x^2 + x^4 + ... reduced to 0 or 1.
inline int gf_trace(u32 x, u32 poly, int n) {
    u32 acc = 0, term = x;
    for (int i = 0; i < n; ++i) {
        acc ^= term;
        term = gf_mul(term, term, poly, n);
    }
    return static_cast<int>(acc);
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Matrix pauli(char c) {
    Matrix m(2, 2);
    const Complex i(0, 1);
    switch (c) {
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -i, i, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: m << 1, 0, 0, 1;
    }
    return m;
}

/// Tensor product of single-qubit Paulis, qubit 0 leftmost.
inline Matrix pauli_string(const std::string &s) {
    Matrix out = Matrix::Identity(1, 1);
    for (char c : s) out = kron(out, pauli(c));
    return out;
}

/// prod_k i^{x_k z_k} X^{x_k} Z^{z_k}, qubit 0 leftmost.
inline Matrix translation(int n, u32 x, u32 z) {
    Matrix out = Matrix::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
        Matrix f = Matrix::Identity(2, 2);
        const bool xb = (x >> k) & 1u, zb = (z >> k) & 1u;
        if (xb) f = f * pauli('X');
        if (zb) f = f * pauli('Z');
        if (xb && zb) f *= Complex(0, 1);
        out = kron(out, f);
    }
    return out;
}

inline Matrix random_density(int n, std::mt19937_64 &rng, int rank = 0) {
    std::normal_distribution<double> g;
    const Eigen::Index dim = Eigen::Index{1} << n;
    const Eigen::Index r = rank > 0 ? rank : dim;
    Matrix a(dim, r);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < r; ++j) a(i, j) = Complex(g(rng), g(rng));
    Matrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

inline Vector random_state(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vector v(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(g(rng), g(rng));
    return v.normalized();
}

inline double max_abs(const Matrix &m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
