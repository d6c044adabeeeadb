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

#include <complex>

#include "gfwigner/error.hpp"
#include "gfwigner/wigner.hpp"

namespace gfw::kernels {

namespace {

constexpr size_t kParallelThreshold = size_t{1} << 12;

template <class T>
void wht_serial(T *v, size_t len) {
    for (size_t h = 1; h < len; h <<= 1)
        for (size_t i = 0; i < len; i += 2 * h)
            for (size_t j = i; j < i + h; ++j) {
                const T a = v[j];
                const T b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
}

template <class T>
void wht_parallel(T *v, size_t len) {
    if (len < kParallelThreshold) {
        wht_serial(v, len);
        return;
    }
    const long long half = static_cast<long long>(len / 2);
    for (size_t h = 1; h < len; h <<= 1) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < half; ++i) {
            const size_t u = static_cast<size_t>(i);
            const size_t j = (u / h) * 2 * h + u % h;
            const T a = v[j];
            const T b = v[j + h];
            v[j] = a + b;
            v[j + h] = a - b;
        }
    }
}

void require_power_of_two(size_t len) {
    if (len == 0 || (len & (len - 1)) != 0)
        throw Error(ErrorCode::DimensionMismatch, "transform length must be a power of two");
}

// i^k for k mod 4.
Complex i_pow(int k) {
    switch (k & 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

}  // namespace

void walsh_hadamard(std::vector<double> &v) {
    require_power_of_two(v.size());
    wht_parallel(v.data(), v.size());
}

void walsh_hadamard_serial(std::vector<double> &v) {
    require_power_of_two(v.size());
    wht_serial(v.data(), v.size());
}

void walsh_hadamard(std::vector<long long> &v) {
    require_power_of_two(v.size());
    wht_parallel(v.data(), v.size());
}

std::vector<double> translation_expectations(const Matrix &rho, int n) {
    require_dense(n, "translation expectations");
    const Bits N = Bits{1} << n;
    if (rho.rows() != N || rho.cols() != N) throw Error(ErrorCode::DimensionMismatch, "density matrix size differs from 2^n");
    std::vector<Bits> idx(N);
    for (Bits k = 0; k < N; ++k) idx[k] = qubits_to_index(k, n);
    std::vector<double> c(static_cast<size_t>(N) * N);
    // Tr(rho X^x Z^z) = sum_k (-1)^(z.k) rho(k, k ^ x): one transform over k per x.
#pragma omp parallel for schedule(static)
    for (long long xs = 0; xs < static_cast<long long>(N); ++xs) {
        const Bits x = static_cast<Bits>(xs);
        std::vector<Complex> g(N);
        for (Bits k = 0; k < N; ++k) g[k] = rho(idx[k], idx[k ^ x]);
        wht_serial(g.data(), g.size());
        for (Bits z = 0; z < N; ++z) c[(static_cast<size_t>(x) << n) | z] = (i_pow(popcount(x & z)) * g[z]).real();
    }
    return c;
}

std::vector<double> translation_expectations_serial(const Matrix &rho, int n) {
    require_dense(n, "translation expectations");
    const Bits N = Bits{1} << n;
    if (rho.rows() != N || rho.cols() != N) throw Error(ErrorCode::DimensionMismatch, "density matrix size differs from 2^n");
    std::vector<double> c(static_cast<size_t>(N) * N);
    for (Bits x = 0; x < N; ++x)
        for (Bits z = 0; z < N; ++z) {
            const Matrix t = PauliTranslation::canonical(n, x, z).to_matrix();
            c[(static_cast<size_t>(x) << n) | z] = rho.cwiseProduct(t.transpose()).sum().real();
        }
    return c;
}

std::vector<double> wigner_from_expectations(const std::vector<double> &c, const QuantumNet &net) {
    const int n = net.n();
    const Bits N = Bits{1} << n;
    const size_t total = static_cast<size_t>(N) * N;
    if (c.size() != total) throw Error(ErrorCode::DimensionMismatch, "expectation table size differs from N^2");
    // alpha ^ beta = parity((q_a, p_a) . (p_b, q_b)), so place beta at the swapped index.
    std::vector<double> h(total);
#pragma omp parallel for schedule(static)
    for (long long qs = 0; qs < static_cast<long long>(N); ++qs) {
        const Bits q = static_cast<Bits>(qs);
        for (Bits p = 0; p < N; ++p)
            h[(static_cast<size_t>(p) << n) | q] = net.f({q, p}) * c[(static_cast<size_t>(q) << n) | p];
    }
    wht_parallel(h.data(), h.size());
    const PhaseSpace &space = net.space();
    const double scale = 1.0 / static_cast<double>(total);
    std::vector<double> w(total);
    for (Bits q = 0; q < N; ++q)
        for (Bits pb = 0; pb < N; ++pb)
            w[static_cast<size_t>(q) * N + space.momentum_from_bits(pb)] = h[(static_cast<size_t>(q) << n) | pb] * scale;
    return w;
}

std::vector<double> expectations_from_wigner(const WignerGrid &grid, const QuantumNet &net) {
    const int n = net.n();
    if (grid.n() != n) throw Error(ErrorCode::DimensionMismatch, "grid and net sizes differ");
    const Bits N = Bits{1} << n;
    const size_t total = static_cast<size_t>(N) * N;
    const PhaseSpace &space = net.space();
    std::vector<double> h(total);
    for (Bits q = 0; q < N; ++q)
        for (Bits pb = 0; pb < N; ++pb) h[(static_cast<size_t>(q) << n) | pb] = grid.at(q, space.momentum_from_bits(pb));
    wht_parallel(h.data(), h.size());
    std::vector<double> c(total);
    for (Bits x = 0; x < N; ++x)
        for (Bits z = 0; z < N; ++z)
            c[(static_cast<size_t>(x) << n) | z] = net.f({x, z}) * h[(static_cast<size_t>(z) << n) | x];
    return c;
}

Matrix density_from_expectations(const std::vector<double> &c, int n) {
    require_dense(n, "density reconstruction");
    const Bits N = Bits{1} << n;
    if (c.size() != static_cast<size_t>(N) * N) throw Error(ErrorCode::DimensionMismatch, "expectation table size differs from N^2");
    std::vector<Bits> idx(N);
    for (Bits k = 0; k < N; ++k) idx[k] = qubits_to_index(k, n);
    Matrix rho = Matrix::Zero(N, N);
    const double scale = 1.0 / static_cast<double>(N);
#pragma omp parallel for schedule(static)
    for (long long xs = 0; xs < static_cast<long long>(N); ++xs) {
        const Bits x = static_cast<Bits>(xs);
        std::vector<Complex> u(N);
        for (Bits z = 0; z < N; ++z) u[z] = i_pow(popcount(x & z)) * c[(static_cast<size_t>(x) << n) | z];
        wht_serial(u.data(), u.size());
        for (Bits k = 0; k < N; ++k) rho(idx[k ^ x], idx[k]) = u[k] * scale;
    }
    return rho;
}

}  // namespace gfw::kernels
