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

#include <benchmark/benchmark.h>

#include <random>

#include "gfwigner/net.hpp"
#include "gfwigner/wigner.hpp"

namespace {

using namespace gfw;

Matrix random_density(int n) {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> g;
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
    Matrix rho = a * a.adjoint();
    return rho / rho.trace();
}

std::vector<double> random_vector(size_t len) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> v(len);
    for (double &x : v) x = u(rng);
    return v;
}

void BM_WalshHadamardSerial(benchmark::State &state) {
    const auto base = random_vector(size_t{1} << state.range(0));
    for (auto _ : state) {
        auto v = base;
        kernels::walsh_hadamard_serial(v);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_WalshHadamardParallel(benchmark::State &state) {
    const auto base = random_vector(size_t{1} << state.range(0));
    for (auto _ : state) {
        auto v = base;
        kernels::walsh_hadamard(v);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_ExpectationsSerial(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix rho = random_density(n);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::translation_expectations_serial(rho, n));
}

void BM_ExpectationsParallel(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix rho = random_density(n);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::translation_expectations(rho, n));
}

void BM_WignerReference(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const PhaseSpace space{Field(n)};
    const QuantumNet net = QuantumNet::all_plus(space);
    const Matrix rho = random_density(n);
    for (auto _ : state) benchmark::DoNotOptimize(wigner_of_reference(rho, net));
}

void BM_WignerKernel(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const PhaseSpace space{Field(n)};
    const QuantumNet net = QuantumNet::all_plus(space);
    const Matrix rho = random_density(n);
    for (auto _ : state) benchmark::DoNotOptimize(wigner_of(rho, net));
}

}  // namespace

BENCHMARK(BM_WalshHadamardSerial)->DenseRange(12, 20, 4);
BENCHMARK(BM_WalshHadamardParallel)->DenseRange(12, 20, 4);
BENCHMARK(BM_ExpectationsSerial)->DenseRange(2, 5);
BENCHMARK(BM_ExpectationsParallel)->DenseRange(2, 5);
BENCHMARK(BM_WignerReference)->DenseRange(2, 4);
BENCHMARK(BM_WignerKernel)->DenseRange(2, 4);

BENCHMARK_MAIN();
