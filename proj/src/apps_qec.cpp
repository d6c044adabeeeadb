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

#include <algorithm>
#include <cmath>

#include "gfwigner/apps.hpp"
#include "gfwigner/error.hpp"

namespace gfw {

QuantumNet qec_net(const PhaseSpace &space) {
    if (space.n() != 3) throw Error(ErrorCode::DimensionMismatch, "the code net needs n = 3");
    // Z1 |lambda_0> flips the eigenvalue of every main-diagonal generator that anticommutes with Z1.
    const PauliTranslation z1 = PauliTranslation::parse("IZI");
    const RayGenerators g = ray_generators(space, StriationLabel::diagonal(0));
    SignMask zero = 0;
    for (int k = 0; k < space.n(); ++k)
        if (!commutes(z1, g.gens[k])) zero |= SignMask{1} << k;
    return QuantumNet::covariant(space, 0, 0, zero);
}

StabilizerGroup qec_logical_group(int bit) {
    if (bit != 0 && bit != 1) throw Error(ErrorCode::InvalidArgument, "logical bit must be 0 or 1");
    return StabilizerGroup::parse({"+XXI", "+IXX", bit == 0 ? "+ZZZ" : "-ZZZ"});
}

Vector code_state(Complex alpha, Complex beta) {
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (norm < 1e-12) throw Error(ErrorCode::InvalidArgument, "logical amplitudes are both zero");
    const Vector zero = qec_logical_group(0).state();
    const Vector one = PauliTranslation::parse("XII").apply(zero);
    return (alpha / norm) * zero + (beta / norm) * one;
}

WignerGrid code_wigner(Complex alpha, Complex beta, const QuantumNet &net) {
    if (net.n() != 3) throw Error(ErrorCode::DimensionMismatch, "code states live on n = 3");
    return wigner_of_state(code_state(alpha, beta), net);
}

int qec_parameter_index(const PhaseSpace &space, PhasePoint point) {
    const Bits pb = space.to_binary(point).p;
    // Momentum parities flipped by Z0 (X0X1) and Z2 (X1X2), then the column class.
    const int s1 = parity(pb & 0b011);
    const int s2 = parity(pb & 0b110);
    const int col = parity(point.q);
    return 4 * s1 + 2 * s2 + col;
}

std::optional<CodeParameters> code_parameters(const WignerGrid &grid, const PhaseSpace &space) {
    if (grid.n() != 3 || space.n() != 3) throw Error(ErrorCode::DimensionMismatch, "code parameters need n = 3");
    const std::optional<WignerGrid> exact = rationalize(grid);
    if (!exact) return std::nullopt;
    std::array<std::optional<long long>, 8> num;
    for (Bits q = 0; q < 8; ++q)
        for (Bits p = 0; p < 8; ++p) {
            const int idx = qec_parameter_index(space, {q, p});
            const long long v = exact->numerator(q, p);
            if (num[idx] && *num[idx] != v) return std::nullopt;
            num[idx] = v;
        }
    CodeParameters out;
    for (int i = 0; i < 8; ++i) out[i] = Rational::reduced(*num[i], exact->denominator());
    return out;
}

std::string format_code_parameters(const CodeParameters &p) {
    std::string s;
    for (int i = 0; i < 8; ++i) s += (i ? " " : "") + std::string(1, static_cast<char>('a' + i)) + "=" + p[i].to_string();
    return s;
}

std::vector<CodeParameters> code_solution_family(int resolution) {
    const long long R = resolution;
    if (R <= 0 || R % 8 != 0) throw Error(ErrorCode::InvalidArgument, "resolution must be a positive multiple of 8");
    const PhaseSpace space{Field(3)};
    // Parameter multiplicities along every line.
    std::vector<std::array<int, 8>> line_counts;
    for (const Striation &st : space.all_striations())
        for (const Line &l : st.lines) {
            std::array<int, 8> counts{};
            for (const PhasePoint &pt : space.points_on(l)) ++counts[qec_parameter_index(space, pt)];
            line_counts.push_back(counts);
        }
    const long long bound = R / 8;
    std::vector<CodeParameters> out;
    for (long long A = 0; A <= bound; ++A)
        for (long long C = -bound; C <= bound; ++C)
            for (long long E = -bound; E <= bound; ++E)
                for (long long G = -bound; G <= bound; ++G) {
                    const std::array<long long, 8> x{A, R / 8 - A, C, -C, E, -E, G, -G};
                    const auto [a, b, c, d, e, f, g, h] = x;
                    // Eigenvalue conditions of |0_L> (8 times each side).
                    if (8 * (a + b + c + d + e + f + g + h) != R) continue;
                    if (8 * (a + b + c + d - e - f - g - h) != R) continue;
                    if (8 * (a + b - c - d + e + f - g - h) != R) continue;
                    if (8 * (a - b + c - d + e - f + g - h) != R) continue;
                    // Orthogonality to the Z-error translates.
                    if (a * e + b * f + c * g + d * h != 0) continue;
                    if (a * c + b * d + e * g + f * h != 0) continue;
                    if (a * g + b * h + c * e + d * f != 0) continue;
                    // Purity: sum of squares = 1/64.
                    long long sq = 0;
                    for (long long v : x) sq += v * v;
                    if (64 * sq != R * R) continue;
                    bool positive = true;
                    for (const auto &counts : line_counts) {
                        long long s = 0;
                        for (int i = 0; i < 8; ++i) s += counts[i] * x[i];
                        if (s < 0) {
                            positive = false;
                            break;
                        }
                    }
                    if (!positive) continue;
                    CodeParameters p;
                    for (int i = 0; i < 8; ++i) p[i] = Rational::reduced(x[i], R);
                    out.push_back(p);
                }
    return out;
}

std::vector<CodeParameters> covariant_code_solutions() {
    const PhaseSpace space{Field(3)};
    const StabilizerGroup zero = qec_logical_group(0);
    std::vector<CodeParameters> out;
    for (SignMask diag = 0; diag < 8; ++diag) {
        const QuantumNet net = QuantumNet::covariant(space, 0, 0, diag);
        const std::optional<CodeParameters> p = code_parameters(stabilizer_wigner(zero, net), space);
        if (!p) throw Error(ErrorCode::InvalidArgument, "logical state grid lacks the code symmetries");
        if (std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
    }
    return out;
}

std::array<double, 4> code_f(Complex alpha, Complex beta) {
    const Complex i(0, 1);
    const double aa = std::norm(alpha);
    const double bb = std::norm(beta);
    const Complex ab = alpha * std::conj(beta);
    const Complex ba = std::conj(alpha) * beta;
    return {((aa + 3 * bb) + (2.0 + i) * ab + (2.0 - i) * ba).real() / 32,
            ((aa - bb) + i * (ab - ba)).real() / 32,
            ((aa - bb) - i * (ab - ba)).real() / 32,
            ((aa + 3 * bb) - (2.0 + i) * ab - (2.0 - i) * ba).real() / 32};
}

}  // namespace gfw
