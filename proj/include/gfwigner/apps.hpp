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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gfwigner/stabilizer.hpp"

namespace gfw {

// ---------------------------------------------------------------------------
// Bell states (n = 2)

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string bell_name(BellState s);
/// Phi+ is stabilized by +XX and +ZZ; the others differ by X0, Z0 or both.
StabilizerGroup bell_group(BellState s);

/// Grid constant on the four blocks q, p in {0, w^2} or {1, w}:
/// a = (A, A), b = (A, B), c = (B, A), d = (B, B) with A = {0, w^2}, B = {1, w}.
struct BellParameters {
    Rational a, b, c, d;
    bool operator==(const BellParameters &) const = default;
};
std::optional<BellParameters> bell_parameters(const WignerGrid &grid);

enum class BellPattern { Concentrated, Spread, Other };  // {1/4,0,0,0}, {1/8,1/8,1/8,-1/8}
BellPattern classify_bell(const std::optional<BellParameters> &params);
std::string bell_pattern_name(BellPattern p);

/// The 64 nets with h and v at +1 and every sign choice on the three diagonal rays.
std::vector<QuantumNet> bell_nets(const PhaseSpace &space);

struct BellNetSolution {
    QuantumNet net;
    WignerGrid grid;  // exact
    double dense_mismatch = 0;
    std::optional<BellParameters> params;
    BellPattern pattern = BellPattern::Other;
};
std::vector<BellNetSolution> bell_wigner_solutions(BellState state = BellState::PhiPlus);

// ---------------------------------------------------------------------------
// Three-qubit phase-error code (n = 3)

/// Covariant net with +1 on h and v and Z1|lambda_0> on the main diagonal.
QuantumNet qec_net(const PhaseSpace &space);
/// |0_L> (+XXI, +IXX, +ZZZ) or |1_L> = X0 |0_L>.
StabilizerGroup qec_logical_group(int bit);
Vector code_state(Complex alpha, Complex beta);
WignerGrid code_wigner(Complex alpha, Complex beta, const QuantumNet &net);

/// Parameter a..h (0..7) of the symmetric logical-state grid at a point.
int qec_parameter_index(const PhaseSpace &space, PhasePoint point);
using CodeParameters = std::array<Rational, 8>;
std::optional<CodeParameters> code_parameters(const WignerGrid &grid, const PhaseSpace &space);
std::string format_code_parameters(const CodeParameters &p);

/// All parameter sets on the lattice (1/resolution) Z meeting the eigenvalue, orthogonality,
/// purity and line-positivity conditions with b = 1/8 - a, d = -c, f = -e, h = -g.
std::vector<CodeParameters> code_solution_family(int resolution = 64);
/// Solutions realized by |0_L> under some covariant net (h, v at +1; any main-diagonal signs).
std::vector<CodeParameters> covariant_code_solutions();

/// The printed closed forms f1..f4 for alpha|0_L> + beta|1_L>.
std::array<double, 4> code_f(Complex alpha, Complex beta);

// ---------------------------------------------------------------------------
// Mean king (n = 2)

/// Covariant net with +1 on h and v and (+, -) on the main diagonal.
QuantumNet meanking_net(const PhaseSpace &space);

struct KingLines {
    Line v1, v2, h1, h2, d1, d2;
};
KingLines king_lines(const PhaseSpace &space);

struct KingSolution {
    QuantumNet net;
    KingLines lines;
    std::array<Vector, 4> basis;  // phi1, Z0Z1 phi1, Y0Y1 phi1, X0X1 phi1
    WignerGrid grid;              // of phi1
};
KingSolution mean_king_solve();

/// Four diagonal values (q = p) and six mirror pairs, each in axis order.
struct KingParameters {
    std::array<Rational, 4> diagonal;
    std::array<Rational, 6> off_diagonal;
    bool symmetric = false;
};
KingParameters king_parameters(const WignerGrid &grid, const PhaseSpace &space);

struct RetrodictionEntry {
    char observable;      // 'X', 'Y' or 'Z' on qubit 0
    int physicist_result; // 1..4
    int king_outcome;     // +1, -1, or 0 when the result cannot occur
};
struct KingReport {
    std::vector<RetrodictionEntry> table;
    double success_probability = 0;
};
/// Exhaustive retrodiction over observables, king outcomes and basis results.
/// Throws AmbiguousInference when a result is consistent with both king outcomes.
KingReport mean_king_simulate(const std::array<Vector, 4> &basis);

}  // namespace gfw
