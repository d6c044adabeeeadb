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

std::string bell_name(BellState s) {
    switch (s) {
        case BellState::PhiPlus: return "phi_plus";
        case BellState::PhiMinus: return "phi_minus";
        case BellState::PsiPlus: return "psi_plus";
        case BellState::PsiMinus: return "psi_minus";
    }
    return "?";
}

StabilizerGroup bell_group(BellState s) {
    switch (s) {
        case BellState::PhiPlus: return StabilizerGroup::parse({"+XX", "+ZZ"});
        case BellState::PhiMinus: return StabilizerGroup::parse({"-XX", "+ZZ"});
        case BellState::PsiPlus: return StabilizerGroup::parse({"+XX", "-ZZ"});
        case BellState::PsiMinus: return StabilizerGroup::parse({"-XX", "-ZZ"});
    }
    throw Error(ErrorCode::InvalidArgument, "unknown Bell state");
}

namespace {

// Field bits of w^2 = 1 + w for x^2 + x + 1.
constexpr Bits kOmega2 = 0b11;

bool in_a(Bits x) { return x == 0 || x == kOmega2; }

}  // namespace

std::optional<BellParameters> bell_parameters(const WignerGrid &grid) {
    if (grid.n() != 2) throw Error(ErrorCode::DimensionMismatch, "Bell parameters need n = 2");
    const std::optional<WignerGrid> exact = rationalize(grid);
    if (!exact) return std::nullopt;
    std::array<std::optional<long long>, 4> block;
    for (Bits q = 0; q < 4; ++q)
        for (Bits p = 0; p < 4; ++p) {
            const int idx = (in_a(q) ? 0 : 2) + (in_a(p) ? 0 : 1);
            const long long v = exact->numerator(q, p);
            if (block[idx] && *block[idx] != v) return std::nullopt;
            block[idx] = v;
        }
    const long long den = exact->denominator();
    // Index 1 is (q in A, p in B) = b, index 2 is (q in B, p in A) = c.
    return BellParameters{Rational::reduced(*block[0], den), Rational::reduced(*block[1], den),
                          Rational::reduced(*block[2], den), Rational::reduced(*block[3], den)};
}

BellPattern classify_bell(const std::optional<BellParameters> &params) {
    if (!params) return BellPattern::Other;
    const BellParameters concentrated{{1, 4}, {0, 1}, {0, 1}, {0, 1}};
    const BellParameters spread{{1, 8}, {1, 8}, {1, 8}, {-1, 8}};
    if (*params == concentrated) return BellPattern::Concentrated;
    if (*params == spread) return BellPattern::Spread;
    return BellPattern::Other;
}

std::string bell_pattern_name(BellPattern p) {
    switch (p) {
        case BellPattern::Concentrated: return "{a=1/4, b=c=d=0}";
        case BellPattern::Spread: return "{a=b=c=1/8, d=-1/8}";
        case BellPattern::Other: return "other";
    }
    return "?";
}

std::vector<QuantumNet> bell_nets(const PhaseSpace &space) {
    if (space.n() != 2) throw Error(ErrorCode::DimensionMismatch, "Bell nets need n = 2");
    std::vector<QuantumNet> nets;
    for (SignMask d0 = 0; d0 < 4; ++d0)
        for (SignMask d1 = 0; d1 < 4; ++d1)
            for (SignMask d2 = 0; d2 < 4; ++d2) nets.push_back(QuantumNet::independent(space, {0, 0, d0, d1, d2}));
    return nets;
}

std::vector<BellNetSolution> bell_wigner_solutions(BellState state) {
    const PhaseSpace space{Field(2)};
    const StabilizerGroup group = bell_group(state);
    const Matrix rho = group.projector();
    std::vector<BellNetSolution> out;
    for (const QuantumNet &net : bell_nets(space)) {
        BellNetSolution s{net, stabilizer_wigner(group, net), 0.0, std::nullopt, BellPattern::Other};
        const WignerGrid dense = wigner_of(rho, net);
        for (size_t i = 0; i < dense.values().size(); ++i)
            s.dense_mismatch = std::max(s.dense_mismatch, std::abs(dense.values()[i] - s.grid.values()[i]));
        s.params = bell_parameters(s.grid);
        s.pattern = classify_bell(s.params);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace gfw
