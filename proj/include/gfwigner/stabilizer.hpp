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

#include <random>
#include <string>
#include <vector>

#include "gfwigner/wigner.hpp"

namespace gfw {

/// Stabilizer group of a pure state: N commuting translations with signs.
class StabilizerGroup {
   public:
    /// n independent, commuting, hermitian generators such as "+XXI" or "-ZZZ".
    static StabilizerGroup from_generators(int n, const std::vector<PauliTranslation> &gens);
    static StabilizerGroup parse(const std::vector<std::string> &gens);
    /// All N members with signs; checks closure and that the signs are multiplicative.
    static StabilizerGroup from_members(int n, const std::vector<PauliTranslation> &members);

    int n() const noexcept { return n_; }
    const std::vector<PauliTranslation> &generators() const noexcept { return gens_; }
    /// N members, each +-T(x, z); the identity first.
    const std::vector<PauliTranslation> &members() const noexcept { return members_; }

    bool contains(BinaryPoint beta) const;
    /// Eigenvalue g_beta of the canonical T_beta on the state; throws InvalidArgument outside the group.
    int g(BinaryPoint beta) const;

    Matrix projector() const;
    Vector state() const;

   private:
    StabilizerGroup(int n, std::vector<PauliTranslation> gens);

    int n_ = 0;
    std::vector<PauliTranslation> gens_;
    std::vector<PauliTranslation> members_;
};

/// Largest n for which a full exact grid is materialized.
inline constexpr int kMaxStabilizerGridQubits = 10;

/// W_S(alpha) = (1/N^2) sum_{beta in S} f_beta g_beta (-1)^(alpha ^ beta), as an exact grid.
WignerGrid stabilizer_wigner(const StabilizerGroup &group, const QuantumNet &net);
/// Numerator of W_S(alpha) over N^2 for a single point; any n up to 16.
long long stabilizer_wigner_numerator(const StabilizerGroup &group, const QuantumNet &net, PhasePoint alpha);
Rational stabilizer_wigner_at(const StabilizerGroup &group, const QuantumNet &net, PhasePoint alpha);

/// A net with f_beta = g_beta on every member of the group.
QuantumNet aligned_net(const StabilizerGroup &group, const PhaseSpace &space);

/// Every stabilizer state on n <= 3 qubits (15 * 4 for n = 2).
std::vector<StabilizerGroup> all_stabilizer_groups(int n);
StabilizerGroup random_stabilizer_group(int n, std::mt19937_64 &rng);

}  // namespace gfw
