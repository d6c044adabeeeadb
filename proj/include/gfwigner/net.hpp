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

// Quantum nets: which eigenstate of each ray's commuting class is attached to
// the ray. Every other line gets the translated ray state.

#include <optional>
#include <string>
#include <vector>

#include "gfwigner/dense.hpp"
#include "gfwigner/pauli.hpp"
#include "gfwigner/phasespace.hpp"

namespace gfw {

/// Eigenvalue choice for a ray's n generators: bit k set means G_k has eigenvalue -1.
using SignMask = Bits;

struct RayGenerators {
    StriationLabel label;
    std::vector<PhasePoint> points;
    std::vector<PauliTranslation> gens;
};

RayGenerators ray_generators(const PhaseSpace &space, StriationLabel label);

/// (1/2^n) prod_k (I + eps_k G_k). Dense; n <= kMaxDenseQubits.
Matrix ray_projector(const RayGenerators &gens, SignMask signs);

/// Eigenvalue of T(beta) on the ray state selected by `signs`, for beta on that ray.
/// Computed symbolically from the generator decomposition of beta.
int ray_eigenvalue(const PhaseSpace &space, StriationLabel label, SignMask signs, BinaryPoint beta);

// --- squeezing circuit ---------------------------------------------------

struct Gate {
    enum class Kind { Swap, Cnot };
    Kind kind;
    int a;  // control for CNOT
    int b;  // target for CNOT
    std::string to_string() const;
};

/// The unitary for (q, p) -> (w q, w^-1 p): a chain of swaps that rotates the
/// qubits followed by CNOTs from qubit 0 onto every qubit j with r_j = 1.
class SqueezeCircuit {
   public:
    explicit SqueezeCircuit(const Field &field);

    const std::vector<Gate> &gates() const noexcept { return gates_; }  // application order
    int n() const noexcept { return n_; }
    /// Exact U T U^dagger, propagated gate by gate.
    PauliTranslation conjugate(const PauliTranslation &t) const;
    /// Dense permutation matrix; n <= kMaxDenseQubits.
    Matrix matrix() const;
    std::string describe() const;

   private:
    int n_;
    std::vector<Gate> gates_;
};

// --- nets -------------------------------------------------------------------

enum class NetMode { Independent, Covariant };

class QuantumNet {
   public:
    /// One sign mask per striation, in striation order (h, v, 0, 1, ...).
    static QuantumNet independent(const PhaseSpace &space, std::vector<SignMask> signs);
    /// Free choices for h, v and the diagonal ray 0; the other diagonal rays follow
    /// from P(u lambda) = U P(lambda) U^dagger.
    static QuantumNet covariant(const PhaseSpace &space, SignMask h, SignMask v, SignMask zero);
    /// Every generator eigenvalue +1 on every ray. This is the default net.
    static QuantumNet all_plus(const PhaseSpace &space) {
        return independent(space, std::vector<SignMask>(space.num_striations(), 0));
    }
    /// Every generator eigenvalue +1 on h, v and ray 0, extended covariantly.
    static QuantumNet covariant_plus(const PhaseSpace &space) { return covariant(space, 0, 0, 0); }

    const PhaseSpace &space() const noexcept { return space_; }
    int n() const noexcept { return space_.n(); }
    NetMode mode() const noexcept { return mode_; }
    SignMask signs(StriationLabel label) const { return signs_[space_.striation_index(label)]; }
    const std::vector<SignMask> &all_signs() const noexcept { return signs_; }

    /// f(beta) = Tr(T_beta P(ray through beta)) in {+1, -1}; f(0) = 1.
    int f(BinaryPoint beta) const;
    int f_at(PhasePoint beta) const { return f(space_.to_binary(beta)); }

    /// Short stable identifier of the sign choices.
    std::string fingerprint() const;

    bool operator==(const QuantumNet &o) const { return space_.field() == o.space_.field() && signs_ == o.signs_; }

   private:
    QuantumNet(const PhaseSpace &space, NetMode mode, std::vector<SignMask> signs);

    PhaseSpace space_;
    NetMode mode_;
    std::vector<SignMask> signs_;
    std::vector<signed char> f_cache_;  // indexed (q << n) | p, filled for n <= kFCacheQubits
    static constexpr int kFCacheQubits = 10;
};

// --- states -----------------------------------------------------------------

/// Unit vector for the ray of `label` (first nonzero amplitude real positive).
Vector ray_state(const QuantumNet &net, StriationLabel label);
/// T_d |ray>, d = displacement_to(line), with the same phase convention.
Vector line_state(const QuantumNet &net, const Line &line);
Matrix line_projector(const QuantumNet &net, const Line &line);

struct MubBasis {
    StriationLabel label;
    std::vector<Line> lines;
    std::vector<Vector> states;
};

/// The N+1 bases, one per striation; parallel over striations.
std::vector<MubBasis> mub_states(const QuantumNet &net);

}  // namespace gfw
