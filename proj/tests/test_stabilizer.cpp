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

#include <doctest.h>

#include "gfwigner/error.hpp"
#include "gfwigner/stabilizer.hpp"
#include "oracles.hpp"

using namespace gfw;

namespace {

// 2^n prod_{k=1}^{n} (2^k + 1)
size_t stabilizer_state_count(int n) {
    size_t c = size_t{1} << n;
    for (int k = 1; k <= n; ++k) c *= (size_t{1} << k) + 1;
    return c;
}

void check_against_dense(const StabilizerGroup &g, const QuantumNet &net) {
    const WignerGrid exact = stabilizer_wigner(g, net);
    REQUIRE(exact.is_exact());
    const auto dense = rationalize(wigner_of(g.projector(), net));
    REQUIRE(dense);
    REQUIRE(dense->numerators() == exact.numerators());
}

}  // namespace

TEST_CASE("groups from generators") {
    const StabilizerGroup g = StabilizerGroup::parse({"+XXI", "+IXX", "+ZZZ"});
    CHECK(g.n() == 3);
    CHECK(g.members().size() == 8);
    CHECK(g.members()[0] == PauliTranslation::identity(3));
    CHECK(g.contains(PauliTranslation::parse("XIX").point()));
    CHECK(g.g(PauliTranslation::parse("XIX").point()) == 1);
    // -YYX = XXI . ZZZ up to the canonical phase
    CHECK(g.g(PauliTranslation::parse("YYZ").point()) == -1);
    CHECK(!g.contains(PauliTranslation::parse("ZII").point()));
    CHECK_THROWS_AS(g.g(PauliTranslation::parse("ZII").point()), Error);
    const Vector psi = g.state();
    for (const auto &m : g.members()) CHECK((m.to_matrix() * psi - psi).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(oracle::max_abs(g.projector() - psi * psi.adjoint()) < 1e-12);
}

TEST_CASE("invalid generator sets") {
    auto code = [](const std::vector<std::string> &gens) {
        try {
            StabilizerGroup::parse(gens);
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::ParseError;
    };
    CHECK(code({"XI", "ZI"}) == ErrorCode::NonCommutingGenerators);
    CHECK(code({"XX", "XX"}) == ErrorCode::InconsistentStabilizer);
    CHECK(code({"XX", "-XX"}) == ErrorCode::InconsistentStabilizer);
    CHECK(code({"XX"}) == ErrorCode::InconsistentStabilizer);
    CHECK(code({"iXX", "ZZ"}) != ErrorCode::ParseError);
    CHECK(code({"XX", "ZZZ"}) == ErrorCode::DimensionMismatch);
}

TEST_CASE("members must be closed") {
    const auto ok = StabilizerGroup::parse({"XX", "ZZ"});
    CHECK_NOTHROW(StabilizerGroup::from_members(2, ok.members()));
    std::vector<PauliTranslation> broken = ok.members();
    broken[3] = broken[3].negated();
    CHECK_THROWS_AS(StabilizerGroup::from_members(2, broken), Error);
}

TEST_CASE("enumeration counts") {
    for (int n = 1; n <= 3; ++n) CHECK(all_stabilizer_groups(n).size() == stabilizer_state_count(n));
}

TEST_CASE("closed form equals dense on every small stabilizer state") {
    for (int n = 1; n <= 2; ++n) {
        const PhaseSpace space{Field(n)};
        std::vector<QuantumNet> nets{QuantumNet::all_plus(space), QuantumNet::covariant_plus(space)};
        for (SignMask s = 1; s < space.size(); ++s) nets.push_back(QuantumNet::covariant(space, s, 0, s));
        for (const auto &g : all_stabilizer_groups(n))
            for (const auto &net : nets) check_against_dense(g, net);
    }
    const PhaseSpace space3{Field(3)};
    const QuantumNet net3 = QuantumNet::covariant(space3, 0, 0, 2);
    for (const auto &g : all_stabilizer_groups(3)) check_against_dense(g, net3);
}

TEST_CASE("random stabilizer groups") {
    std::mt19937_64 rng(53);
    for (int n = 3; n <= 5; ++n) {
        const PhaseSpace space{Field(n)};
        const QuantumNet net = QuantumNet::covariant_plus(space);
        for (int t = 0; t < 10; ++t) check_against_dense(random_stabilizer_group(n, rng), net);
    }
}

TEST_CASE("pointwise values") {
    std::mt19937_64 rng(59);
    const PhaseSpace space{Field(4)};
    const QuantumNet net = QuantumNet::all_plus(space);
    const StabilizerGroup g = random_stabilizer_group(4, rng);
    const WignerGrid w = stabilizer_wigner(g, net);
    for (Bits q = 0; q < 16; ++q)
        for (Bits p = 0; p < 16; ++p) {
            CHECK(stabilizer_wigner_numerator(g, net, {q, p}) == w.numerator(q, p));
            CHECK(stabilizer_wigner_at(g, net, {q, p}) == w.exact_at(q, p));
        }
}

TEST_CASE("computational basis state at twelve qubits") {
    const int n = 12;
    const PhaseSpace space{Field(n)};
    const QuantumNet net = QuantumNet::all_plus(space);
    std::vector<PauliTranslation> gens;
    for (int k = 0; k < n; ++k) gens.push_back(PauliTranslation::canonical(n, 0, Bits{1} << k));
    const StabilizerGroup zero = StabilizerGroup::from_generators(n, gens);
    const long long N = space.size();
    // |0...0> is the state of the vertical ray, so W = 1/N on q = 0.
    for (Bits p : {0u, 1u, 77u, 4095u}) CHECK(stabilizer_wigner_numerator(zero, net, {0, p}) == N);
    for (Bits q : {1u, 5u, 4000u}) CHECK(stabilizer_wigner_numerator(zero, net, {q, 3}) == 0);
    CHECK_THROWS_AS(stabilizer_wigner(zero, net), Error);
}

TEST_CASE("aligned nets put the state on a line") {
    for (int n = 1; n <= 3; ++n) {
        const PhaseSpace space{Field(n)};
        const long long N = space.size();
        for (const auto &g : all_stabilizer_groups(n)) {
            const QuantumNet net = aligned_net(g, space);
            for (const auto &m : g.members()) REQUIRE(net.f(m.point()) == g.g(m.point()));
            const WignerGrid w = stabilizer_wigner(g, net);
            long long on = 0;
            for (long long v : w.numerators()) {
                REQUIRE((v == 0 || v == N));
                on += v == N;
            }
            REQUIRE(on == N);
        }
    }
}

TEST_CASE("values are integers over N squared with a positive sum") {
    std::mt19937_64 rng(61);
    const PhaseSpace space{Field(6)};
    const QuantumNet net = QuantumNet::covariant_plus(space);
    const WignerGrid w = stabilizer_wigner(random_stabilizer_group(6, rng), net);
    long long total = 0;
    for (long long v : w.numerators()) total += v;
    CHECK(total == w.denominator());
}
