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

#include <map>

#include "gfwigner/apps.hpp"
#include "gfwigner/error.hpp"
#include "oracles.hpp"

using namespace gfw;

namespace {

Rational r(long long num, long long den) { return Rational::reduced(num, den); }

CodeParameters code(Rational a, Rational c, Rational e, Rational g) {
    const Rational b = Rational::reduced(a.den * 1 - 8 * a.num, 8 * a.den);
    auto neg = [](Rational x) { return Rational{-x.num, x.den}; };
    return {a, b, c, neg(c), e, neg(e), g, neg(g)};
}

// The eight solutions as printed, with b = 1/8 - a, d = -c, f = -e, h = -g.
std::vector<CodeParameters> printed_solutions() {
    const Rational z{0, 1};
    return {code(r(1, 8), z, z, z),
            code(r(1, 16), z, r(1, 16), z),
            code(r(1, 16), r(1, 16), z, z),
            code(r(1, 16), z, z, r(1, 16)),
            code(r(1, 32), r(1, 32), r(1, 32), r(1, 32)),
            code(r(3, 32), r(1, 32), r(1, 32), r(-1, 32)),
            code(r(3, 32), r(1, 32), r(-1, 32), r(1, 32)),
            code(r(3, 32), r(-1, 32), r(1, 32), r(1, 32))};
}

bool same_set(std::vector<CodeParameters> a, std::vector<CodeParameters> b) {
    auto key = [](const CodeParameters &p) {
        std::vector<double> v;
        for (const Rational &x : p) v.push_back(x.value());
        return v;
    };
    auto less = [&](const CodeParameters &x, const CodeParameters &y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST_CASE("Bell stabilizers") {
    Vector v = Vector::Zero(4);
    v(0) = v(3) = 1 / std::sqrt(2.0);
    CHECK(oracle::max_abs(bell_group(BellState::PhiPlus).projector() - v * v.adjoint()) < 1e-12);
    v(3) = -v(3);
    CHECK(oracle::max_abs(bell_group(BellState::PhiMinus).projector() - v * v.adjoint()) < 1e-12);
}

TEST_CASE("Phi+ takes one of two patterns on all 64 nets") {
    const PhaseSpace space{Field(2)};
    const auto nets = bell_nets(space);
    REQUIRE(nets.size() == 64);
    const Matrix rho = bell_group(BellState::PhiPlus).projector();
    std::map<std::vector<long long>, int> patterns;
    for (const QuantumNet &net : nets) {
        CHECK(net.signs(StriationLabel::horizontal()) == 0);
        CHECK(net.signs(StriationLabel::vertical()) == 0);
        const auto w = rationalize(wigner_of(rho, net));
        REQUIRE(w);
        ++patterns[w->numerators()];
    }
    // Up to where the mass sits, the dense grids fall into two shapes.
    std::map<std::vector<long long>, int> shapes;
    for (const auto &[nums, count] : patterns) {
        std::vector<long long> sorted = nums;
        std::sort(sorted.begin(), sorted.end());
        shapes[sorted] += count;
    }
    REQUIRE(shapes.size() == 2);
    const std::vector<long long> concentrated{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 4, 4};
    const std::vector<long long> spread{-2, -2, -2, -2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2};
    CHECK(shapes[concentrated] == 32);
    CHECK(shapes[spread] == 32);

    int counted[3] = {0, 0, 0};
    for (const auto &s : bell_wigner_solutions(BellState::PhiPlus)) {
        ++counted[static_cast<int>(s.pattern)];
        CHECK(s.dense_mismatch < 1e-12);
    }
    CHECK(counted[static_cast<int>(BellPattern::Concentrated)] == 32);
    CHECK(counted[static_cast<int>(BellPattern::Spread)] == 32);
    CHECK(counted[static_cast<int>(BellPattern::Other)] == 0);
}

TEST_CASE("Bell block parameters") {
    const PhaseSpace space{Field(2)};
    const auto spread = bell_parameters(stabilizer_wigner(bell_group(BellState::PhiPlus), QuantumNet::all_plus(space)));
    REQUIRE(spread);
    CHECK(*spread == BellParameters{r(1, 8), r(1, 8), r(1, 8), r(-1, 8)});
    CHECK(classify_bell(spread) == BellPattern::Spread);
    const auto conc = bell_parameters(stabilizer_wigner(bell_group(BellState::PhiPlus), meanking_net(space)));
    REQUIRE(conc);
    CHECK(*conc == BellParameters{r(1, 4), r(0, 1), r(0, 1), r(0, 1)});
    CHECK(classify_bell(conc) == BellPattern::Concentrated);
    CHECK(classify_bell(std::nullopt) == BellPattern::Other);
    // Not block constant: a product state.
    CHECK(!bell_parameters(stabilizer_wigner(StabilizerGroup::parse({"ZI", "IZ"}), QuantumNet::all_plus(space))));
}

TEST_CASE("the other Bell states are translates of Phi+") {
    const PhaseSpace space{Field(2)};
    for (const QuantumNet &net : {QuantumNet::all_plus(space), meanking_net(space)}) {
        const WignerGrid phi = stabilizer_wigner(bell_group(BellState::PhiPlus), net);
        // X0 -> (1, 0), Z0 -> momentum bits 01
        const PhasePoint x0 = space.from_binary({1, 0}), z0 = space.from_binary({0, 1});
        CHECK(stabilizer_wigner(bell_group(BellState::PsiPlus), net).numerators() == phi.translated(x0).numerators());
        CHECK(stabilizer_wigner(bell_group(BellState::PhiMinus), net).numerators() == phi.translated(z0).numerators());
        CHECK(stabilizer_wigner(bell_group(BellState::PsiMinus), net).numerators() == phi.translated(x0 + z0).numerators());
    }
}

// ---------------------------------------------------------------------------

TEST_CASE("logical code states") {
    const Vector zero = code_state(1, 0), one = code_state(0, 1);
    for (const char *s : {"XXI", "IXX"}) {
        const Matrix m = oracle::pauli_string(s);
        CHECK((m * zero - zero).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((m * one - one).cwiseAbs().maxCoeff() < 1e-12);
    }
    const Matrix zzz = oracle::pauli_string("ZZZ");
    CHECK((zzz * zero - zero).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((zzz * one + one).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(zero.dot(one)) < 1e-12);
    CHECK_THROWS_AS(code_state(0, 0), Error);
}

TEST_CASE("phase-code net") {
    const PhaseSpace space{Field(3)};
    const QuantumNet net = qec_net(space);
    CHECK(net.mode() == NetMode::Covariant);
    CHECK(net.signs(StriationLabel::horizontal()) == 0);
    CHECK(net.signs(StriationLabel::vertical()) == 0);
    // The main diagonal state is Z1 applied to the all +1 eigenstate.
    const Matrix plus = ray_projector(ray_generators(space, StriationLabel::diagonal(0)), 0);
    const Matrix z1 = oracle::pauli_string("IZI");
    const Matrix expected = z1 * plus * z1;
    CHECK(oracle::max_abs(ray_projector(ray_generators(space, StriationLabel::diagonal(0)), net.signs(StriationLabel::diagonal(0))) -
                          expected) < 1e-12);
}

TEST_CASE("|0_L> grid under the phase-code net") {
    const PhaseSpace space{Field(3)};
    const QuantumNet net = qec_net(space);
    const WignerGrid w = stabilizer_wigner(qec_logical_group(0), net);
    const auto p = code_parameters(w, space);
    REQUIRE(p);
    CHECK(*p == code(r(1, 32), r(1, 32), r(1, 32), r(1, 32)));
    CHECK(format_code_parameters(*p) == "a=1/32 b=3/32 c=1/32 d=-1/32 e=1/32 f=-1/32 g=1/32 h=-1/32");
    const auto dense = rationalize(code_wigner(1, 0, net));
    REQUIRE(dense);
    CHECK(dense->numerators() == w.numerators());
}

TEST_CASE("solution family") {
    const auto family = code_solution_family();
    CHECK(family.size() == 8);
    CHECK(same_set(family, printed_solutions()));
    CHECK(same_set(code_solution_family(192), family));

    // Each solution is a valid pure-state grid with the code's symmetries.
    const PhaseSpace space{Field(3)};
    for (const CodeParameters &p : family) {
        std::vector<double> values(64);
        for (Bits q = 0; q < 8; ++q)
            for (Bits pp = 0; pp < 8; ++pp) values[q * 8 + pp] = p[qec_parameter_index(space, {q, pp})].value();
        const WignerGrid w(3, values);
        CHECK(w.sum() == doctest::Approx(1.0));
        CHECK(8 * w.overlap(w) == doctest::Approx(1.0));
        for (const Striation &st : space.all_striations())
            for (const Line &l : st.lines) CHECK(w.line_sum(space, l) >= -1e-12);
    }
}

TEST_CASE("covariant nets realize the last four solutions") {
    const PhaseSpace space{Field(3)};
    std::vector<CodeParameters> found;
    for (SignMask zero = 0; zero < 8; ++zero) {
        const auto w = rationalize(wigner_of(code_state(1, 0) * code_state(1, 0).adjoint(), QuantumNet::covariant(space, 0, 0, zero)));
        REQUIRE(w);
        const auto p = code_parameters(*w, space);
        REQUIRE(p);
        if (std::find(found.begin(), found.end(), *p) == found.end()) found.push_back(*p);
    }
    const auto printed = printed_solutions();
    CHECK(same_set(found, {printed.begin() + 4, printed.end()}));
    CHECK(same_set(covariant_code_solutions(), found));
}

TEST_CASE("general encoded states follow f1..f4") {
    const PhaseSpace space{Field(3)};
    const QuantumNet net = qec_net(space);
    const Field &f = space.field();
    // Rows of the q = 0 column in axis order (p = 0, 1, w, ..., w^6).
    const int column[8] = {1, 2, 3, 3, 4, 2, 2, 3};
    const std::vector<Bits> ax = f.axis_elements();
    std::mt19937_64 rng(67);
    std::normal_distribution<double> g;
    for (int t = 0; t < 20; ++t) {
        const Complex a(g(rng), g(rng)), b(g(rng), g(rng));
        const double norm = std::sqrt(std::norm(a) + std::norm(b));
        const WignerGrid w = code_wigner(a, b, net);
        const auto fab = code_f(a / norm, b / norm), fba = code_f(b / norm, a / norm);
        for (int k = 0; k < 8; ++k) CHECK(w.at(0, ax[k]) == doctest::Approx(fab[column[k] - 1]).epsilon(1e-10));
        for (Bits q = 0; q < 8; ++q)
            for (Bits p = 0; p < 8; ++p) {
                const double v = w.at(q, p);
                const auto &fs = parity(q) ? fba : fab;
                const bool match = std::any_of(fs.begin(), fs.end(), [&](double x) { return std::abs(std::abs(v) - std::abs(x)) < 1e-10; });
                CHECK(match);
            }
    }
    // |0_L>: every f is 1/32.
    for (double x : code_f(1, 0)) CHECK(x == doctest::Approx(1.0 / 32));
}

TEST_CASE("phase errors move the code space to an orthogonal grid") {
    const PhaseSpace space{Field(3)};
    const QuantumNet net = qec_net(space);
    const WignerGrid w = code_wigner(Complex(0.6, 0.1), Complex(-0.2, 0.7), net);
    for (const char *e : {"ZII", "IZI", "IIZ"}) CHECK(std::abs(w.overlap(w.translated(space.from_binary(PauliTranslation::parse(e).point())))) < 1e-12);
    // Stabilizer translations leave it alone.
    for (const char *s : {"XXI", "IXX"}) {
        const WignerGrid moved = w.translated(space.from_binary(PauliTranslation::parse(s).point()));
        for (size_t k = 0; k < moved.values().size(); ++k) CHECK(moved.values()[k] == doctest::Approx(w.values()[k]));
    }
}

// ---------------------------------------------------------------------------

TEST_CASE("mean king basis") {
    const KingSolution sol = mean_king_solve();
    // Line states |11>_z, |11>_x, |10>_y.
    Vector z11 = Vector::Zero(4);
    z11(3) = 1;
    Vector x11(4);
    x11 << 0.5, -0.5, -0.5, 0.5;
    Vector y10(4);
    y10 << 0.5, Complex(0, 0.5), Complex(0, -0.5), 0.5;
    for (const Vector &v : {z11, x11, y10}) CHECK(std::abs(v.dot(sol.basis[0])) < 1e-12);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::abs(sol.basis[i].dot(sol.basis[j])) == doctest::Approx(i == j ? 1.0 : 0.0));
    Vector expected(4);
    const double s = 1 / std::sqrt(2.0), h = s / 2;
    expected << s, Complex(h, -h), Complex(h, h), 0;
    CHECK((sol.basis[0] - expected).cwiseAbs().maxCoeff() < 1e-12);
    // P12 H1 H2 leaves phi1 alone up to a phase.
    Matrix hh = oracle::kron(oracle::pauli('X') + oracle::pauli('Z'), oracle::pauli('X') + oracle::pauli('Z')) / 2.0;
    Matrix swap = Matrix::Zero(4, 4);
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1;
    CHECK(std::abs(sol.basis[0].dot(swap * hh * sol.basis[0])) == doctest::Approx(1.0));
}

TEST_CASE("mean king grid") {
    const KingSolution sol = mean_king_solve();
    const PhaseSpace &space = sol.net.space();
    const auto w = rationalize(sol.grid);
    REQUIRE(w);
    const std::vector<Bits> ax = space.field().axis_elements();
    // x16, rows p = w^2, w, 1, 0 and columns q = 0, 1, w, w^2
    const long long expected[4][4] = {{-1, -1, -1, 3}, {3, 1, 1, -1}, {3, 1, 1, -1}, {3, 3, 3, -1}};
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col) CHECK(w->numerator(ax[col], ax[3 - row]) == expected[row][col]);
    for (const Line &l : {sol.lines.v1, sol.lines.h1, sol.lines.d1}) CHECK(std::abs(w->line_sum(space, l)) < 1e-12);
    for (const Line &l : {sol.lines.v2, sol.lines.h2, sol.lines.d2}) CHECK(w->line_sum(space, l) == doctest::Approx(0.5));
    const KingParameters kp = king_parameters(sol.grid, space);
    CHECK(kp.symmetric);
    std::map<long long, int> letters;
    for (const Rational &x : kp.diagonal) ++letters[x.num * (16 / x.den)];
    for (const Rational &x : kp.off_diagonal) ++letters[x.num * (16 / x.den)];
    CHECK(letters == std::map<long long, int>{{-1, 3}, {1, 3}, {3, 4}});
}

TEST_CASE("mean king retrodiction") {
    const KingSolution sol = mean_king_solve();
    const KingReport report = mean_king_simulate(sol.basis);
    CHECK(report.success_probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.table.size() == 12);
    for (const auto &e : report.table) CHECK(std::abs(e.king_outcome) == 1);
    std::array<Vector, 4> computational;
    for (int k = 0; k < 4; ++k) computational[k] = Vector::Unit(4, k);
    CHECK_THROWS_AS(mean_king_simulate(computational), Error);
}
