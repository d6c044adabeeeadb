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

#include "gfwigner/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gfwigner/apps.hpp"
#include "gfwigner/error.hpp"

namespace gfw {

namespace {

constexpr double kTol = 1e-10;

std::string num(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

Check deviation_check(std::string name, double worst, double tol = kTol) {
    return {std::move(name), worst <= tol, "max deviation " + num(worst)};
}

Matrix random_density(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
    Matrix rho = a * a.adjoint();
    return rho / rho.trace();
}

void galois_checks(const Field &field, std::vector<Check> &out) {
    const Bits N = field.size();
    const Bits limit = std::min<Bits>(N, 256);
    bool frob = true;
    bool lin = true;
    for (Bits x = 0; x < limit; ++x)
        for (Bits y = 0; y < limit; ++y) {
            const Bits s = x ^ y;
            frob = frob && field.mul(s, s) == (field.mul(x, x) ^ field.mul(y, y));
            lin = lin && field.trace(s) == (field.trace(x) ^ field.trace(y));
        }
    out.push_back({"galois.frobenius_linear", frob, ""});
    out.push_back({"galois.trace_linear", lin, ""});
    bool onto = false;
    bool frob_trace = true;
    for (Bits x = 0; x < limit; ++x) {
        frob_trace = frob_trace && field.trace(x) == field.trace_by_frobenius(x);
    }
    for (int i = 0; i < field.n(); ++i) onto = onto || field.trace(field.omega_pow(i)) == 1;
    out.push_back({"galois.trace_surjective", onto, ""});
    out.push_back({"galois.trace_matches_definition", frob_trace, ""});
    std::vector<Bits> seen = field.power_ordering(field.companion(), 1);
    std::sort(seen.begin(), seen.end());
    bool cycle = seen.size() == N - 1;
    for (Bits k = 0; cycle && k + 1 < N; ++k) cycle = seen[k] == k + 1;
    out.push_back({"galois.power_ordering_is_cycle", cycle, ""});
    if (field.n() <= 4) {
        bool agrees = true;
        for (Bits x = 0; x < N; ++x)
            for (Bits y = 0; y < N; ++y)
                agrees = agrees && field.multiplication_matrix(field.mul(x, y)) ==
                                       field.multiplication_matrix(x) * field.multiplication_matrix(y);
        out.push_back({"galois.mul_matches_matrices", agrees, ""});
    }
    std::vector<Bits> basis;
    for (int i = 0; i < field.n(); ++i) basis.push_back(field.omega_pow(i));
    out.push_back({"galois.dual_involution", field.dual_basis(field.dual_basis(basis)) == basis, ""});
}

void phasespace_checks(const PhaseSpace &space, std::vector<Check> &out) {
    const Bits N = space.size();
    const int n = space.n();
    if (n <= 4) {
        bool covered = true;
        for (Bits q = 0; q < N; ++q)
            for (Bits p = 0; p < N; ++p) {
                int count = 0;
                for (const Striation &st : space.all_striations())
                    for (const Line &l : st.lines) count += space.contains(l, {q, p});
                covered = covered && count == space.num_striations();
            }
        out.push_back({"phasespace.point_on_one_line_per_striation", covered, ""});
    }
    if (n <= 3) {
        bool ok = true;
        std::vector<Line> lines;
        for (const Striation &st : space.all_striations()) lines.insert(lines.end(), st.lines.begin(), st.lines.end());
        for (const Line &a : lines)
            for (const Line &b : lines) {
                const Intersection x = space.intersect(a, b);
                const bool parallel = space.striation_of(a) == space.striation_of(b);
                if (a == b) ok = ok && x.kind == Intersection::Kind::SameLine;
                else if (parallel) ok = ok && x.kind == Intersection::Kind::Parallel;
                else ok = ok && x.kind == Intersection::Kind::Point && space.contains(a, x.point) && space.contains(b, x.point);
            }
        out.push_back({"phasespace.intersections", ok, ""});
    }
    const Bits limit = std::min<Bits>(N, 64);
    bool same = true;
    for (Bits q1 = 0; q1 < limit; ++q1)
        for (Bits p1 = 0; p1 < limit; ++p1)
            for (Bits q2 = 0; q2 < limit; q2 += 1 + q2 / 8)
                for (Bits p2 = 0; p2 < limit; p2 += 1 + p2 / 8)
                    same = same && wedge(space.to_binary({q1, p1}), space.to_binary({q2, p2})) == space.wedge_field({q1, p1}, {q2, p2});
    out.push_back({"phasespace.wedge_matches_trace_form", same, ""});
}

void pauli_checks(const PhaseSpace &space, std::vector<Check> &out) {
    const int n = space.n();
    const Bits N = space.size();
    if (n > 8) return;
    const auto classes = commuting_classes(space);
    std::vector<std::uint64_t> keys;
    bool commuting = true;
    for (const CommutingClass &c : classes) {
        for (size_t i = 1; i < c.members.size(); ++i) keys.push_back((std::uint64_t{c.members[i].x()} << n) | c.members[i].z());
        for (const auto &a : c.members)
            for (const auto &b : c.members) commuting = commuting && commutes(a, b);
    }
    std::sort(keys.begin(), keys.end());
    const bool partition = keys.size() == static_cast<size_t>(N) * N - 1 &&
                           std::adjacent_find(keys.begin(), keys.end()) == keys.end();
    out.push_back({"pauli.classes_partition_translations", partition, ""});
    out.push_back({"pauli.classes_commute", commuting, ""});
    if (n <= 2) {
        bool phases = true;
        bool comm = true;
        for (Bits x1 = 0; x1 < N; ++x1)
            for (Bits z1 = 0; z1 < N; ++z1)
                for (Bits x2 = 0; x2 < N; ++x2)
                    for (Bits z2 = 0; z2 < N; ++z2) {
                        const auto a = PauliTranslation::canonical(n, x1, z1);
                        const auto b = PauliTranslation::canonical(n, x2, z2);
                        const Matrix ab = a.to_matrix() * b.to_matrix();
                        phases = phases && max_abs_diff(compose(a, b).to_matrix(), ab) < 1e-12;
                        const bool dense_comm = max_abs_diff(ab, b.to_matrix() * a.to_matrix()) < 1e-12;
                        comm = comm && dense_comm == commutes(a, b);
                    }
        out.push_back({"pauli.compose_matches_matrices", phases, ""});
        out.push_back({"pauli.commutes_matches_matrices", comm, ""});
    }
}

void net_checks(const PhaseSpace &space, std::vector<Check> &out) {
    const QuantumNet net = QuantumNet::covariant_plus(space);
    const Bits N = space.size();
    const auto bases = mub_states(net);
    double cross = 0;
    double gram = 0;
    for (size_t a = 0; a < bases.size(); ++a)
        for (size_t b = a; b < bases.size(); ++b)
            for (size_t i = 0; i < bases[a].states.size(); ++i)
                for (size_t j = 0; j < bases[b].states.size(); ++j) {
                    const double o = std::norm(bases[a].states[i].dot(bases[b].states[j]));
                    if (a == b) gram = std::max(gram, std::abs(o - (i == j ? 1.0 : 0.0)));
                    else cross = std::max(cross, std::abs(o - 1.0 / N));
                }
    out.push_back(deviation_check("net.mub_cross_overlaps", cross));
    out.push_back(deviation_check("net.mub_orthonormal", gram));
    const Matrix u = SqueezeCircuit(space.field()).matrix();
    const int order = static_cast<int>(N) - 1;
    double cov = 0;
    for (int l = 0; l < order; ++l) {
        const StriationLabel from = StriationLabel::diagonal(l);
        const StriationLabel to = StriationLabel::diagonal(((l - 2) % order + order) % order);
        const Matrix p = ray_projector(ray_generators(space, from), net.signs(from));
        const Matrix q = ray_projector(ray_generators(space, to), net.signs(to));
        cov = std::max(cov, max_abs_diff(u * p * u.adjoint(), q));
    }
    out.push_back(deviation_check("net.squeeze_covariance", cov));
    double f_dev = 0;
    for (Bits x = 0; x < N; ++x)
        for (Bits z = 0; z < N; ++z) {
            if (x == 0 && z == 0) continue;
            const StriationLabel label = space.ray_through(space.from_binary({x, z}));
            const Matrix p = ray_projector(ray_generators(space, label), net.signs(label));
            const double tr = (PauliTranslation::canonical(space.n(), x, z).to_matrix() * p).trace().real();
            f_dev = std::max(f_dev, std::abs(tr - net.f({x, z})));
        }
    out.push_back(deviation_check("net.f_is_ray_eigenvalue", f_dev));
}

void wigner_checks(const PhaseSpace &space, std::vector<Check> &out) {
    const QuantumNet net = QuantumNet::covariant_plus(space);
    const int n = space.n();
    const Bits N = space.size();
    std::mt19937_64 rng(20260 + n);
    const Matrix rho = random_density(n, rng);
    const WignerGrid w = wigner_of(rho, net);
    out.push_back(deviation_check("wigner.normalized", std::abs(w.sum() - 1.0)));
    double marg = 0;
    for (const Striation &st : space.all_striations())
        for (const Line &l : st.lines)
            marg = std::max(marg, std::abs(w.line_sum(space, l) - (rho * line_projector(net, l)).trace().real()));
    out.push_back(deviation_check("wigner.line_marginals", marg));
    out.push_back(deviation_check("wigner.reconstruction", max_abs_diff(reconstruct(w, net), rho)));
    const WignerGrid ref = wigner_of_reference(rho, net);
    double kern = 0;
    for (size_t i = 0; i < w.values().size(); ++i) kern = std::max(kern, std::abs(w.values()[i] - ref.values()[i]));
    out.push_back(deviation_check("wigner.kernel_matches_reference", kern));
    if (n <= 3) {
        const std::vector<Matrix> ops = PointOperators(net).all();
        double gram = 0;
        for (size_t a = 0; a < ops.size(); ++a)
            for (size_t b = 0; b < ops.size(); ++b)
                gram = std::max(gram, std::abs((ops[a] * ops[b]).trace() - Complex(a == b ? 1.0 / N : 0.0, 0)));
        out.push_back(deviation_check("wigner.point_operator_gram", gram));
    }
    double stab = 0;
    for (int t = 0; t < 5; ++t) {
        const StabilizerGroup g = random_stabilizer_group(n, rng);
        const WignerGrid ws = stabilizer_wigner(g, net);
        const WignerGrid wd = wigner_of(g.projector(), net);
        for (size_t i = 0; i < ws.values().size(); ++i) stab = std::max(stab, std::abs(ws.values()[i] - wd.values()[i]));
    }
    out.push_back(deviation_check("wigner.stabilizer_formula", stab));
}

}  // namespace

std::vector<Check> verify_invariants(int n) {
    const Field field(n);
    const PhaseSpace space(field);
    std::vector<Check> out;
    galois_checks(field, out);
    phasespace_checks(space, out);
    pauli_checks(space, out);
    if (n <= 4) {
        net_checks(space, out);
        wigner_checks(space, out);
    }
    return out;
}

std::vector<Check> verify_bell() {
    std::vector<Check> out;
    const auto sols = bell_wigner_solutions(BellState::PhiPlus);
    int concentrated = 0;
    int spread = 0;
    double mismatch = 0;
    bool orth = true;
    bool symmetric = true;
    const PhaseSpace space{Field(2)};
    for (const auto &s : sols) {
        concentrated += s.pattern == BellPattern::Concentrated;
        spread += s.pattern == BellPattern::Spread;
        mismatch = std::max(mismatch, s.dense_mismatch);
        if (s.params) {
            const auto &q = *s.params;
            orth = orth && std::abs(q.a.value() * q.b.value() + q.c.value() * q.d.value()) < kTol;
        }
        // Invariance under the X0X1 and Z0Z1 translations.
        for (const PhasePoint d : {space.from_binary({3, 0}), space.from_binary({0, 3})})
            symmetric = symmetric && s.grid.translated(d).numerators() == s.grid.numerators();
    }
    out.push_back({"bell.nets_enumerated", sols.size() == 64, std::to_string(sols.size()) + " nets"});
    out.push_back({"bell.only_two_patterns", concentrated + spread == 64,
                   std::to_string(concentrated) + " concentrated, " + std::to_string(spread) + " spread"});
    out.push_back({"bell.both_patterns_realized", concentrated > 0 && spread > 0, ""});
    out.push_back(deviation_check("bell.stabilizer_matches_dense", mismatch));
    out.push_back({"bell.orthogonality_ab_plus_cd", orth, ""});
    out.push_back({"bell.translation_invariance", symmetric, ""});
    const QuantumNet net = QuantumNet::all_plus(space);
    const WignerGrid phi = stabilizer_wigner(bell_group(BellState::PhiPlus), net);
    const WignerGrid psi = stabilizer_wigner(bell_group(BellState::PsiPlus), net);
    out.push_back({"bell.psi_plus_is_x0_translate", phi.translated({1, 0}).numerators() == psi.numerators(), ""});
    return out;
}

std::vector<Check> verify_qec() {
    std::vector<Check> out;
    const PhaseSpace space{Field(3)};
    const QuantumNet net = qec_net(space);
    const WignerGrid zero = stabilizer_wigner(qec_logical_group(0), net);
    const WignerGrid one = stabilizer_wigner(qec_logical_group(1), net);
    const auto params = code_parameters(zero, space);
    const CodeParameters expected{Rational{1, 32}, {3, 32}, {1, 32}, {-1, 32}, {1, 32}, {-1, 32}, {1, 32}, {-1, 32}};
    out.push_back({"qec.logical_zero_grid", params && *params == expected, params ? format_code_parameters(*params) : "not symmetric"});
    out.push_back({"qec.logical_one_is_x0_translate", zero.translated({1, 0}).numerators() == one.numerators(), ""});
    out.push_back({"qec.logical_one_symmetric", code_parameters(one, space).has_value(), ""});
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    Complex al(g(rng), g(rng)), be(g(rng), g(rng));
    const double norm = std::sqrt(std::norm(al) + std::norm(be));
    const WignerGrid general = code_wigner(al / norm, be / norm, net);
    double orth = 0;
    for (const char *err : {"ZII", "IZI", "IIZ"}) {
        const BinaryPoint e = PauliTranslation::parse(err).point();
        orth = std::max(orth, std::abs(general.overlap(general.translated(space.from_binary(e)))));
    }
    out.push_back(deviation_check("qec.errors_map_to_orthogonal_grids", orth));
    const auto family = code_solution_family();
    const auto covariant = covariant_code_solutions();
    int covariant_in_family = 0;
    for (const auto &c : covariant) covariant_in_family += std::find(family.begin(), family.end(), c) != family.end();
    out.push_back({"qec.family_has_eight_solutions", family.size() == 8, std::to_string(family.size()) + " solutions"});
    out.push_back({"qec.four_covariant_solutions", covariant.size() == 4 && covariant_in_family == 4,
                   std::to_string(covariant.size()) + " covariant, " + std::to_string(covariant_in_family) + " in family"});
    return out;
}

std::vector<Check> verify_meanking() {
    std::vector<Check> out;
    const KingSolution sol = mean_king_solve();
    const PhaseSpace &space = sol.net.space();
    double gram = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) gram = std::max(gram, std::abs(sol.basis[i].dot(sol.basis[j]) - Complex(i == j ? 1.0 : 0.0, 0)));
    out.push_back(deviation_check("meanking.basis_orthonormal", gram));
    const KingLines &l = sol.lines;
    double zero_lines = 0;
    for (const Line &line : {l.v1, l.h1, l.d1}) zero_lines = std::max(zero_lines, std::abs(sol.grid.line_sum(space, line)));
    out.push_back(deviation_check("meanking.zero_line_sums", zero_lines));
    double half_lines = 0;
    for (const Line &line : {l.v2, l.h2, l.d2}) half_lines = std::max(half_lines, std::abs(sol.grid.line_sum(space, line) - 0.5));
    out.push_back(deviation_check("meanking.half_line_sums", half_lines));
    // P12 H1 H2 invariance.
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    Matrix swap = Matrix::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1;
    Matrix hh(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) hh(i, j) = h(i >> 1, j >> 1) * h(i & 1, j & 1);
    const Vector moved = swap * hh * sol.basis[0];
    out.push_back(deviation_check("meanking.swap_hadamard_invariance", std::abs(std::abs(sol.basis[0].dot(moved)) - 1.0)));
    const KingParameters kp = king_parameters(sol.grid, space);
    out.push_back({"meanking.mirror_symmetric", kp.symmetric, ""});
    try {
        const KingReport r = mean_king_simulate(sol.basis);
        out.push_back(deviation_check("meanking.retrodiction_success", std::abs(r.success_probability - 1.0)));
    } catch (const Error &e) {
        out.push_back({"meanking.retrodiction_success", false, e.what()});
    }
    return out;
}

bool all_passed(const std::vector<Check> &checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
}

}  // namespace gfw
