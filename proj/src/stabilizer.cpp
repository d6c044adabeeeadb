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

#include "gfwigner/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gfwigner/error.hpp"

namespace gfw {

namespace {

std::uint64_t key(BinaryPoint b, int n) { return (static_cast<std::uint64_t>(b.q) << n) | b.p; }

int sign_of_member(const PauliTranslation &m) { return m.relative_phase() == 2 ? -1 : 1; }

}  // namespace

StabilizerGroup::StabilizerGroup(int n, std::vector<PauliTranslation> gens) : n_(n), gens_(std::move(gens)) {
    if (n < 1 || n > Field::kMaxDegree) throw Error(ErrorCode::InvalidArgument, "qubit count must be in [1, 16]");
    if (static_cast<int>(gens_.size()) != n)
        throw Error(ErrorCode::InconsistentStabilizer, "need exactly n generators, got " + std::to_string(gens_.size()));
    for (const PauliTranslation &g : gens_) {
        if (g.n() != n) throw Error(ErrorCode::DimensionMismatch, "generator " + g.to_string() + " has the wrong length");
        if (!g.is_hermitian()) throw Error(ErrorCode::InconsistentStabilizer, "generator " + g.to_string() + " is not hermitian");
    }
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
            if (!commutes(gens_[i], gens_[j]))
                throw Error(ErrorCode::NonCommutingGenerators, gens_[i].to_string() + " and " + gens_[j].to_string() + " anticommute");
    const Bits N = Bits{1} << n;
    members_.resize(N);
    members_[0] = PauliTranslation::identity(n);
    for (Bits c = 1; c < N; ++c) {
        const int k = __builtin_ctz(c);
        members_[c] = compose(gens_[k], members_[c & (c - 1)]);
        if (members_[c].point().is_origin())
            throw Error(ErrorCode::InconsistentStabilizer, "generators are not independent");
    }
    // The span check above guarantees the points are distinct.
}

StabilizerGroup StabilizerGroup::from_generators(int n, const std::vector<PauliTranslation> &gens) {
    return StabilizerGroup(n, gens);
}

StabilizerGroup StabilizerGroup::parse(const std::vector<std::string> &gens) {
    if (gens.empty()) throw Error(ErrorCode::ParseError, "empty generator list");
    std::vector<PauliTranslation> parsed;
    for (const std::string &s : gens) parsed.push_back(PauliTranslation::parse(s));
    const int n = parsed.front().n();
    return StabilizerGroup(n, std::move(parsed));
}

StabilizerGroup StabilizerGroup::from_members(int n, const std::vector<PauliTranslation> &members) {
    const size_t N = size_t{1} << n;
    if (members.size() != N) throw Error(ErrorCode::InconsistentStabilizer, "a stabilizer group has exactly N members");
    std::map<std::uint64_t, PauliTranslation> by_point;
    for (const PauliTranslation &m : members) {
        if (m.n() != n) throw Error(ErrorCode::DimensionMismatch, "member " + m.to_string() + " has the wrong length");
        if (!m.is_hermitian()) throw Error(ErrorCode::InconsistentStabilizer, "member " + m.to_string() + " is not hermitian");
        if (!by_point.emplace(key(m.point(), n), m).second)
            throw Error(ErrorCode::InconsistentStabilizer, "repeated member " + m.to_string());
    }
    const auto id = by_point.find(0);
    if (id == by_point.end() || sign_of_member(id->second) != 1)
        throw Error(ErrorCode::InconsistentStabilizer, "the group must contain +I");
    for (const auto &[ka, a] : by_point)
        for (const auto &[kb, b] : by_point) {
            if (!commutes(a, b)) throw Error(ErrorCode::NonCommutingGenerators, a.to_string() + " and " + b.to_string() + " anticommute");
            const PauliTranslation ab = compose(a, b);
            const auto it = by_point.find(key(ab.point(), n));
            if (it == by_point.end()) throw Error(ErrorCode::InconsistentStabilizer, "members are not closed under products");
            if (it->second.relative_phase() != ab.relative_phase())
                throw Error(ErrorCode::InconsistentStabilizer,
                            "signs are not multiplicative: " + a.to_string() + " * " + b.to_string() + " != " + it->second.to_string());
        }
    // Greedy independent generators.
    std::vector<PauliTranslation> gens;
    std::set<std::uint64_t> span{0};
    for (const auto &[k, m] : by_point) {
        if (span.count(k)) continue;
        gens.push_back(m);
        std::vector<std::uint64_t> grown(span.begin(), span.end());
        for (std::uint64_t s : grown) span.insert(s ^ k);
    }
    return StabilizerGroup(n, std::move(gens));
}

bool StabilizerGroup::contains(BinaryPoint beta) const {
    return std::any_of(members_.begin(), members_.end(), [&](const PauliTranslation &m) { return m.point() == beta; });
}

int StabilizerGroup::g(BinaryPoint beta) const {
    for (const PauliTranslation &m : members_)
        if (m.point() == beta) return sign_of_member(m);
    throw Error(ErrorCode::InvalidArgument, "point is not in the stabilizer group");
}

Matrix StabilizerGroup::projector() const {
    require_dense(n_, "stabilizer projector");
    const Eigen::Index dim = Eigen::Index{1} << n_;
    Matrix p = Matrix::Identity(dim, dim);
    for (const PauliTranslation &g : gens_) p = (0.5 * (p + p * g.to_matrix())).eval();
    return p;
}

Vector StabilizerGroup::state() const {
    const Matrix p = projector();
    Eigen::Index best = 0;
    p.diagonal().real().maxCoeff(&best);
    Vector psi = p.col(best) / std::sqrt(p(best, best).real());
    fix_global_phase(psi);
    return psi;
}

// ---------------------------------------------------------------------------

WignerGrid stabilizer_wigner(const StabilizerGroup &group, const QuantumNet &net) {
    const int n = net.n();
    if (group.n() != n) throw Error(ErrorCode::DimensionMismatch, "group and net sizes differ");
    if (n > kMaxStabilizerGridQubits)
        throw Error(ErrorCode::DimensionTooLarge, "full stabilizer grids are limited to n <= " +
                                                      std::to_string(kMaxStabilizerGridQubits) + "; evaluate points instead");
    const Bits N = Bits{1} << n;
    const size_t total = static_cast<size_t>(N) * N;
    std::vector<long long> h(total, 0);
    for (const PauliTranslation &m : group.members()) {
        const BinaryPoint b = m.point();
        h[(static_cast<size_t>(b.p) << n) | b.q] = net.f(b) * sign_of_member(m);
    }
    kernels::walsh_hadamard(h);
    const PhaseSpace &space = net.space();
    std::vector<long long> num(total);
    for (Bits q = 0; q < N; ++q)
        for (Bits pb = 0; pb < N; ++pb)
            num[static_cast<size_t>(q) * N + space.momentum_from_bits(pb)] = h[(static_cast<size_t>(q) << n) | pb];
    return WignerGrid::exact(n, std::move(num));
}

long long stabilizer_wigner_numerator(const StabilizerGroup &group, const QuantumNet &net, PhasePoint alpha) {
    if (group.n() != net.n()) throw Error(ErrorCode::DimensionMismatch, "group and net sizes differ");
    const BinaryPoint a = net.space().to_binary(alpha);
    long long s = 0;
    for (const PauliTranslation &m : group.members()) {
        const BinaryPoint b = m.point();
        const int term = net.f(b) * sign_of_member(m);
        s += wedge(a, b) ? -term : term;
    }
    return s;
}

Rational stabilizer_wigner_at(const StabilizerGroup &group, const QuantumNet &net, PhasePoint alpha) {
    const long long N = static_cast<long long>(net.space().size());
    return Rational::reduced(stabilizer_wigner_numerator(group, net, alpha), N * N);
}

QuantumNet aligned_net(const StabilizerGroup &group, const PhaseSpace &space) {
    const int n = space.n();
    if (group.n() != n) throw Error(ErrorCode::DimensionMismatch, "group and phase space sizes differ");
    std::vector<SignMask> signs(space.num_striations(), 0);
    for (int s = 0; s < space.num_striations(); ++s) {
        const StriationLabel label = space.striation_label(s);
        // Rows (coefficients, rhs) of parity(c & eps) = [g != f with all signs +].
        std::vector<std::pair<Bits, int>> rows;
        for (const PauliTranslation &m : group.members()) {
            const BinaryPoint b = m.point();
            if (b.is_origin()) continue;
            const PhasePoint pt = space.from_binary(b);
            if (!(space.ray_through(pt) == label)) continue;
            const Bits c = label.kind == StriationKind::Vertical ? pt.p : pt.q;
            const int f0 = ray_eigenvalue(space, label, 0, b);
            rows.emplace_back(c, f0 != sign_of_member(m) ? 1 : 0);
        }
        // Gaussian elimination with pivots indexed by leading bit; free variables stay 0.
        std::vector<std::pair<Bits, int>> pivot(n, {0, 0});
        for (auto [c, r] : rows) {
            for (int bit = n - 1; bit >= 0; --bit)
                if (((c >> bit) & 1u) && pivot[bit].first) {
                    c ^= pivot[bit].first;
                    r ^= pivot[bit].second;
                }
            if (c == 0) {
                if (r) throw Error(ErrorCode::InconsistentStabilizer, "no net matches the stabilizer signs");
                continue;
            }
            pivot[31 - __builtin_clz(c)] = {c, r};
        }
        SignMask eps = 0;
        for (int bit = 0; bit < n; ++bit) {
            const auto [c, r] = pivot[bit];
            if (c && parity(c & eps) != r) eps |= Bits{1} << bit;
        }
        signs[s] = eps;
    }
    return QuantumNet::independent(space, std::move(signs));
}

std::vector<StabilizerGroup> all_stabilizer_groups(int n) {
    if (n < 1 || n > 3) throw Error(ErrorCode::DimensionTooLarge, "stabilizer enumeration supports n <= 3");
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    const Bits mask = (Bits{1} << n) - 1;
    auto point = [&](std::uint64_t k) { return BinaryPoint{static_cast<Bits>(k >> n), static_cast<Bits>(k) & mask}; };

    struct Partial {
        std::vector<std::uint64_t> gens;
        std::vector<std::uint64_t> span;  // sorted
    };
    std::map<std::vector<std::uint64_t>, Partial> level{{{0}, Partial{{}, {0}}}};
    for (int d = 0; d < n; ++d) {
        std::map<std::vector<std::uint64_t>, Partial> next;
        for (const auto &[span_key, part] : level) {
            for (std::uint64_t k = 1; k < total; ++k) {
                if (std::binary_search(part.span.begin(), part.span.end(), k)) continue;
                bool ok = true;
                for (std::uint64_t g : part.gens) ok = ok && wedge(point(g), point(k)) == 0;
                if (!ok) continue;
                std::vector<std::uint64_t> span = part.span;
                for (std::uint64_t s : part.span) span.push_back(s ^ k);
                std::sort(span.begin(), span.end());
                if (next.count(span)) continue;
                Partial grown{part.gens, span};
                grown.gens.push_back(k);
                next.emplace(std::move(span), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<StabilizerGroup> out;
    for (const auto &[span_key, part] : level)
        for (Bits signs = 0; signs < (Bits{1} << n); ++signs) {
            std::vector<PauliTranslation> gens;
            for (int i = 0; i < n; ++i) {
                PauliTranslation t = PauliTranslation::canonical(n, point(part.gens[i]));
                gens.push_back(((signs >> i) & 1u) ? t.negated() : t);
            }
            out.push_back(StabilizerGroup::from_generators(n, gens));
        }
    return out;
}

StabilizerGroup random_stabilizer_group(int n, std::mt19937_64 &rng) {
    if (n < 1 || n > Field::kMaxDegree) throw Error(ErrorCode::InvalidArgument, "qubit count must be in [1, 16]");
    const Bits mask = (Bits{1} << n) - 1;
    std::uniform_int_distribution<Bits> coord(0, mask);
    std::vector<PauliTranslation> gens;
    while (static_cast<int>(gens.size()) < n) {
        const BinaryPoint b{coord(rng), coord(rng)};
        if (b.is_origin()) continue;
        bool ok = true;
        for (const PauliTranslation &g : gens) ok = ok && wedge(g.point(), b) == 0;
        if (!ok) continue;
        PauliTranslation t = PauliTranslation::canonical(n, b);
        if (rng() & 1u) t = t.negated();
        std::vector<PauliTranslation> trial = gens;
        trial.push_back(t);
        // Reject points already in the span of the chosen generators.
        bool independent = true;
        const Bits count = Bits{1} << gens.size();
        for (Bits c = 0; c < count && independent; ++c) {
            BinaryPoint s{};
            for (size_t i = 0; i < gens.size(); ++i)
                if ((c >> i) & 1u) s = s + gens[i].point();
            independent = !(s == b);
        }
        if (independent) gens.push_back(t);
    }
    return StabilizerGroup::from_generators(n, gens);
}

}  // namespace gfw
