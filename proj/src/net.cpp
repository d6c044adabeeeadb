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

#include "gfwigner/net.hpp"

#include <sstream>

#include "gfwigner/error.hpp"

namespace gfw {

RayGenerators ray_generators(const PhaseSpace &space, StriationLabel label) {
    RayGenerators out{label, space.generator_points(label), {}};
    for (const PhasePoint &pt : out.points) out.gens.push_back(PauliTranslation::canonical(space.n(), space.to_binary(pt)));
    return out;
}

Matrix ray_projector(const RayGenerators &g, SignMask signs) {
    const int n = static_cast<int>(g.gens.size());
    require_dense(n, "ray projector");
    for (size_t i = 0; i < g.gens.size(); ++i)
        for (size_t j = i + 1; j < g.gens.size(); ++j)
            if (!commutes(g.gens[i], g.gens[j]))
                throw Error(ErrorCode::NonCommutingGenerators, "ray generators " + g.gens[i].to_string() + " and " +
                                                                   g.gens[j].to_string() + " anticommute");
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix p = Matrix::Identity(dim, dim);
    for (int k = 0; k < n; ++k) {
        const double eps = ((signs >> k) & 1u) ? -1.0 : 1.0;
        p = (0.5 * (p + eps * (p * g.gens[k].to_matrix()))).eval();
    }
    return p;
}

namespace {

// Coefficients of a ray point in terms of the ray's generator points.
Bits generator_coefficients(StriationLabel label, PhasePoint pt) {
    switch (label.kind) {
        case StriationKind::Horizontal: return pt.q;
        case StriationKind::Vertical: return pt.p;
        case StriationKind::Diagonal: return pt.q;
    }
    return 0;
}

// Eigenvalue of the canonical T for the product P = i^s X^a Z^b of generators,
// given P's eigenvalue `product_sign` on the ray state.
int canonical_eigenvalue(const PauliTranslation &product, int product_sign) {
    const int rel = product.relative_phase();
    // T = i^{-rel} P; hermitian products have rel in {0, 2}.
    if (rel & 1) throw Error(ErrorCode::NonCommutingGenerators, "generator product is not hermitian");
    return rel == 2 ? -product_sign : product_sign;
}

}  // namespace

int ray_eigenvalue(const PhaseSpace &space, StriationLabel label, SignMask signs, BinaryPoint beta) {
    if (beta.is_origin()) return 1;
    const PhasePoint pt = space.from_binary(beta);
    if (!space.contains(space.ray(label), pt))
        throw Error(ErrorCode::InvalidArgument, "point does not lie on ray " + label.to_string());
    const RayGenerators g = ray_generators(space, label);
    const Bits c = generator_coefficients(label, pt);
    PauliTranslation product = PauliTranslation::identity(space.n());
    int sign = 1;
    for (int k = 0; k < space.n(); ++k) {
        if (((c >> k) & 1u) == 0) continue;
        product = compose(product, g.gens[k]);
        if ((signs >> k) & 1u) sign = -sign;
    }
    if (product.point() != beta) throw Error(ErrorCode::InvalidArgument, "generator decomposition failed");
    return canonical_eigenvalue(product, sign);
}

// ---------------------------------------------------------------------------
// SqueezeCircuit

std::string Gate::to_string() const {
    std::ostringstream os;
    os << (kind == Kind::Swap ? "SWAP" : "CNOT") << " q" << a << " q" << b;
    return os.str();
}

SqueezeCircuit::SqueezeCircuit(const Field &field) : n_(field.n()) {
    // Swaps rotate the register so qubit k receives qubit k-1 (and qubit 0 the last
    // one); the CNOTs then add the feedback taps r_j.
    for (int j = 1; j < n_; ++j) gates_.push_back({Gate::Kind::Swap, 0, j});
    for (int j = 1; j < n_; ++j)
        if ((field.polynomial() >> j) & 1u) gates_.push_back({Gate::Kind::Cnot, 0, j});
}

PauliTranslation SqueezeCircuit::conjugate(const PauliTranslation &t) const {
    if (t.n() != n_) throw Error(ErrorCode::DimensionMismatch, "translation size differs from circuit");
    Bits x = t.x();
    Bits z = t.z();
    auto bit = [](Bits w, int k) { return (w >> k) & 1u; };
    auto swap_bits = [&](Bits w, int a, int b) {
        if (bit(w, a) != bit(w, b)) w ^= (Bits{1} << a) | (Bits{1} << b);
        return w;
    };
    for (const Gate &g : gates_) {
        if (g.kind == Gate::Kind::Swap) {
            x = swap_bits(x, g.a, g.b);
            z = swap_bits(z, g.a, g.b);
        } else {
            // X_c -> X_c X_t and Z_t -> Z_c Z_t; X and Z strings map without signs.
            if (bit(x, g.a)) x ^= Bits{1} << g.b;
            if (bit(z, g.b)) z ^= Bits{1} << g.a;
        }
    }
    return {n_, x, z, t.phase()};
}

Matrix SqueezeCircuit::matrix() const {
    require_dense(n_, "squeeze circuit matrix");
    const Bits dim = Bits{1} << n_;
    Matrix u = Matrix::Zero(dim, dim);
    for (Bits in = 0; in < dim; ++in) {
        // Work on qubit bit strings, then map back to dense indices.
        Bits s = 0;
        for (int k = 0; k < n_; ++k)
            if ((in >> (n_ - 1 - k)) & 1u) s |= Bits{1} << k;
        for (const Gate &g : gates_) {
            const Bits ba = (s >> g.a) & 1u;
            const Bits bb = (s >> g.b) & 1u;
            if (g.kind == Gate::Kind::Swap) {
                if (ba != bb) s ^= (Bits{1} << g.a) | (Bits{1} << g.b);
            } else if (ba) {
                s ^= Bits{1} << g.b;
            }
        }
        u(qubits_to_index(s, n_), in) = 1.0;
    }
    return u;
}

std::string SqueezeCircuit::describe() const {
    std::ostringstream os;
    for (size_t i = 0; i < gates_.size(); ++i) os << (i ? "\n" : "") << gates_[i].to_string();
    return os.str();
}

// ---------------------------------------------------------------------------
// QuantumNet

QuantumNet::QuantumNet(const PhaseSpace &space, NetMode mode, std::vector<SignMask> signs)
    : space_(space), mode_(mode), signs_(std::move(signs)) {
    const int n = space_.n();
    const Bits sign_limit = Bits{1} << n;
    for (SignMask s : signs_)
        if (s >= sign_limit) throw Error(ErrorCode::InvalidArgument, "sign mask has more than n bits");
    if (n > kFCacheQubits) return;

    const Bits N = space_.size();
    f_cache_.assign(static_cast<size_t>(N) * N, 0);
    f_cache_[0] = 1;
    std::vector<PauliTranslation> products(N);
    std::vector<int> product_signs(N);
    for (int s = 0; s < space_.num_striations(); ++s) {
        const StriationLabel label = space_.striation_label(s);
        const RayGenerators g = ray_generators(space_, label);
        products[0] = PauliTranslation::identity(n);
        product_signs[0] = 1;
        for (Bits c = 1; c < N; ++c) {
            const int k = __builtin_ctz(c);
            const Bits rest = c & (c - 1);
            products[c] = compose(g.gens[k], products[rest]);
            product_signs[c] = ((signs_[s] >> k) & 1u) ? -product_signs[rest] : product_signs[rest];
            const BinaryPoint beta = products[c].point();
            f_cache_[(static_cast<size_t>(beta.q) << n) | beta.p] =
                static_cast<signed char>(canonical_eigenvalue(products[c], product_signs[c]));
        }
    }
}

QuantumNet QuantumNet::independent(const PhaseSpace &space, std::vector<SignMask> signs) {
    if (static_cast<int>(signs.size()) != space.num_striations())
        throw Error(ErrorCode::InvalidArgument, "independent net needs one sign mask per striation (N+1)");
    return QuantumNet(space, NetMode::Independent, std::move(signs));
}

QuantumNet QuantumNet::covariant(const PhaseSpace &space, SignMask h, SignMask v, SignMask zero) {
    const int n = space.n();
    const int order = static_cast<int>(space.size()) - 1;
    const Field &field = space.field();
    const SqueezeCircuit u(field);

    std::vector<SignMask> signs(space.num_striations(), 0);
    signs[0] = h;
    signs[1] = v;
    signs[2] = zero;
    // u maps ray lambda onto ray lambda - 2; N - 1 is odd so the orbit of 0 covers every slope.
    int from = 0;
    for (int step = 1; step < order; ++step) {
        const int to = ((from - 2) % order + order) % order;
        SignMask derived = 0;
        for (int k = 0; k < n; ++k) {
            const PhasePoint preimage{field.omega_pow(k - 1), field.omega_pow(k - 1 + from)};
            const PhasePoint image{field.omega_pow(k), field.omega_pow(k + to)};
            const BinaryPoint pre_bits = space.to_binary(preimage);
            const PauliTranslation moved = u.conjugate(PauliTranslation::canonical(n, pre_bits));
            if (moved.point() != space.to_binary(image))
                throw Error(ErrorCode::InvalidArgument, "squeeze circuit does not act as (q, p) -> (w q, p / w)");
            const int sigma = moved.relative_phase() == 2 ? -1 : 1;
            const int f_pre = ray_eigenvalue(space, StriationLabel::diagonal(from), signs[2 + from], pre_bits);
            if (sigma * f_pre < 0) derived |= SignMask{1} << k;
        }
        signs[2 + to] = derived;
        from = to;
    }
    return QuantumNet(space, NetMode::Covariant, std::move(signs));
}

int QuantumNet::f(BinaryPoint beta) const {
    const int n = space_.n();
    if (!f_cache_.empty()) return f_cache_[(static_cast<size_t>(beta.q) << n) | beta.p];
    if (beta.is_origin()) return 1;
    const StriationLabel label = space_.ray_through(space_.from_binary(beta));
    return ray_eigenvalue(space_, label, signs(label), beta);
}

std::string QuantumNet::fingerprint() const {
    std::ostringstream os;
    os << (mode_ == NetMode::Covariant ? "cov" : "ind") << ":" << Field::format_polynomial(space_.field().polynomial(), n());
    for (int s = 0; s < space_.num_striations(); ++s) os << (s == 0 ? ":" : ".") << std::hex << signs_[s];
    return os.str();
}

// ---------------------------------------------------------------------------
// States

Vector ray_state(const QuantumNet &net, StriationLabel label) {
    const Matrix p = ray_projector(ray_generators(net.space(), label), net.signs(label));
    Eigen::Index best = 0;
    p.diagonal().real().maxCoeff(&best);
    const double weight = p(best, best).real();
    if (weight <= 0.0) throw Error(ErrorCode::NonCommutingGenerators, "ray projector vanishes");
    Vector psi = p.col(best) / std::sqrt(weight);
    fix_global_phase(psi);
    return psi;
}

Vector line_state(const QuantumNet &net, const Line &line) {
    const PhaseSpace &space = net.space();
    const StriationLabel label = space.striation_of(line);
    const PhasePoint d = space.displacement_to(line);
    Vector psi = PauliTranslation::canonical(space.n(), space.to_binary(d)).apply(ray_state(net, label));
    fix_global_phase(psi);
    return psi;
}

Matrix line_projector(const QuantumNet &net, const Line &line) {
    const Vector psi = line_state(net, line);
    return psi * psi.adjoint();
}

std::vector<MubBasis> mub_states(const QuantumNet &net) {
    const PhaseSpace &space = net.space();
    require_dense(space.n(), "MUB states");
    const int count = space.num_striations();
    std::vector<MubBasis> bases(count);
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < count; ++s) {
        const Striation st = space.striation(space.striation_label(s));
        const Vector ray = ray_state(net, st.label);
        MubBasis basis{st.label, st.lines, {}};
        basis.states.reserve(st.lines.size());
        for (const Line &l : st.lines) {
            Vector psi = PauliTranslation::canonical(space.n(), space.to_binary(space.displacement_to(l))).apply(ray);
            fix_global_phase(psi);
            basis.states.push_back(std::move(psi));
        }
        bases[s] = std::move(basis);
    }
    return bases;
}

}  // namespace gfw
