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

#include "gfwigner/pauli.hpp"

#include <cmath>

#include "gfwigner/error.hpp"

namespace gfw {

void require_dense(int n, const char *what) {
    if (n > kMaxDenseQubits)
        throw Error(ErrorCode::DimensionTooLarge,
                    std::string(what) + " is limited to " + std::to_string(kMaxDenseQubits) + " qubits");
}

void fix_global_phase(Vector &v, double tol) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v[i]);
        if (mag > tol) {
            v *= std::conj(v[i]) / mag;
            v[i] = Complex(std::abs(v[i]), 0.0);
            return;
        }
    }
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix shapes");
    return (a - b).cwiseAbs().maxCoeff();
}

namespace {

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// T|j> = phase * (-1)^{popcount(j & sign_mask)} |j ^ flip_mask> on dense indices.
struct DenseAction {
    Bits flip_mask;
    Bits sign_mask;
    Complex phase;
};

DenseAction dense_action(const PauliTranslation &t) {
    // X^x Z^z |j>: Z acts first and contributes (-1)^{z.j}.
    return {qubits_to_index(t.x(), t.n()), qubits_to_index(t.z(), t.n()), kIPow[t.phase()]};
}

inline double sign_of(Bits j, Bits mask) { return parity(j & mask) ? -1.0 : 1.0; }

}  // namespace

PauliTranslation::PauliTranslation(int n, Bits x, Bits z, int phase) : n_(n), x_(x), z_(z), phase_(phase & 3) {
    if (n < 1 || n > 16) throw Error(ErrorCode::InvalidArgument, "qubit count must be in [1, 16]");
    const Bits mask = (Bits{1} << n) - 1;
    if ((x & ~mask) != 0 || (z & ~mask) != 0)
        throw Error(ErrorCode::InvalidArgument, "Pauli bits exceed the qubit count");
}

PauliTranslation PauliTranslation::canonical(int n, Bits x, Bits z) { return {n, x, z, popcount(x & z)}; }

PauliTranslation PauliTranslation::parse(std::string_view text) {
    std::string_view s = text;
    int rel = 0;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        if (s.front() == '-') rel = 2;
        s.remove_prefix(1);
    }
    if (!s.empty() && s.front() == 'i') {
        rel += 1;
        s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 16) throw Error(ErrorCode::ParseError, "bad Pauli string '" + std::string(text) + "'");
    Bits x = 0;
    Bits z = 0;
    for (size_t k = 0; k < s.size(); ++k) {
        switch (s[k]) {
            case 'I': break;
            case 'X': x |= Bits{1} << k; break;
            case 'Z': z |= Bits{1} << k; break;
            case 'Y':
                x |= Bits{1} << k;
                z |= Bits{1} << k;
                break;
            default: throw Error(ErrorCode::ParseError, "bad Pauli letter in '" + std::string(text) + "'");
        }
    }
    const int n = static_cast<int>(s.size());
    return {n, x, z, rel + popcount(x & z)};
}

std::string PauliTranslation::to_string() const {
    static const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[relative_phase()];
    for (int k = 0; k < n_; ++k) {
        const bool xb = (x_ >> k) & 1u;
        const bool zb = (z_ >> k) & 1u;
        out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

Matrix PauliTranslation::to_matrix() const {
    require_dense(n_, "dense Pauli matrix");
    const Bits dim = Bits{1} << n_;
    const DenseAction act = dense_action(*this);
    Matrix m = Matrix::Zero(dim, dim);
    for (Bits j = 0; j < dim; ++j) m(j ^ act.flip_mask, j) = act.phase * sign_of(j, act.sign_mask);
    return m;
}

Vector PauliTranslation::apply(const Vector &psi) const {
    const Bits dim = Bits{1} << n_;
    if (psi.size() != static_cast<Eigen::Index>(dim)) throw Error(ErrorCode::DimensionMismatch, "state dimension");
    const DenseAction act = dense_action(*this);
    Vector out(dim);
    for (Bits j = 0; j < dim; ++j) out[j ^ act.flip_mask] = act.phase * sign_of(j, act.sign_mask) * psi[j];
    return out;
}

Matrix PauliTranslation::conjugate(const Matrix &m) const {
    const Bits dim = Bits{1} << n_;
    if (m.rows() != static_cast<Eigen::Index>(dim) || m.cols() != m.rows())
        throw Error(ErrorCode::DimensionMismatch, "operator dimension");
    const DenseAction act = dense_action(*this);
    // The global phase cancels between T and T^dagger.
    Matrix out(dim, dim);
    for (Bits c = 0; c < dim; ++c) {
        const double sc = sign_of(c, act.sign_mask);
        for (Bits r = 0; r < dim; ++r) out(r ^ act.flip_mask, c ^ act.flip_mask) = sign_of(r, act.sign_mask) * sc * m(r, c);
    }
    return out;
}

PauliTranslation compose(const PauliTranslation &a, const PauliTranslation &b) {
    if (a.n() != b.n()) throw Error(ErrorCode::DimensionMismatch, "composing translations on different qubit counts");
    // X^a1 Z^b1 X^a2 Z^b2 = (-1)^{b1.a2} X^(a1+a2) Z^(b1+b2)
    const int phase = a.phase() + b.phase() + 2 * popcount(a.z() & b.x());
    return {a.n(), a.x() ^ b.x(), a.z() ^ b.z(), phase};
}

bool commutes(const PauliTranslation &a, const PauliTranslation &b) {
    if (a.n() != b.n()) throw Error(ErrorCode::DimensionMismatch, "commutator of translations on different qubit counts");
    return wedge(a.point(), b.point()) == 0;
}

std::vector<CommutingClass> commuting_classes(const PhaseSpace &space) {
    const int n = space.n();
    const Bits N = space.size();
    const BinaryMatrix M = space.field().companion();
    const BinaryMatrix Mt = M.transpose();

    auto build = [&](StriationLabel label, Bits seed_q, Bits seed_p) {
        CommutingClass cls{label, {PauliTranslation::identity(n)}};
        Bits q = seed_q;
        Bits p = seed_p;
        for (Bits j = 0; j + 1 < N; ++j) {
            cls.members.push_back(PauliTranslation::canonical(n, q, p));
            q = M.apply(q);
            p = Mt.apply(p);
        }
        return cls;
    };

    std::vector<CommutingClass> classes(space.num_striations());
    classes[0] = build(StriationLabel::horizontal(), 1, 0);
    classes[1] = build(StriationLabel::vertical(), 0, 1);
    for (Bits b = 1; b < N; ++b) {
        // The seed (1, b) is the ray point (1, p(b)), so its slope is log p(b).
        const StriationLabel label = space.ray_through(space.from_binary({1, b}));
        classes[space.striation_index(label)] = build(label, 1, b);
    }
    return classes;
}

}  // namespace gfw
