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

#include "gfwigner/phasespace.hpp"

#include "gfwigner/error.hpp"

namespace gfw {

std::string StriationLabel::to_string() const {
    switch (kind) {
        case StriationKind::Horizontal: return "h";
        case StriationKind::Vertical: return "v";
        case StriationKind::Diagonal: return std::to_string(slope);
    }
    return "?";
}

StriationLabel StriationLabel::parse(const std::string &text) {
    if (text == "h") return horizontal();
    if (text == "v") return vertical();
    try {
        size_t used = 0;
        const int slope = std::stoi(text, &used);
        if (used == text.size() && slope >= 0) return diagonal(slope);
    } catch (const std::exception &) {
    }
    throw Error(ErrorCode::ParseError, "unknown striation label '" + text + "'");
}

PhaseSpace::PhaseSpace(Field field) : field_(std::move(field)) {
    const Bits N = size();
    p_to_bits_.assign(N, 0);
    bits_to_p_.assign(N, 0);
    const auto dual_orbit = field_.power_ordering(field_.companion().transpose(), 1);
    for (Bits j = 0; j + 1 < N; ++j) {
        const Bits p = field_.omega_pow(j);
        p_to_bits_[p] = dual_orbit[j];
        bits_to_p_[dual_orbit[j]] = p;
    }
    momentum_basis_.resize(n());
    for (int i = 0; i < n(); ++i) momentum_basis_[i] = bits_to_p_[Bits{1} << i];

    std::vector<Bits> canonical(n());
    for (int i = 0; i < n(); ++i) canonical[i] = Bits{1} << i;
    const auto dual = field_.dual_basis(canonical);
    momentum_scale_ = (field_.log(momentum_basis_[0]) - field_.log(dual[0]) + static_cast<int>(N - 1)) %
                      static_cast<int>(N - 1);
}

int PhaseSpace::wedge_field(PhasePoint a, PhasePoint b) const noexcept {
    const Bits area = field_.mul(a.q, b.p) ^ field_.mul(b.q, a.p);
    return field_.trace(field_.mul(field_.omega_pow(-momentum_scale_), area));
}

PhasePoint PhaseSpace::point_at_axis(std::uint32_t q_index, std::uint32_t p_index) const {
    if (q_index >= size() || p_index >= size()) throw Error(ErrorCode::InvalidArgument, "axis index out of range");
    auto at = [&](std::uint32_t k) { return k == 0 ? Bits{0} : field_.omega_pow(k - 1); };
    return {at(q_index), at(p_index)};
}

StriationLabel PhaseSpace::striation_label(int index) const {
    if (index < 0 || index >= num_striations()) throw Error(ErrorCode::InvalidArgument, "striation index out of range");
    if (index == 0) return StriationLabel::horizontal();
    if (index == 1) return StriationLabel::vertical();
    return StriationLabel::diagonal(index - 2);
}

int PhaseSpace::striation_index(StriationLabel label) const {
    switch (label.kind) {
        case StriationKind::Horizontal: return 0;
        case StriationKind::Vertical: return 1;
        case StriationKind::Diagonal:
            if (label.slope < 0 || label.slope >= static_cast<int>(size()) - 1)
                throw Error(ErrorCode::InvalidArgument, "diagonal slope out of range");
            return 2 + label.slope;
    }
    return -1;
}

Line PhaseSpace::make_line(Bits a, Bits b, Bits c) const {
    if (a == 0 && b == 0) throw Error(ErrorCode::InvalidArgument, "line needs (a, b) != (0, 0)");
    const Bits lead = a != 0 ? a : b;
    const Bits s = field_.inv(lead);
    return {field_.mul(a, s), field_.mul(b, s), field_.mul(c, s)};
}

Line PhaseSpace::ray(StriationLabel label) const {
    switch (label.kind) {
        case StriationKind::Horizontal: return {0, 1, 0};
        case StriationKind::Vertical: return {1, 0, 0};
        case StriationKind::Diagonal:
            striation_index(label);
            // p = w^j q  <=>  q + w^-j p = 0
            return {1, field_.omega_pow(-label.slope), 0};
    }
    return {};
}

Line PhaseSpace::line(StriationLabel label, Bits offset) const {
    Line l = ray(label);
    l.c = offset;
    return l;
}

StriationLabel PhaseSpace::striation_of(const Line &l) const {
    if (l.a == 0) return StriationLabel::horizontal();
    if (l.b == 0) return StriationLabel::vertical();
    const Line m = make_line(l.a, l.b, l.c);
    const int order = static_cast<int>(size()) - 1;
    return StriationLabel::diagonal((order - field_.log(m.b)) % order);
}

StriationLabel PhaseSpace::ray_through(PhasePoint point) const {
    if (point.is_origin()) throw Error(ErrorCode::InvalidArgument, "every ray passes through the origin");
    if (point.q == 0) return StriationLabel::vertical();
    if (point.p == 0) return StriationLabel::horizontal();
    const int order = static_cast<int>(size()) - 1;
    return StriationLabel::diagonal(((field_.log(point.p) - field_.log(point.q)) % order + order) % order);
}

std::vector<Striation> PhaseSpace::all_striations() const {
    std::vector<Striation> out;
    out.reserve(num_striations());
    for (int i = 0; i < num_striations(); ++i) out.push_back(striation(striation_label(i)));
    return out;
}

Striation PhaseSpace::striation(StriationLabel label) const {
    Striation s{label, {}};
    s.lines.reserve(size());
    for (Bits c : field_.axis_elements()) s.lines.push_back(line(label, c));
    return s;
}

bool PhaseSpace::contains(const Line &l, PhasePoint point) const noexcept {
    return (field_.mul(l.a, point.q) ^ field_.mul(l.b, point.p)) == l.c;
}

std::vector<PhasePoint> PhaseSpace::points_on(const Line &l) const {
    std::vector<PhasePoint> pts;
    pts.reserve(size());
    // Parametrize by whichever coordinate is free.
    for (Bits t = 0; t < size(); ++t) {
        if (l.b != 0) {
            const Bits p = field_.div(l.c ^ field_.mul(l.a, t), l.b);
            pts.push_back({t, p});
        } else {
            const Bits q = field_.div(l.c, l.a);
            pts.push_back({q, t});
        }
    }
    return pts;
}

Intersection PhaseSpace::intersect(const Line &l1, const Line &l2) const {
    const Line m1 = make_line(l1.a, l1.b, l1.c);
    const Line m2 = make_line(l2.a, l2.b, l2.c);
    const Bits det = field_.mul(m1.a, m2.b) ^ field_.mul(m2.a, m1.b);
    if (det == 0) {
        return {m1.c == m2.c ? Intersection::Kind::SameLine : Intersection::Kind::Parallel, {}};
    }
    const Bits q = field_.div(field_.mul(m1.c, m2.b) ^ field_.mul(m2.c, m1.b), det);
    const Bits p = field_.div(field_.mul(m1.a, m2.c) ^ field_.mul(m2.a, m1.c), det);
    return {Intersection::Kind::Point, {q, p}};
}

Line PhaseSpace::translate(const Line &l, PhasePoint d) const {
    return {l.a, l.b, l.c ^ field_.mul(l.a, d.q) ^ field_.mul(l.b, d.p)};
}

PhasePoint PhaseSpace::displacement_to(const Line &l) const {
    const Line m = make_line(l.a, l.b, l.c);
    // With b != 0 the smallest solution has q = 0; otherwise the line is q = c.
    if (m.b != 0) return {0, field_.div(m.c, m.b)};
    return {m.c, 0};
}

std::vector<PhasePoint> PhaseSpace::generator_points(StriationLabel label) const {
    std::vector<PhasePoint> pts;
    pts.reserve(n());
    for (int k = 0; k < n(); ++k) {
        const Bits wk = field_.omega_pow(k);
        switch (label.kind) {
            case StriationKind::Horizontal: pts.push_back({wk, 0}); break;
            case StriationKind::Vertical: pts.push_back({0, wk}); break;
            case StriationKind::Diagonal: pts.push_back({wk, field_.omega_pow(k + label.slope)}); break;
        }
    }
    return pts;
}

}  // namespace gfw
