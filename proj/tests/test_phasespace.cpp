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

#include <set>

#include "gfwigner/error.hpp"
#include "gfwigner/phasespace.hpp"
#include "oracles.hpp"

using namespace gfw;

TEST_CASE("momentum basis is a scaled dual basis") {
    for (int n = 1; n <= 6; ++n) {
        const PhaseSpace space{Field(n)};
        const Field &f = space.field();
        const Bits scale = f.omega_pow(-space.momentum_scale_exponent());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Bits fi = space.momentum_basis()[i];
                CHECK(oracle::gf_trace(oracle::gf_mul(oracle::gf_mul(scale, fi, f.polynomial(), n), Bits{1} << j, f.polynomial(), n),
                                       f.polynomial(), n) == (i == j ? 1 : 0));
            }
        for (Bits p = 0; p < space.size(); ++p) {
            Bits sum = 0;
            for (int i = 0; i < n; ++i)
                if ((space.momentum_bits(p) >> i) & 1u) sum ^= space.momentum_basis()[i];
            CHECK(sum == p);
            CHECK(space.momentum_from_bits(space.momentum_bits(p)) == p);
        }
    }
}

TEST_CASE("binary wedge equals the trace form") {
    for (int n = 1; n <= 4; ++n) {
        const PhaseSpace space{Field(n)};
        const Field &f = space.field();
        const Bits scale = f.omega_pow(-space.momentum_scale_exponent());
        const Bits N = space.size();
        for (Bits q1 = 0; q1 < N; ++q1)
            for (Bits p1 = 0; p1 < N; ++p1)
                for (Bits q2 = 0; q2 < N; ++q2)
                    for (Bits p2 = 0; p2 < N; ++p2) {
                        const Bits cross = oracle::gf_mul(q1, p2, f.polynomial(), n) ^ oracle::gf_mul(q2, p1, f.polynomial(), n);
                        const int expected = oracle::gf_trace(oracle::gf_mul(scale, cross, f.polynomial(), n), f.polynomial(), n);
                        REQUIRE(space.wedge_field({q1, p1}, {q2, p2}) == expected);
                        REQUIRE(wedge(space.to_binary({q1, p1}), space.to_binary({q2, p2})) == expected);
                    }
    }
}

TEST_CASE("unit vectors are symplectic pairs") {
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            CHECK(wedge({Bits{1} << i, 0}, {0, Bits{1} << j}) == (i == j ? 1 : 0));
            CHECK(wedge({Bits{1} << i, 0}, {Bits{1} << j, 0}) == 0);
        }
}

TEST_CASE("striations partition the grid") {
    for (int n = 1; n <= 4; ++n) {
        const PhaseSpace space{Field(n)};
        const Bits N = space.size();
        const auto all = space.all_striations();
        REQUIRE(static_cast<int>(all.size()) == space.num_striations());
        for (const Striation &st : all) {
            REQUIRE(st.lines.size() == N);
            CHECK(space.contains(st.lines[0], {0, 0}));
            std::set<std::pair<Bits, Bits>> seen;
            for (const Line &l : st.lines) {
                const auto pts = space.points_on(l);
                CHECK(pts.size() == N);
                for (const PhasePoint &p : pts) seen.insert({p.q, p.p});
                CHECK(space.striation_of(l) == st.label);
            }
            CHECK(seen.size() == static_cast<size_t>(N) * N);
        }
    }
}

TEST_CASE("two lines of different striations meet once") {
    for (int n = 1; n <= 3; ++n) {
        const PhaseSpace space{Field(n)};
        std::vector<Line> lines;
        for (const Striation &st : space.all_striations()) lines.insert(lines.end(), st.lines.begin(), st.lines.end());
        for (const Line &a : lines)
            for (const Line &b : lines) {
                int common = 0;
                for (const PhasePoint &p : space.points_on(a)) common += space.contains(b, p);
                const Intersection x = space.intersect(a, b);
                if (a == b) {
                    CHECK(x.kind == Intersection::Kind::SameLine);
                } else if (common == 0) {
                    CHECK(x.kind == Intersection::Kind::Parallel);
                } else {
                    REQUIRE(common == 1);
                    CHECK(x.kind == Intersection::Kind::Point);
                    CHECK((space.contains(a, x.point) && space.contains(b, x.point)));
                }
            }
    }
}

TEST_CASE("lines are normalized") {
    const PhaseSpace space{Field(3)};
    const Field &f = space.field();
    const Bits w = f.omega_pow(1);
    const Line l = space.make_line(w, f.mul(w, 5), f.mul(w, 3));
    CHECK(l.a == 1);
    CHECK(l.b == 5);
    CHECK(l.c == 3);
    CHECK_THROWS_AS(space.make_line(0, 0, 1), Error);
}

TEST_CASE("labels and indices") {
    const PhaseSpace space{Field(3)};
    for (int i = 0; i < space.num_striations(); ++i) {
        const StriationLabel l = space.striation_label(i);
        CHECK(space.striation_index(l) == i);
        CHECK(StriationLabel::parse(l.to_string()) == l);
    }
    CHECK(space.striation_label(0) == StriationLabel::horizontal());
    CHECK(space.striation_label(1) == StriationLabel::vertical());
    CHECK(space.striation_label(2) == StriationLabel::diagonal(0));
    CHECK_THROWS_AS(StriationLabel::parse("x"), Error);
    CHECK_THROWS_AS(space.striation_index(StriationLabel::diagonal(7)), Error);
}

TEST_CASE("rays through points") {
    const PhaseSpace space{Field(3)};
    for (Bits q = 0; q < 8; ++q)
        for (Bits p = 0; p < 8; ++p) {
            if (q == 0 && p == 0) continue;
            const StriationLabel l = space.ray_through({q, p});
            CHECK(space.contains(space.ray(l), {q, p}));
        }
    CHECK(space.ray_through({3, 0}) == StriationLabel::horizontal());
    CHECK(space.ray_through({0, 3}) == StriationLabel::vertical());
    const Bits w = space.field().omega_pow(1);
    CHECK(space.ray_through({w, space.field().mul(w, space.field().omega_pow(4))}) == StriationLabel::diagonal(4));
}

TEST_CASE("translations and displacements") {
    const PhaseSpace space{Field(3)};
    for (const Striation &st : space.all_striations())
        for (const Line &l : st.lines) {
            const PhasePoint d = space.displacement_to(l);
            CHECK(space.translate(st.lines[0], d) == l);
            CHECK(space.contains(l, d));
            for (const PhasePoint &p : space.points_on(st.lines[0])) CHECK(space.contains(l, p + d));
        }
}

TEST_CASE("generator points span the ray") {
    for (int n = 1; n <= 5; ++n) {
        const PhaseSpace space{Field(n)};
        for (const Striation &st : space.all_striations()) {
            const auto gens = space.generator_points(st.label);
            REQUIRE(static_cast<int>(gens.size()) == n);
            std::set<std::pair<Bits, Bits>> span;
            for (Bits mask = 0; mask < space.size(); ++mask) {
                PhasePoint s;
                for (int k = 0; k < n; ++k)
                    if ((mask >> k) & 1u) s = s + gens[k];
                CHECK(space.contains(st.lines[0], s));
                span.insert({s.q, s.p});
            }
            CHECK(span.size() == space.size());
        }
    }
}

TEST_CASE("axis positions") {
    const PhaseSpace space{Field(2)};
    CHECK(space.point_at_axis(0, 0) == PhasePoint{0, 0});
    CHECK(space.point_at_axis(3, 1) == PhasePoint{space.field().omega_pow(2), 1});
}
