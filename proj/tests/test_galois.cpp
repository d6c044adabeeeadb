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

#include <sstream>

#include "gfwigner/error.hpp"
#include "gfwigner/galois.hpp"
#include "oracles.hpp"

using namespace gfw;

TEST_CASE("built-in polynomials") {
    CHECK(Field::default_polynomial(2) == Field::parse_polynomial("111"));
    CHECK(Field::default_polynomial(3) == Field::parse_polynomial("1011"));
    CHECK(Field::default_polynomial(4) == Field::parse_polynomial("11001"));
    CHECK(Field::polynomial_string(Field::default_polynomial(3), 3) == "x^3+x^2+1");
    CHECK(Field::polynomial_string(Field::default_polynomial(4), 4) == "x^4+x+1");
    for (int n = 1; n <= Field::kMaxDegree; ++n) CHECK_NOTHROW(Field{n});
}

TEST_CASE("omega squared in GF(4)") {
    const Field f(2);
    CHECK(f.mul(0b10, 0b10) == 0b11);
    CHECK(bit_string(f.mul(parse_bit_string("01"), parse_bit_string("01")), 2) == "11");
}

TEST_CASE("multiplication matches carry-less reduction") {
    for (int n = 1; n <= 7; ++n) {
        const Field f(n);
        for (Bits a = 0; a < f.size(); ++a)
            for (Bits b = 0; b < f.size(); ++b) REQUIRE(f.mul(a, b) == oracle::gf_mul(a, b, f.polynomial(), n));
    }
    std::mt19937_64 rng(3);
    for (int n : {10, 13, 16}) {
        const Field f(n);
        std::uniform_int_distribution<Bits> u(0, f.mask());
        for (int t = 0; t < 2000; ++t) {
            const Bits a = u(rng), b = u(rng);
            REQUIRE(f.mul(a, b) == oracle::gf_mul(a, b, f.polynomial(), n));
        }
    }
}

TEST_CASE("inverse, division and logs") {
    for (int n = 1; n <= 8; ++n) {
        const Field f(n);
        for (Bits a = 1; a < f.size(); ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.omega_pow(f.log(a)) == a);
        }
        CHECK(f.omega_pow(-1) == f.inv(f.omega_pow(1)));
        CHECK_THROWS_AS(f.inv(0), Error);
    }
}

TEST_CASE("trace agrees with the Frobenius sum and the matrix trace") {
    for (int n = 1; n <= 8; ++n) {
        const Field f(n);
        for (Bits x = 0; x < f.size(); ++x) {
            REQUIRE(f.trace(x) == oracle::gf_trace(x, f.polynomial(), n));
            REQUIRE(f.trace(x) == f.multiplication_matrix(x).trace());
            REQUIRE(f.trace(x) == f.trace_by_frobenius(x));
        }
    }
}

TEST_CASE("trace is linear and onto") {
    for (int n = 1; n <= 6; ++n) {
        const Field f(n);
        int ones = 0;
        for (Bits x = 0; x < f.size(); ++x) {
            ones += f.trace(x);
            for (Bits y = 0; y < f.size(); ++y) REQUIRE(f.trace(x ^ y) == (f.trace(x) ^ f.trace(y)));
        }
        CHECK(ones == static_cast<int>(f.size() / 2));
    }
}

TEST_CASE("dual basis") {
    for (int n = 1; n <= 8; ++n) {
        const Field f(n);
        std::vector<Bits> basis;
        for (int i = 0; i < n; ++i) basis.push_back(Bits{1} << i);
        const auto dual = f.dual_basis(basis);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(f.trace(f.mul(dual[i], basis[j])) == (i == j ? 1 : 0));
        CHECK(f.dual_basis(dual) == basis);
    }
    const Field f(3);
    const std::vector<Bits> dependent{1, 2, 3};
    CHECK_THROWS_AS(f.dual_basis(dependent), Error);
}

TEST_CASE("companion matrix represents omega") {
    for (int n = 2; n <= 8; ++n) {
        const Field f(n);
        const BinaryMatrix &m = f.companion();
        CHECK(m == f.multiplication_matrix(f.omega_pow(1)));
        for (Bits a = 0; a < f.size(); ++a) CHECK(m.apply(a) == f.mul(a, f.omega_pow(1)));
        CHECK(m.pow(f.size() - 1) == BinaryMatrix::identity(n));
        // pi(M^T) = 0 as well: the transpose has the same order.
        CHECK(m.transpose().pow(f.size() - 1) == BinaryMatrix::identity(n));
        for (Bits k = 1; k < f.size() - 1; ++k) REQUIRE(!(m.pow(k) == BinaryMatrix::identity(n)));
    }
}

TEST_CASE("power orderings visit every nonzero string once") {
    for (int n = 1; n <= 12; ++n) {
        const Field f(n);
        for (const BinaryMatrix &g : {f.companion(), f.companion().transpose()}) {
            std::vector<Bits> seq = f.power_ordering(g, 1);
            REQUIRE(seq.size() == f.size() - 1);
            std::sort(seq.begin(), seq.end());
            for (Bits k = 0; k < seq.size(); ++k) REQUIRE(seq[k] == k + 1);
        }
    }
    CHECK_THROWS_AS(Field(3).power_ordering(Field(3).companion(), 0), Error);
}

TEST_CASE("orderings for GF(8)") {
    const Field f(3);
    const std::vector<std::string> canonical{"100", "010", "001", "101", "111", "110", "011"};
    const std::vector<std::string> dual{"100", "001", "011", "111", "110", "101", "010"};
    const auto c = f.power_ordering(f.companion(), 1);
    const auto d = f.power_ordering(f.companion().transpose(), 1);
    for (size_t k = 0; k < canonical.size(); ++k) {
        CHECK(bit_string(c[k], 3) == canonical[k]);
        CHECK(bit_string(d[k], 3) == dual[k]);
    }
}

TEST_CASE("rejects bad polynomials") {
    auto code = [](int n, const char *bits) {
        try {
            Field(n, Field::parse_polynomial(bits));
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code(4, "11111") == ErrorCode::NonPrimitivePolynomial);  // irreducible, order 5
    CHECK(code(4, "10001") == ErrorCode::NonPrimitivePolynomial);  // (x+1)^4
    CHECK(code(3, "11001") == ErrorCode::DegreeMismatch);
    CHECK_THROWS_AS(Field(0), Error);
    CHECK_THROWS_AS(Field(17), Error);
    CHECK_THROWS_AS(Field::parse_polynomial("10a1"), Error);
}

TEST_CASE("alternative primitive polynomial") {
    const Field f(3, Field::parse_polynomial("1101"));  // x^3 + x + 1
    for (Bits a = 0; a < 8; ++a)
        for (Bits b = 0; b < 8; ++b) CHECK(f.mul(a, b) == oracle::gf_mul(a, b, 0b1011, 3));
    CHECK(!(f == Field(3)));
}

TEST_CASE("polynomial table file") {
    std::istringstream in("# comment\n111\n\n1101  # x^3+x+1\n11001\n");
    const auto table = read_polynomial_table(in);
    CHECK(table.size() == 3);
    CHECK(table.at(3) == Field::parse_polynomial("1101"));
    std::istringstream bad("1x1\n");
    CHECK_THROWS_AS(read_polynomial_table(bad), Error);
}

TEST_CASE("binary matrices") {
    const Field f(5);
    const BinaryMatrix m = f.multiplication_matrix(f.omega_pow(7));
    CHECK(m * m.inverse() == BinaryMatrix::identity(5));
    CHECK(m.rank() == 5);
    BinaryMatrix s(3);
    s.set(0, 0, true);
    s.set(1, 0, true);
    CHECK(s.rank() == 1);
    CHECK_THROWS_AS(s.inverse(), Error);
}

TEST_CASE("field elements") {
    const Field f(4);
    const FieldElement w = f.omega();
    CHECK((w * w * w * w).bits() == (w + f.one()).bits());
    CHECK((w * w.inverse()) == f.one());
    CHECK(w.log() == 1);
    CHECK_THROWS_AS(w + Field(3).one(), Error);
    CHECK(f.axis_index(0) == 0);
    CHECK(f.axis_index(f.omega_pow(5)) == 6);
    CHECK(f.axis_elements()[6] == f.omega_pow(5));
}
