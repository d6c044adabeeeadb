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

#include "gfwigner/galois.hpp"

#include <array>
#include <istream>
#include <sstream>

#include "gfwigner/error.hpp"

namespace gfw {

// ---------------------------------------------------------------------------
// BinaryMatrix

BinaryMatrix BinaryMatrix::identity(int n) {
    BinaryMatrix m(n);
    for (int i = 0; i < n; ++i) m.rows_[i] = Bits{1} << i;
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::vector<Bits> rows) {
    BinaryMatrix m(static_cast<int>(rows.size()));
    m.rows_ = std::move(rows);
    return m;
}

void BinaryMatrix::set(int r, int c, bool v) noexcept {
    if (v) {
        rows_[r] |= Bits{1} << c;
    } else {
        rows_[r] &= ~(Bits{1} << c);
    }
}

Bits BinaryMatrix::apply(Bits v) const noexcept {
    Bits out = 0;
    for (int i = 0; v != 0; ++i, v >>= 1) {
        if (v & 1u) out ^= rows_[i];
    }
    return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (get(r, c)) t.rows_[c] |= Bits{1} << r;
    return t;
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix &o) const {
    if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "binary matrix product");
    BinaryMatrix out(n_);
    for (int r = 0; r < n_; ++r) out.rows_[r] = o.apply(rows_[r]);
    return out;
}

BinaryMatrix BinaryMatrix::pow(std::uint64_t e) const {
    BinaryMatrix result = identity(n_);
    BinaryMatrix base = *this;
    while (e != 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

BinaryMatrix BinaryMatrix::inverse() const {
    // Gauss-Jordan on [A | I].
    std::vector<Bits> a = rows_;
    std::vector<Bits> inv = identity(n_).rows_;
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r) {
            if ((a[r] >> col) & 1u) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw Error(ErrorCode::SingularBasis, "matrix is not invertible over GF(2)");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        for (int r = 0; r < n_; ++r) {
            if (r != col && ((a[r] >> col) & 1u)) {
                a[r] ^= a[col];
                inv[r] ^= inv[col];
            }
        }
    }
    return from_rows(std::move(inv));
}

int BinaryMatrix::rank() const {
    std::vector<Bits> a = rows_;
    int rank = 0;
    for (int col = 0; col < 32 && rank < n_; ++col) {
        int pivot = -1;
        for (int r = rank; r < n_; ++r) {
            if ((a[r] >> col) & 1u) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < n_; ++r)
            if (r != rank && ((a[r] >> col) & 1u)) a[r] ^= a[rank];
        ++rank;
    }
    return rank;
}

int BinaryMatrix::trace() const noexcept {
    int t = 0;
    for (int i = 0; i < n_; ++i) t ^= static_cast<int>(get(i, i));
    return t;
}

// ---------------------------------------------------------------------------
// Field

namespace {

// Low-to-high coefficient words, bit n set. n = 2, 3, 4 follow the orderings
// tabulated for the phase-space construction; the rest are standard choices.
constexpr std::array<Bits, Field::kMaxDegree + 1> kDefaultPolynomials = {
    0,
    0b11,                   // x + 1
    0b111,                  // x^2 + x + 1
    0b1101,                 // x^3 + x^2 + 1
    0b10011,                // x^4 + x + 1
    0b100101,               // x^5 + x^2 + 1
    0b1000011,              // x^6 + x + 1
    0b10000011,             // x^7 + x + 1
    0b100011101,            // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,           // x^9 + x^4 + 1
    0b10000001001,          // x^10 + x^3 + 1
    0b100000000101,         // x^11 + x^2 + 1
    0b1000001010011,        // x^12 + x^6 + x^4 + x + 1
    0b10000000011011,       // x^13 + x^4 + x^3 + x + 1
    0b100010001000011,      // x^14 + x^10 + x^6 + x + 1
    0b1000000000000011,     // x^15 + x + 1
    0b10001000000001011,    // x^16 + x^12 + x^3 + x + 1
};

}  // namespace

namespace detail {

struct FieldTables {
    int n = 0;
    Bits size = 0;
    Bits poly = 0;
    Bits trace_form = 0;  // bit i = tr(omega^i)
    std::vector<Bits> exp;          // exp[j] = omega^j, j in [0, N-2]
    std::vector<std::uint32_t> log;  // log[x] for x != 0
    BinaryMatrix companion;
};

}  // namespace detail

namespace {

Bits times_omega(Bits x, int n, Bits poly) {
    x <<= 1;
    if ((x >> n) & 1u) x ^= poly;
    return x;
}

std::shared_ptr<detail::FieldTables> build_tables(int n, Bits poly) {
    if (n < 1 || n > Field::kMaxDegree)
        throw Error(ErrorCode::InvalidArgument, "field degree must be in [1, 16], got " + std::to_string(n));
    if (poly >> (n + 1) != 0 || ((poly >> n) & 1u) == 0)
        throw Error(ErrorCode::DegreeMismatch, "polynomial does not have degree " + std::to_string(n));
    if ((poly & 1u) == 0)
        throw Error(ErrorCode::NonPrimitivePolynomial, "constant term must be 1");

    auto t = std::make_shared<detail::FieldTables>();
    t->n = n;
    t->size = Bits{1} << n;
    t->poly = poly;
    const Bits order = t->size - 1;
    t->exp.resize(order);
    t->log.assign(t->size, 0);

    // Walk the powers of omega; a primitive polynomial returns to 1 first at N-1.
    Bits x = 1;
    for (Bits j = 0; j < order; ++j) {
        if (j > 0 && x == 1)
            throw Error(ErrorCode::NonPrimitivePolynomial,
                        Field::polynomial_string(poly, n) + " has order " + std::to_string(j));
        t->exp[j] = x;
        t->log[x] = j;
        x = times_omega(x, n, poly);
    }
    if (x != 1)
        throw Error(ErrorCode::NonPrimitivePolynomial, Field::polynomial_string(poly, n) + " is not primitive");

    t->companion = BinaryMatrix(n);
    for (int i = 0; i + 1 < n; ++i) t->companion.set(i, i + 1, true);
    for (int j = 0; j < n; ++j) t->companion.set(n - 1, j, (poly >> j) & 1u);
    return t;
}

Bits tables_mul(const detail::FieldTables &t, Bits x, Bits y) {
    if (x == 0 || y == 0) return 0;
    std::uint32_t e = t.log[x] + t.log[y];
    const std::uint32_t order = t.size - 1;
    if (e >= order) e -= order;
    return t.exp[e];
}

Bits frobenius_trace(const detail::FieldTables &t, Bits x) {
    Bits sum = 0;
    Bits power = x;
    for (int i = 0; i < t.n; ++i) {
        sum ^= power;
        power = tables_mul(t, power, power);
    }
    // The sum always lands in GF(2) = {0, 1}.
    return sum;
}

}  // namespace

Field::Field(int n) : Field(n, default_polynomial(n)) {}

Field::Field(int n, Bits poly) {
    auto t = build_tables(n, poly);
    for (int i = 0; i < n; ++i)
        if (frobenius_trace(*t, Bits{1} << i) != 0) t->trace_form |= Bits{1} << i;
    t_ = std::move(t);
}

Bits Field::default_polynomial(int n) {
    if (n < 1 || n > kMaxDegree)
        throw Error(ErrorCode::InvalidArgument, "no built-in polynomial for degree " + std::to_string(n));
    return kDefaultPolynomials[n];
}

Bits Field::parse_polynomial(std::string_view s) {
    if (s.empty() || s.size() > kMaxDegree + 1)
        throw Error(ErrorCode::ParseError, "polynomial must have 2..17 binary coefficients");
    return parse_bit_string(s);
}

std::string Field::format_polynomial(Bits poly, int n) { return bit_string(poly, n + 1); }

std::string Field::polynomial_string(Bits poly, int n) {
    std::string out;
    for (int i = n; i >= 0; --i) {
        if (((poly >> i) & 1u) == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += "1";
        } else if (i == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

int Field::n() const noexcept { return t_->n; }
Bits Field::size() const noexcept { return t_->size; }
Bits Field::polynomial() const noexcept { return t_->poly; }

Bits Field::mul(Bits x, Bits y) const noexcept { return tables_mul(*t_, x, y); }

Bits Field::inv(Bits x) const {
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
    const std::uint32_t order = t_->size - 1;
    return t_->exp[(order - t_->log[x]) % order];
}

Bits Field::omega_pow(long long j) const noexcept {
    const long long order = t_->size - 1;
    long long e = j % order;
    if (e < 0) e += order;
    return t_->exp[static_cast<size_t>(e)];
}

int Field::log(Bits x) const {
    if (x == 0 || x >= t_->size) throw Error(ErrorCode::InvalidArgument, "log of zero or out-of-range element");
    return static_cast<int>(t_->log[x]);
}

int Field::trace(Bits x) const noexcept { return parity(x & t_->trace_form); }

int Field::trace_by_frobenius(Bits x) const noexcept { return static_cast<int>(frobenius_trace(*t_, x)); }

FieldElement Field::element(Bits bits) const {
    if (bits >= size()) throw Error(ErrorCode::InvalidArgument, "element has more than n bits");
    return FieldElement(*this, bits);
}
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }
FieldElement Field::omega(long long power) const { return FieldElement(*this, omega_pow(power)); }

const BinaryMatrix &Field::companion() const noexcept { return t_->companion; }

BinaryMatrix Field::multiplication_matrix(Bits x) const {
    BinaryMatrix m(n());
    for (int i = 0; i < n(); ++i) {
        const Bits r = mul(Bits{1} << i, x);
        for (int j = 0; j < n(); ++j) m.set(i, j, (r >> j) & 1u);
    }
    return m;
}

std::vector<Bits> Field::dual_basis(std::span<const Bits> basis) const {
    const int dim = n();
    if (static_cast<int>(basis.size()) != dim)
        throw Error(ErrorCode::SingularBasis, "basis must have exactly n elements");
    if (BinaryMatrix::from_rows({basis.begin(), basis.end()}).rank() != dim)
        throw Error(ErrorCode::SingularBasis, "basis elements are linearly dependent");
    // Gram matrix of the trace form; the dual is its inverse applied to the basis.
    BinaryMatrix gram(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) gram.set(i, j, trace(mul(basis[i], basis[j])));
    const BinaryMatrix coeffs = gram.inverse();
    std::vector<Bits> dual(dim, 0);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
            if (coeffs.get(i, k)) dual[i] ^= basis[k];
    return dual;
}

std::vector<Bits> Field::power_ordering(const BinaryMatrix &generator, Bits seed) const {
    if (seed == 0) throw Error(ErrorCode::ZeroSeed, "power ordering needs a nonzero seed");
    if (generator.size() != n()) throw Error(ErrorCode::DimensionMismatch, "generator size differs from n");
    std::vector<Bits> out;
    out.reserve(size() - 1);
    Bits v = seed;
    for (Bits j = 0; j + 1 < size(); ++j) {
        out.push_back(v);
        v = generator.apply(v);
    }
    return out;
}

std::vector<Bits> Field::axis_elements() const {
    std::vector<Bits> out;
    out.reserve(size());
    out.push_back(0);
    out.insert(out.end(), t_->exp.begin(), t_->exp.end());
    return out;
}

std::uint32_t Field::axis_index(Bits x) const { return x == 0 ? 0 : t_->log[x] + 1; }

bool Field::operator==(const Field &o) const noexcept {
    return t_ == o.t_ || (t_->n == o.t_->n && t_->poly == o.t_->poly);
}

std::string bit_string(Bits x, int n) {
    std::string s(static_cast<size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((x >> i) & 1u) s[i] = '1';
    return s;
}

Bits parse_bit_string(std::string_view s) {
    if (s.size() > 32) throw Error(ErrorCode::ParseError, "bit string too long");
    Bits x = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            x |= Bits{1} << i;
        } else if (s[i] != '0') {
            throw Error(ErrorCode::ParseError, "bit string may only contain 0 and 1: " + std::string(s));
        }
    }
    return x;
}

std::map<int, Bits> read_polynomial_table(std::istream &in) {
    std::map<int, Bits> table;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream words(line);
        std::string word;
        if (!(words >> word)) continue;
        const Bits poly = Field::parse_polynomial(word);
        table[static_cast<int>(word.size()) - 1] = poly;
    }
    return table;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(Field field, Bits bits) : field_(std::move(field)), bits_(bits) {}

FieldElement FieldElement::inverse() const { return FieldElement(field_, field_.inv(bits_)); }

namespace {
void require_same_field(const FieldElement &a, const FieldElement &b) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "elements belong to different fields");
}
}  // namespace

FieldElement operator+(const FieldElement &a, const FieldElement &b) {
    require_same_field(a, b);
    return FieldElement(a.field_, a.bits_ ^ b.bits_);
}

FieldElement operator*(const FieldElement &a, const FieldElement &b) {
    require_same_field(a, b);
    return FieldElement(a.field_, a.field_.mul(a.bits_, b.bits_));
}

bool operator==(const FieldElement &a, const FieldElement &b) { return a.field() == b.field() && a.bits_ == b.bits_; }

}  // namespace gfw
