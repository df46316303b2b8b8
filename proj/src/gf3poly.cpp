/*
   Copyright 2026 The ternopt Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ternopt/gf3poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>

#include "ternopt/errors.hpp"

namespace ternopt {

namespace {

constexpr std::size_t kBits = 64;

std::size_t blocks_for_degree(std::size_t deg) { return deg / kBits + 1; }

std::uint8_t digit_at(std::span<const Gf3Block> v, std::size_t i)
{
    const std::size_t w = i / kBits;
    if (w >= v.size()) {
        return 0;
    }
    const std::uint64_t bit = std::uint64_t{1} << (i % kBits);
    if (v[w].ones & bit) {
        return 1;
    }
    return (v[w].twos & bit) ? 2 : 0;
}

void set_digit(std::vector<Gf3Block>& v, std::size_t i, std::uint8_t d)
{
    const std::uint64_t bit = std::uint64_t{1} << (i % kBits);
    Gf3Block& b = v[i / kBits];
    b.ones &= ~bit;
    b.twos &= ~bit;
    if (d == 1) {
        b.ones |= bit;
    } else if (d == 2) {
        b.twos |= bit;
    }
}

/// acc += (negate ? -1 : 1) * src * x^shift. Output words past the end of
/// acc are dropped; callers size acc so those are zero.
void add_shifted(std::vector<Gf3Block>& acc, std::span<const Gf3Block> src, std::size_t shift, bool negate)
{
    const std::size_t q = shift / kBits;
    const std::size_t s = shift % kBits;
    const std::size_t n = src.size();
    if (s == 0) {
        const std::size_t lim = std::min(n, acc.size() > q ? acc.size() - q : 0);
        for (std::size_t k = 0; k < lim; ++k) {
            acc[q + k] = add(acc[q + k], negate ? neg(src[k]) : src[k]);
        }
        return;
    }
    Gf3Block carry{};
    for (std::size_t k = 0; k <= n; ++k) {
        if (q + k >= acc.size()) {
            break;
        }
        const Gf3Block cur = k < n ? src[k] : Gf3Block{};
        Gf3Block w{(cur.ones << s) | (carry.ones >> (kBits - s)), (cur.twos << s) | (carry.twos >> (kBits - s))};
        carry = cur;
        if (negate) {
            w = neg(w);
        }
        acc[q + k] = add(acc[q + k], w);
    }
}

/// Reduces v in place modulo b (deg b >= 0), optionally recording the
/// quotient digits.
void reduce_in_place(std::vector<Gf3Block>& v, int top, const Gf3Poly& b, std::vector<std::uint8_t>* quotient)
{
    const int db = b.degree();
    const std::uint8_t inv = b.leading();  // 1^-1 = 1, 2^-1 = 2
    for (int i = top; i >= db; --i) {
        const std::uint8_t c = digit_at(v, static_cast<std::size_t>(i));
        if (c == 0) {
            continue;
        }
        const std::uint8_t qc = static_cast<std::uint8_t>((c * inv) % 3);
        if (quotient != nullptr) {
            (*quotient)[static_cast<std::size_t>(i - db)] = qc;
        }
        add_shifted(v, b.blocks(), static_cast<std::size_t>(i - db), qc == 1);
    }
}

int normalized_degree(std::vector<Gf3Block>& v)
{
    while (!v.empty() && v.back().ones == 0 && v.back().twos == 0) {
        v.pop_back();
    }
    if (v.empty()) {
        return Gf3Poly::kZeroDegree;
    }
    const std::uint64_t top = v.back().ones | v.back().twos;
    return static_cast<int>((v.size() - 1) * kBits + (kBits - 1 - std::countl_zero(top)));
}

}  // namespace

Gf3Poly::Gf3Poly(std::vector<Gf3Block> blocks) : blocks_(std::move(blocks)) { normalize(); }

void Gf3Poly::normalize() { degree_ = normalized_degree(blocks_); }

Gf3Poly Gf3Poly::from_blocks(std::vector<Gf3Block> blocks)
{
    for (const auto& b : blocks) {
        if (b.ones & b.twos) {
            throw std::invalid_argument("Gf3Poly: overlapping digit masks");
        }
    }
    return Gf3Poly(std::move(blocks));
}

Gf3Poly Gf3Poly::from_digits(std::span<const std::uint8_t> digits)
{
    std::vector<Gf3Block> v(digits.empty() ? 0 : blocks_for_degree(digits.size() - 1));
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] > 2) {
            throw std::invalid_argument("Gf3Poly: digit out of range");
        }
        set_digit(v, i, digits[i]);
    }
    return Gf3Poly(std::move(v));
}

Gf3Poly Gf3Poly::constant(int c) { return monomial(c, 0); }

Gf3Poly Gf3Poly::monomial(int c, std::size_t k)
{
    const int r = ((c % 3) + 3) % 3;
    if (r == 0) {
        return {};
    }
    std::vector<Gf3Block> v(blocks_for_degree(k));
    set_digit(v, k, static_cast<std::uint8_t>(r));
    return Gf3Poly(std::move(v));
}

Gf3Poly Gf3Poly::from_text(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("Gf3Poly: empty polynomial text");
    }
    std::vector<std::uint8_t> d;
    d.reserve(text.size());
    for (char ch : text) {
        if (ch < '0' || ch > '2') {
            throw std::invalid_argument("Gf3Poly: bad digit '" + std::string(1, ch) + "'");
        }
        d.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return from_digits(d);
}

Gf3Poly Gf3Poly::parse(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("Gf3Poly: empty polynomial");
    }
    if (s.find_first_not_of("012") == std::string::npos) {
        return from_text(s);
    }

    // Algebraic form: [+-][coef][*]x[^k] terms, or bare constants.
    std::map<std::size_t, int> terms;
    std::size_t pos = 0;
    const auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("Gf3Poly: cannot parse '") + std::string(text) + "': " + why);
    };
    const auto read_int = [&](std::size_t& p) -> std::optional<unsigned long long> {
        const std::size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            ++p;
        }
        if (p == start) {
            return std::nullopt;
        }
        if (p - start > 18) {
            fail("integer too long");
        }
        return std::stoull(s.substr(start, p - start));
    };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail("expected '+' or '-'");
        }
        const auto coef = read_int(pos);
        if (pos < s.size() && s[pos] == '*') {
            if (!coef) {
                fail("dangling '*'");
            }
            ++pos;
        }
        std::size_t exp = 0;
        if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
            ++pos;
            exp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                const auto e = read_int(pos);
                if (!e) {
                    fail("missing exponent");
                }
                exp = static_cast<std::size_t>(*e);
            }
        } else if (!coef) {
            fail("empty term");
        }
        const int c = static_cast<int>(coef.value_or(1) % 3);
        terms[exp] = (terms[exp] + sign * c + 9) % 3;
    }
    std::size_t top = 0;
    for (const auto& [e, c] : terms) {
        top = std::max(top, e);
    }
    std::vector<std::uint8_t> d(top + 1, 0);
    for (const auto& [e, c] : terms) {
        d[e] = static_cast<std::uint8_t>(c);
    }
    return from_digits(d);
}

std::string Gf3Poly::to_text() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out(static_cast<std::size_t>(degree_) + 1, '0');
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<char>('0' + coeff(i));
    }
    return out;
}

std::string Gf3Poly::to_algebraic() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = degree_; i >= 0; --i) {
        const std::uint8_t c = coeff(static_cast<std::size_t>(i));
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '+';
        }
        if (i == 0) {
            out += static_cast<char>('0' + c);
            continue;
        }
        if (c == 2) {
            out += '2';
        }
        out += 'x';
        if (i > 1) {
            out += '^' + std::to_string(i);
        }
    }
    return out;
}

std::uint8_t Gf3Poly::coeff(std::size_t i) const { return digit_at(blocks_, i); }

std::vector<std::uint8_t> Gf3Poly::digits() const
{
    std::vector<std::uint8_t> d(static_cast<std::size_t>(degree_ + 1));
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = coeff(i);
    }
    return d;
}

std::size_t Gf3Poly::weight() const
{
    std::size_t w = 0;
    for (const auto& b : blocks_) {
        w += static_cast<std::size_t>(std::popcount(b.ones | b.twos));
    }
    return w;
}

Gf3Poly Gf3Poly::monic() const { return leading() == 2 ? scaled(2) : *this; }

Gf3Poly Gf3Poly::scaled(int c) const
{
    const int r = ((c % 3) + 3) % 3;
    if (r == 0) {
        return {};
    }
    if (r == 1) {
        return *this;
    }
    std::vector<Gf3Block> v(blocks_.size());
    std::transform(blocks_.begin(), blocks_.end(), v.begin(), [](Gf3Block b) { return neg(b); });
    return Gf3Poly(std::move(v));
}

Gf3Poly Gf3Poly::shifted(std::size_t k) const
{
    if (is_zero()) {
        return {};
    }
    std::vector<Gf3Block> v(blocks_for_degree(static_cast<std::size_t>(degree_) + k));
    add_shifted(v, blocks_, k, false);
    return Gf3Poly(std::move(v));
}

Gf3Poly Gf3Poly::derivative() const
{
    if (degree_ <= 0) {
        return {};
    }
    std::vector<Gf3Block> v(blocks_for_degree(static_cast<std::size_t>(degree_ - 1)));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(degree_); ++i) {
        const std::uint8_t c = coeff(i);
        if (c != 0 && i % 3 != 0) {
            set_digit(v, i - 1, static_cast<std::uint8_t>((c * (i % 3)) % 3));
        }
    }
    return Gf3Poly(std::move(v));
}

Gf3Poly Gf3Poly::cubed() const
{
    if (is_zero()) {
        return {};
    }
    std::vector<Gf3Block> v(blocks_for_degree(3 * static_cast<std::size_t>(degree_)));
    for (std::size_t w = 0; w < blocks_.size(); ++w) {
        std::uint64_t mask = blocks_[w].ones | blocks_[w].twos;
        while (mask != 0) {
            const int bit = std::countr_zero(mask);
            mask &= mask - 1;
            const std::size_t i = w * kBits + static_cast<std::size_t>(bit);
            set_digit(v, 3 * i, (blocks_[w].ones >> bit) & 1 ? 1 : 2);
        }
    }
    return Gf3Poly(std::move(v));
}

Gf3Poly Gf3Poly::cube_root() const
{
    if (is_zero()) {
        return {};
    }
    std::vector<Gf3Block> v(blocks_for_degree(static_cast<std::size_t>(degree_) / 3));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(degree_); ++i) {
        const std::uint8_t c = coeff(i);
        if (c == 0) {
            continue;
        }
        if (i % 3 != 0) {
            throw std::invalid_argument("Gf3Poly::cube_root: not a cube");
        }
        set_digit(v, i / 3, c);
    }
    return Gf3Poly(std::move(v));
}

std::uint64_t Gf3Poly::hash() const
{
    std::uint64_t h = 1469598103934665603ULL;
    const auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(degree_ + 1));
    for (const auto& b : blocks_) {
        mix(b.ones);
        mix(b.twos);
    }
    return h;
}

Gf3Poly operator+(const Gf3Poly& a, const Gf3Poly& b)
{
    std::vector<Gf3Block> v(std::max(a.blocks_.size(), b.blocks_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Gf3Block x = i < a.blocks_.size() ? a.blocks_[i] : Gf3Block{};
        const Gf3Block y = i < b.blocks_.size() ? b.blocks_[i] : Gf3Block{};
        v[i] = add(x, y);
    }
    return Gf3Poly(std::move(v));
}

Gf3Poly operator-(const Gf3Poly& a) { return a.scaled(2); }

Gf3Poly operator-(const Gf3Poly& a, const Gf3Poly& b)
{
    std::vector<Gf3Block> v(std::max(a.blocks_.size(), b.blocks_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Gf3Block x = i < a.blocks_.size() ? a.blocks_[i] : Gf3Block{};
        const Gf3Block y = i < b.blocks_.size() ? b.blocks_[i] : Gf3Block{};
        v[i] = sub(x, y);
    }
    return Gf3Poly(std::move(v));
}

Gf3Poly operator*(const Gf3Poly& a, const Gf3Poly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    const bool a_sparser = a.weight() <= b.weight();
    const Gf3Poly& scan = a_sparser ? a : b;
    const Gf3Poly& other = a_sparser ? b : a;
    std::vector<Gf3Block> acc(blocks_for_degree(static_cast<std::size_t>(a.degree_ + b.degree_)));
    for (std::size_t w = 0; w < scan.blocks_.size(); ++w) {
        std::uint64_t mask = scan.blocks_[w].ones | scan.blocks_[w].twos;
        while (mask != 0) {
            const int bit = std::countr_zero(mask);
            mask &= mask - 1;
            const bool is_two = (scan.blocks_[w].twos >> bit) & 1;
            add_shifted(acc, other.blocks_, w * kBits + static_cast<std::size_t>(bit), is_two);
        }
    }
    return Gf3Poly(std::move(acc));
}

bool canonical_less(const Gf3Poly& a, const Gf3Poly& b)
{
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    for (int i = a.degree(); i >= 0; --i) {
        const auto ca = a.coeff(static_cast<std::size_t>(i));
        const auto cb = b.coeff(static_cast<std::size_t>(i));
        if (ca != cb) {
            return ca < cb;
        }
    }
    return false;
}

DivRem divrem(const Gf3Poly& a, const Gf3Poly& b)
{
    if (b.is_zero()) {
        throw std::domain_error("divrem: division by the zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return {Gf3Poly{}, a};
    }
    std::vector<Gf3Block> r(a.blocks().begin(), a.blocks().end());
    std::vector<std::uint8_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    reduce_in_place(r, a.degree(), b, &q);
    return {Gf3Poly::from_digits(q), Gf3Poly::from_blocks(std::move(r))};
}

Gf3Poly operator/(const Gf3Poly& a, const Gf3Poly& b) { return divrem(a, b).quotient; }

Gf3Poly operator%(const Gf3Poly& a, const Gf3Poly& b)
{
    if (b.is_zero()) {
        throw std::domain_error("mod: division by the zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return a;
    }
    std::vector<Gf3Block> r(a.blocks().begin(), a.blocks().end());
    reduce_in_place(r, a.degree(), b, nullptr);
    return Gf3Poly::from_blocks(std::move(r));
}

Gf3Poly gcd(const Gf3Poly& a, const Gf3Poly& b)
{
    if (a.is_zero() && b.is_zero()) {
        throw std::invalid_argument("gcd: both inputs are zero");
    }
    Gf3Poly x = a;
    Gf3Poly y = b;
    while (!y.is_zero()) {
        Gf3Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Gf3Poly mulmod(const Gf3Poly& a, const Gf3Poly& b, const Gf3Poly& modulus) { return (a * b) % modulus; }

Gf3Poly modpow(const Gf3Poly& base, const BigNat& exp, const Gf3Poly& modulus)
{
    if (modulus.is_zero()) {
        throw std::domain_error("modpow: zero modulus");
    }
    if (modulus.degree() < 1) {
        throw std::invalid_argument("modpow: modulus must have degree >= 1");
    }
    const Gf3Poly b = base % modulus;
    Gf3Poly r = Gf3Poly::constant(1);
    for (std::size_t i = exp.bit_length(); i-- > 0;) {
        r = mulmod(r, r, modulus);
        if (exp.test_bit(i)) {
            r = mulmod(r, b, modulus);
        }
    }
    return r;
}

FrobeniusMap::FrobeniusMap(Gf3Poly modulus) : modulus_(std::move(modulus))
{
    if (modulus_.is_zero()) {
        throw std::domain_error("FrobeniusMap: zero modulus");
    }
    const int n = modulus_.degree();
    if (n < 1 || n > kMaxMatrixDegree) {
        return;
    }
    row_words_ = blocks_for_degree(static_cast<std::size_t>(n - 1));
    rows_.assign(static_cast<std::size_t>(n) * row_words_, Gf3Block{});
    std::vector<Gf3Block> cur(blocks_for_degree(static_cast<std::size_t>(n + 2)));
    set_digit(cur, 0, 1);
    std::vector<Gf3Block> next(cur.size());
    for (int i = 0; i < n; ++i) {
        std::copy_n(cur.begin(), row_words_, rows_.begin() + static_cast<std::ptrdiff_t>(i * row_words_));
        // next = x^3 * cur mod f; only digits n..n+2 need reducing
        std::fill(next.begin(), next.end(), Gf3Block{});
        add_shifted(next, std::span<const Gf3Block>(cur.data(), row_words_), 3, false);
        reduce_in_place(next, n + 2, modulus_, nullptr);
        std::swap(cur, next);
    }
}

Gf3Poly FrobeniusMap::cube(const Gf3Poly& h) const
{
    const Gf3Poly r = h.degree() >= modulus_.degree() ? h % modulus_ : h;
    if (rows_.empty()) {
        return r.cubed() % modulus_;
    }
    std::vector<Gf3Block> acc(row_words_);
    const auto blocks = r.blocks();
    for (std::size_t w = 0; w < blocks.size(); ++w) {
        std::uint64_t mask = blocks[w].ones | blocks[w].twos;
        while (mask != 0) {
            const int bit = std::countr_zero(mask);
            mask &= mask - 1;
            const std::size_t i = w * kBits + static_cast<std::size_t>(bit);
            const bool is_two = (blocks[w].twos >> bit) & 1;
            const Gf3Block* row = rows_.data() + i * row_words_;
            for (std::size_t k = 0; k < row_words_; ++k) {
                acc[k] = add(acc[k], is_two ? neg(row[k]) : row[k]);
            }
        }
    }
    return Gf3Poly::from_blocks(std::move(acc));
}

Gf3Poly frobenius_power(unsigned k, const Gf3Poly& modulus)
{
    if (modulus.is_zero()) {
        throw std::domain_error("frobenius_power: zero modulus");
    }
    const FrobeniusMap frob(modulus);
    Gf3Poly h = Gf3Poly::x() % modulus;
    for (unsigned i = 0; i < k; ++i) {
        h = frob.cube(h);
    }
    return h;
}

Gf3Poly binomial_power_poly(const BigNat& e, std::uint64_t cap)
{
    if (e > BigNat(cap)) {
        throw CapabilityExceeded("degree too large, use witness mode: e = " + e.to_decimal() +
                                 " exceeds expansion cap " + std::to_string(cap));
    }
    const std::uint64_t ev = e.to_u64();
    // Lucas: C(e, k) mod 3 is the product of digit binomials, nonzero only
    // when every base-3 digit of k is at most the matching digit of e.
    std::vector<std::pair<std::uint64_t, std::uint8_t>> terms{{0, 1}};
    std::uint64_t place = 1;
    for (std::uint64_t rest = ev; rest != 0; rest /= 3, place *= 3) {
        const std::uint64_t d = rest % 3;
        if (d == 0) {
            continue;
        }
        const std::size_t n = terms.size();
        for (std::size_t j = 0; j < n; ++j) {
            const auto [k, c] = terms[j];
            terms.emplace_back(k + place, static_cast<std::uint8_t>((c * d) % 3));  // C(d,1) = d
            if (d == 2) {
                terms.emplace_back(k + 2 * place, c);  // C(2,2) = 1
            }
        }
    }
    std::vector<std::uint8_t> digits(ev + 1, 0);
    for (const auto& [k, c] : terms) {
        digits[k] = c;
    }
    return Gf3Poly::from_digits(digits);
}

bool is_irreducible(const Gf3Poly& f)
{
    if (f.degree() < 1) {
        throw std::invalid_argument("is_irreducible: input must have degree >= 1");
    }
    const Gf3Poly g = f.monic();
    const int n = g.degree();
    if (n == 1) {
        return true;
    }
    std::vector<int> checkpoints;
    int rest = n;
    for (int p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            checkpoints.push_back(n / p);
            while (rest % p == 0) {
                rest /= p;
            }
        }
    }
    if (rest > 1) {
        checkpoints.push_back(n / rest);
    }
    const FrobeniusMap frob(g);
    const Gf3Poly x = Gf3Poly::x();
    Gf3Poly h = x;
    for (int j = 1; j <= n; ++j) {
        h = frob.cube(h);
        if (std::find(checkpoints.begin(), checkpoints.end(), j) != checkpoints.end()) {
            if (!gcd(h - x, g).is_one()) {
                return false;
            }
        }
    }
    return h == x;
}

std::size_t count_roots_in_subfield(const Gf3Poly& f, unsigned m)
{
    if (f.is_zero()) {
        throw std::domain_error("count_roots_in_subfield: zero polynomial");
    }
    if (m == 0) {
        throw std::invalid_argument("count_roots_in_subfield: m must be >= 1");
    }
    if (f.degree() == 0) {
        return 0;
    }
    const Gf3Poly g = f.monic();
    const Gf3Poly d = frobenius_power(m, g) - (Gf3Poly::x() % g);
    return static_cast<std::size_t>(gcd(d, g).degree());
}

std::vector<Gf3Poly> read_poly_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open polynomial file: " + path.string());
    }
    std::vector<Gf3Poly> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        out.push_back(Gf3Poly::parse(line));
    }
    return out;
}

}  // namespace ternopt
