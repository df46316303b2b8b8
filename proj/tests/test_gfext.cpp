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

#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ternopt/errors.hpp"
#include "ternopt/gfext.hpp"
#include "ternopt/numthy.hpp"

using namespace ternopt;

namespace {

Gf3Poly P(const char* s) { return Gf3Poly::parse(s); }

// Multiplicative order of x modulo f, by stepping.
std::uint64_t order_of_x(const oracle::Poly& f)
{
    const oracle::Poly one{1};
    oracle::Poly cur = oracle::mod({0, 1}, f);
    for (std::uint64_t k = 1;; ++k) {
        if (cur == one) return k;
        cur = oracle::mulmod(cur, {0, 1}, f);
    }
}

}  // namespace

TEST_CASE("context construction")
{
    const FieldContext c5 = build_context(5, P("x^5+2x+1"));
    CHECK(c5.m() == 5);
    CHECK(c5.order() == BigNat(242));
    const FieldContext c7 = build_context(7, P("x^7+2x^2+1"));
    CHECK(c7.order() == BigNat(2186));
    CHECK(build_context(1).modulus() == P("x+1"));
    CHECK_THROWS_AS(build_context(0), std::invalid_argument);
    CHECK_THROWS_AS(build_context(65), std::invalid_argument);
    CHECK_THROWS_AS(build_context(2, P("x^2+1")), std::invalid_argument);  // irreducible, order 4
    CHECK_THROWS_AS(build_context(2, P("x^2+2x+1")), std::invalid_argument);
    CHECK_THROWS_AS(build_context(3, P("x^2+1")), std::invalid_argument);
}

TEST_CASE("default modulus is the first primitive polynomial in base-3 order")
{
    for (unsigned m = 1; m <= 7; ++m) {
        const FieldContext ctx = build_context(m);
        const std::uint64_t n = oracle::ipow(3, m) - 1;
        const oracle::Poly chosen = oracle::from(ctx.modulus());
        CHECK(order_of_x(chosen) == n);
        CHECK(oracle::irreducible_brute(chosen));
        // every monic candidate with a smaller encoding fails
        for (std::uint64_t k = 0; k < oracle::ipow(3, m); ++k) {
            oracle::Poly f;
            std::uint64_t t = k;
            for (unsigned i = 0; i < m; ++i, t /= 3) f.push_back(static_cast<int>(t % 3));
            f.push_back(1);
            if (f == chosen) break;
            const bool primitive = oracle::irreducible_brute(f) && f[0] != 0 && order_of_x(f) == n;
            CHECK_FALSE(primitive);
        }
    }
    for (unsigned m : {20u, 33u, 64u}) {
        const FieldContext ctx = build_context(m);
        CHECK(is_irreducible(ctx.modulus()));
        CHECK(modpow(Gf3Poly::x(), ctx.order(), ctx.modulus()).is_one());
    }
}

TEST_CASE("element arithmetic against the naive field")
{
    for (const char* f : {"x^2+2x+2", "x^3+2x+1", "x^4+x+2", "x^5+2x+1", "x^6+x+2"}) {
        const FieldContext ctx = build_context(Gf3Poly::parse(f).degree(), P(f));
        const oracle::NaiveField naive(oracle::from(ctx.modulus()));
        std::mt19937_64 rng(static_cast<std::uint64_t>(ctx.m()));
        std::uniform_int_distribution<std::uint64_t> pick(0, naive.size() - 1);
        for (int t = 0; t < 300; ++t) {
            const auto ka = pick(rng);
            const auto kb = pick(rng);
            const auto a = ctx.decode(ka);
            const auto b = ctx.decode(kb);
            CHECK(ctx.encode(a) == ka);
            CHECK(oracle::from(ctx.to_poly(ctx.mul(a, b))) == naive.mul(naive.element(ka), naive.element(kb)));
            CHECK(oracle::from(ctx.to_poly(ctx.add(a, b))) == oracle::add(naive.element(ka), naive.element(kb)));
        }
    }
}

TEST_CASE("elem_pow")
{
    const FieldContext ctx = build_context(5, P("x^5+2x+1"));
    const FieldElement alpha(ctx, ctx.alpha());
    CHECK(elem_pow(alpha, ctx.order()).raw() == ctx.one());
    CHECK(elem_pow(FieldElement(ctx, ctx.zero()), BigNat(5)).is_zero());
    CHECK(elem_pow(FieldElement(ctx, ctx.zero()), BigNat(0)).raw() == ctx.one());
    CHECK(elem_pow(alpha, BigNat::from_decimal("1000000000000000000000000000001")) ==
          elem_pow(alpha, BigNat::from_decimal("1000000000000000000000000000001") % ctx.order()));

    for (unsigned m = 1; m <= 6; ++m) {
        const FieldContext c = build_context(m);
        const oracle::NaiveField naive(oracle::from(c.modulus()));
        for (std::uint64_t k = 0; k < naive.size(); k += 1 + naive.size() / 12) {
            for (std::uint64_t e = 0; e <= 1000; e += 37) {
                CHECK(oracle::from(c.to_poly(c.pow(c.decode(k), BigNat(e)))) == naive.pow(naive.element(k), e));
            }
        }
    }
}

TEST_CASE("quadratic character")
{
    for (unsigned m = 1; m <= 6; ++m) {
        const FieldContext ctx = build_context(m);
        const FieldElement one(ctx, ctx.one());
        const FieldElement alpha(ctx, ctx.alpha());
        CHECK(quadratic_character(one) == 1);
        CHECK(quadratic_character(alpha) == -1);
        CHECK(quadratic_character(FieldElement(ctx, ctx.zero())) == 0);
        CHECK(quadratic_character(-one) == (m % 2 == 1 ? -1 : 1));
    }
}

TEST_CASE("property: quadratic character is multiplicative")
{
    for (unsigned m = 1; m <= 6; ++m) {
        const FieldContext ctx = build_context(m);
        const std::uint64_t q = ctx.order_u64() + 1;
        std::vector<int> eta(q);
        std::set<std::uint64_t> squares;
        for (std::uint64_t k = 1; k < q; ++k) {
            eta[k] = quadratic_character(FieldElement(ctx, ctx.decode(k)));
            squares.insert(ctx.encode(ctx.mul(ctx.decode(k), ctx.decode(k))));
        }
        for (std::uint64_t a = 1; a < q; ++a) {
            CHECK(eta[a] == (squares.count(a) != 0 ? 1 : -1));
            const std::uint64_t step = m <= 4 ? 1 : 7;
            for (std::uint64_t b = 1; b < q; b += step) {
                const std::uint64_t ab = ctx.encode(ctx.mul(ctx.decode(a), ctx.decode(b)));
                if (eta[ab] != eta[a] * eta[b]) {
                    FAIL("eta not multiplicative at m=" << m << " a=" << a << " b=" << b);
                }
            }
        }
    }
}

TEST_CASE("minimal polynomials")
{
    const FieldContext ctx = build_context(5, P("x^5+2x+1"));
    CHECK(minimal_polynomial(ctx, BigNat(1)) == P("x^5+2x+1"));
    CHECK(minimal_polynomial(ctx, BigNat(0)) == P("x+2"));
    CHECK(minimal_polynomial(ctx, BigNat(121)) == P("x+1"));  // alpha^121 = -1
    CHECK_THROWS_AS(minimal_polynomial(ctx, BigNat(242)), std::invalid_argument);

    for (unsigned m = 1; m <= 6; ++m) {
        const FieldContext c = build_context(m);
        const std::uint64_t n = c.order_u64();
        const oracle::NaiveField naive(oracle::from(c.modulus()));
        const Gf3Poly xn1 = Gf3Poly::monomial(1, n) - Gf3Poly::constant(1);
        for (std::uint64_t i = 0; i < n; ++i) {
            const Gf3Poly mp = minimal_polynomial(c, BigNat(i));
            CHECK(static_cast<std::size_t>(mp.degree()) == coset_size(BigNat(i), 3, m));
            if (m <= 5) {
                CHECK((xn1 % mp).is_zero());
                CHECK(is_irreducible(mp));
                // alpha^i is a root, evaluated in the naive field
                CHECK(naive.eval(oracle::from(mp), naive.pow({0, 1}, i)).empty());
            }
        }
    }
}

TEST_CASE("Zech table")
{
    const FieldContext c2 = build_context(2);
    const ZechTable z2(c2);
    CHECK(z2.order() == 8);
    for (std::uint32_t i = 0; i < 8; ++i) {
        const auto x = c2.pow(c2.alpha(), std::uint64_t{i});
        if (i == 4) {
            CHECK(z2.zech(i) == ZechTable::kNone);
        } else {
            CHECK(c2.pow(c2.alpha(), std::uint64_t{z2.zech(i)}) == c2.add(x, c2.one()));
        }
        CHECK(z2.log(x) == i);
    }

    for (unsigned m = 3; m <= 7; ++m) {
        const FieldContext c = build_context(m);
        const ZechTable z(c);
        std::uint32_t sentinels = 0;
        for (std::uint32_t i = 0; i < z.order(); ++i) {
            if (z.zech(i) == ZechTable::kNone) {
                ++sentinels;
                CHECK(i == z.order() / 2);
            }
        }
        CHECK(sentinels == 1);
    }

    // (x+1)^e through logs versus direct powering, every element of GF(3^5)
    const FieldContext c5 = build_context(5, P("x^5+2x+1"));
    const ZechTable z5(c5);
    const std::uint64_t e = 62;
    for (std::uint64_t k = 0; k < 243; ++k) {
        const auto x = c5.decode(k);
        const auto direct = c5.pow(c5.add(x, c5.one()), e);
        FieldContext::Elem via_table{};
        if (FieldContext::is_zero(x)) {
            via_table = c5.one();
        } else {
            const auto z = z5.zech(z5.log(x));
            if (z != ZechTable::kNone) {
                via_table = c5.pow(c5.alpha(), std::uint64_t{z} * e % 242);
            }
        }
        CHECK(direct == via_table);
    }

    CHECK_THROWS_AS(ZechTable(build_context(14)), CapabilityExceeded);
}

TEST_CASE("property: field axioms on sampled triples")
{
    const FieldContext ctx = build_context(13);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> pick(0, ctx.order_u64());
    for (int t = 0; t < 2000; ++t) {
        const auto a = ctx.decode(pick(rng));
        const auto b = ctx.decode(pick(rng));
        const auto c = ctx.decode(pick(rng));
        CHECK(ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
        CHECK(ctx.mul(a, b) == ctx.mul(b, a));
        if (!FieldContext::is_zero(a)) {
            const auto inv = ctx.pow(a, ctx.order_u64() - 1);
            CHECK(ctx.mul(a, inv) == ctx.one());
        }
    }
}
