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

#include <map>
#include <random>

#include "oracles.hpp"
#include "ternopt/errors.hpp"
#include "ternopt/factor.hpp"
#include "ternopt/gf3poly.hpp"

using namespace ternopt;

namespace {

Gf3Poly P(const char* s) { return Gf3Poly::parse(s); }

}  // namespace

TEST_CASE("block addition matches digit-wise arithmetic")
{
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            const Gf3Block x{a == 1 ? 1u : 0u, a == 2 ? 1u : 0u};
            const Gf3Block y{b == 1 ? 1u : 0u, b == 2 ? 1u : 0u};
            const Gf3Block s = add(x, y);
            const Gf3Block d = sub(x, y);
            CHECK(static_cast<int>(s.ones + 2 * s.twos) == (a + b) % 3);
            CHECK(static_cast<int>(d.ones + 2 * d.twos) == (a - b + 3) % 3);
        }
    }
}

TEST_CASE("text and algebraic forms")
{
    CHECK(P("x^5+2x+1").to_text() == "120001");
    CHECK(P("120001") == P("x^5+2*x+1"));
    CHECK(P("x^5 - x + 1") == P("x^5+2x+1"));
    CHECK(Gf3Poly().to_text() == "0");
    CHECK(P("0").is_zero());
    CHECK(P("x^10+2x^9+2x^8+x^7+2x^6+x^5+x^3+x^2+x+2").to_algebraic() == "x^10+2x^9+2x^8+x^7+2x^6+x^5+x^3+x^2+x+2");
    CHECK(P("4x^2+3x+5") == P("x^2+2"));
    CHECK_THROWS_AS(Gf3Poly::parse("x^"), std::invalid_argument);
    CHECK_THROWS_AS(Gf3Poly::from_text("1203"), std::invalid_argument);
}

TEST_CASE("ring operations, worked examples")
{
    CHECK((P("x+1") * P("x+1")) == P("x^2+2x+1"));
    const auto [q, r] = divrem(P("x^3"), P("x+2"));
    CHECK(q == P("x^2+x+1"));
    // (x+2)(x^2+x+1) = x^3 + 2, so the remainder is -2 = 1
    CHECK(r == P("1"));
    CHECK(q * P("x+2") + r == P("x^3"));
    CHECK(P("x^4+x+1") + Gf3Poly() == P("x^4+x+1"));
    CHECK_THROWS_AS(divrem(P("x"), Gf3Poly()), std::domain_error);
}

TEST_CASE("gcd")
{
    CHECK(gcd(P("x^2+2x+1"), P("x+1")) == P("x+1"));
    CHECK(gcd(P("x^2+x+1"), P("x+2")) == P("x+2"));
    CHECK(gcd(P("2x^3+x"), Gf3Poly()) == P("x^3+2x"));
    CHECK_THROWS_AS(gcd(Gf3Poly(), Gf3Poly()), std::invalid_argument);
}

TEST_CASE("modpow and frobenius_power")
{
    CHECK(modpow(P("x"), BigNat(3), P("x^2+1")) == P("2x"));
    CHECK(modpow(P("x^4+x"), BigNat(1), P("x^3+2x+1")) == P("x^4+x") % P("x^3+2x+1"));
    CHECK(frobenius_power(0, P("x^3+2x+1")) == P("x"));
    CHECK(frobenius_power(1, P("x^2+1")) == P("2x"));
    CHECK_THROWS_AS(modpow(P("x"), BigNat(2), Gf3Poly()), std::domain_error);
}

TEST_CASE("binomial_power_poly")
{
    CHECK(binomial_power_poly(BigNat(2)) == P("x^2+2x+1"));
    CHECK(binomial_power_poly(BigNat(4)) == P("x^4+x^3+x+1"));
    CHECK(binomial_power_poly(BigNat(0)).is_one());
    CHECK_THROWS_AS(binomial_power_poly(BigNat(5000), 4096), CapabilityExceeded);
}

TEST_CASE("is_irreducible")
{
    CHECK(is_irreducible(P("x^2+1")));
    CHECK_FALSE(is_irreducible(P("x^2+2x+1")));
    CHECK(is_irreducible(P("x^5+2x+1")));
    CHECK(is_irreducible(P("x^7+2x^2+1")));
    CHECK_THROWS_AS(is_irreducible(P("2")), std::invalid_argument);
}

TEST_CASE("factor, worked examples")
{
    const Factorization f = factor(P("2x^2+2x+2"));
    CHECK(f.unit == 2);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].factor == P("x+2"));
    CHECK(f.factors[0].multiplicity == 2);

    const Factorization g = factor(P("x^2+1"));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].factor == P("x^2+1"));
    CHECK(g.factors[0].multiplicity == 1);

    // x^9 - x = x (x-1)(x+1)(x^2+1)(x^2+x+2)(x^2+2x+2)
    const Factorization h = factor(P("x^9+2x"));
    CHECK(h.factors.size() == 6);
    CHECK(h.expand() == P("x^9+2x"));
    CHECK_THROWS_AS(factor(Gf3Poly()), std::domain_error);
}

TEST_CASE("count_roots_in_subfield, worked examples")
{
    CHECK(count_roots_in_subfield(P("x^3+2x"), 1) == 3);  // x(x+1)(x+2)
    CHECK(count_roots_in_subfield(P("x^2+1"), 1) == 0);
    CHECK(count_roots_in_subfield(P("x^2+1"), 2) == 2);
}

TEST_CASE("property: divrem recovers quotient and remainder")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dd(0, 64);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = oracle::random_poly(rng, dd(rng));
        const auto q = oracle::random_poly(rng, 1 + dd(rng));
        auto r = oracle::random_poly(rng, oracle::deg(q) - 1);
        if (oracle::deg(q) == 0) r.clear();
        const auto a = oracle::add(oracle::mul(p, q), r);
        const auto [qq, rr] = divrem(oracle::to(a), oracle::to(q));
        CHECK(oracle::from(qq) == p);
        CHECK(oracle::from(rr) == oracle::make(r));
        CHECK(oracle::from(oracle::to(p) * oracle::to(q)) == oracle::mul(p, q));
    }
}

TEST_CASE("property: multiplication of long operands against schoolbook")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = oracle::random_poly(rng, 100 + trial * 13);
        const auto b = oracle::random_poly(rng, 70 + trial * 7);
        CHECK(oracle::from(oracle::to(a) * oracle::to(b)) == oracle::mul(a, b));
        CHECK(oracle::from(oracle::to(a) - oracle::to(b)) == oracle::sub(a, b));
    }
}

TEST_CASE("property: factor reconstructs its input")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> dd(1, 256);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = oracle::random_poly(rng, dd(rng));
        if (trial % 4 == 0) {
            // force repeated and cubed factors
            const auto s = oracle::random_poly(rng, 1 + trial % 7, true);
            p = oracle::mul(p, oracle::mul(s, oracle::mul(s, s)));
            p = oracle::mul(p, oracle::random_poly(rng, 2, true));
        }
        const Gf3Poly f = oracle::to(p);
        const Factorization fac = factor(f);
        CHECK(fac.expand() == f);
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
            CHECK(fac.factors[i].factor.leading() == 1);
            CHECK(is_irreducible(fac.factors[i].factor));
            if (i > 0) {
                CHECK(canonical_less(fac.factors[i - 1].factor, fac.factors[i].factor));
            }
        }
    }
}

TEST_CASE("property: factor is deterministic and seed-independent as a multiset")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const Gf3Poly f = oracle::to(oracle::random_poly(rng, 120));
        const Factorization a = factor(f);
        const Factorization b = factor(f, {.seed = 12345});
        REQUIRE(a.factors.size() == b.factors.size());
        for (std::size_t i = 0; i < a.factors.size(); ++i) {
            CHECK(a.factors[i].factor == b.factors[i].factor);
        }
    }
}

TEST_CASE("property: is_irreducible agrees with factor and with trial division")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dd(1, 64);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = trial < 200 ? 1 + trial % 9 : dd(rng);
        const auto p = oracle::random_poly(rng, d);
        const Gf3Poly f = oracle::to(p);
        const Factorization fac = factor(f);
        const bool single = fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
        CHECK(is_irreducible(f) == single);
        if (d <= 9) {
            CHECK(is_irreducible(f) == oracle::irreducible_brute(p));
        }
    }
}

TEST_CASE("property: count_roots_in_subfield against exhaustive evaluation")
{
    // GF(3^m) built from a known irreducible of each degree; exhaustive for
    // small m, sampled polynomials for the larger fields.
    const std::vector<oracle::Poly> moduli = {
        {1, 1}, {1, 0, 1}, {1, 2, 0, 1}, {2, 0, 0, 1, 1}, {1, 2, 0, 0, 0, 1},
        {2, 0, 0, 0, 0, 1, 1}, {1, 0, 2, 0, 0, 0, 0, 1}, {2, 0, 0, 0, 1, 0, 0, 0, 1},
    };
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dd(1, 50);
    for (const auto& f : moduli) {
        REQUIRE(oracle::irreducible_brute(f));
        const oracle::NaiveField field(f);
        const int trials = field.m <= 4 ? 25 : (field.m <= 6 ? 6 : 2);
        for (int t = 0; t < trials; ++t) {
            auto p = oracle::random_poly(rng, dd(rng));
            if (t % 3 == 0) {
                p = oracle::mul(p, {0, 1});  // guarantee the root 0
            }
            std::size_t expected = 0;
            for (std::uint64_t k = 0; k < field.size(); ++k) {
                if (field.eval(p, field.element(k)).empty()) ++expected;
            }
            CHECK(count_roots_in_subfield(oracle::to(p), static_cast<unsigned>(field.m)) == expected);
        }
    }
    // m = 9 and 10: roots of x^{3^m} - x restricted to a product of chosen factors
    const Gf3Poly g = P("x^2+1") * P("x^3+2x+1") * P("x^5+2x+1") * P("x+1");
    CHECK(count_roots_in_subfield(g, 10) == 2 + 5 + 1);
    CHECK(count_roots_in_subfield(g, 9) == 3 + 1);
}

TEST_CASE("property: binomial expansion against repeated squaring")
{
    const oracle::Poly base{1, 1};
    oracle::Poly acc{1};
    for (std::uint64_t e = 0; e <= 2000; ++e) {
        if (e % 97 == 0 || e < 50 || e == 2000) {
            // exponentiation by squaring as an independent route
            oracle::Poly r{1};
            oracle::Poly b = base;
            for (std::uint64_t k = e; k != 0; k >>= 1) {
                if (k & 1) r = oracle::mul(r, b);
                b = oracle::mul(b, b);
            }
            CHECK(r == acc);
            CHECK(oracle::from(binomial_power_poly(BigNat(e))) == r);
        }
        acc = oracle::mul(acc, base);
    }
}

TEST_CASE("property: frobenius_power equals modpow(x, 3^k)")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = oracle::random_poly(rng, 1 + trial % 8);
        for (unsigned k = 0; k <= 20; ++k) {
            const Gf3Poly expect = modpow(Gf3Poly::x(), BigNat::pow(3, k), oracle::to(f));
            CHECK(frobenius_power(k, oracle::to(f)) == expect);
            if (k <= 10) {
                CHECK(oracle::from(expect) == oracle::powmod({0, 1}, oracle::ipow(3, k), f));
            }
        }
    }
}

TEST_CASE("degree multiset matches full factorization")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = oracle::random_poly(rng, 40 + trial);
        p = oracle::mul(p, oracle::mul(p, {1, 1}));
        const Gf3Poly f = oracle::to(p);
        std::map<std::pair<unsigned, unsigned>, std::size_t> tally;
        for (const auto& t : factor(f).factors) {
            ++tally[{static_cast<unsigned>(t.factor.degree()), t.multiplicity}];
        }
        std::vector<DegreeCount> expect;
        for (const auto& [k, c] : tally) expect.push_back({k.first, k.second, c});
        CHECK(factor_degree_multiset(f) == expect);
    }
}
