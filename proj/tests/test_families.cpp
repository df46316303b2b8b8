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

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "ternopt/codes.hpp"
#include "ternopt/errors.hpp"
#include "ternopt/families.hpp"
#include "ternopt/numthy.hpp"

using namespace ternopt;

namespace {

std::filesystem::path corpus(const char* name) { return std::filesystem::path(TERNOPT_DATA_DIR) / "witnesses" / name; }

// Roots of (x+1)^e - x^e - 1 (C3) or (x+1)^e + x^e + 1 (C2) in the naive field.
std::uint64_t naive_roots(const oracle::NaiveField& f, std::uint64_t e, Equation which)
{
    std::uint64_t count = 0;
    for (std::uint64_t k = 0; k < f.size(); ++k) {
        const auto x = f.element(k);
        const auto a = f.pow(oracle::add(x, {1}), e);
        const auto b = f.pow(x, e);
        const auto v = which == Equation::C3 ? oracle::sub(oracle::sub(a, b), {1}) : oracle::add(oracle::add(a, b), {1});
        if (v.empty()) ++count;
    }
    return count;
}

// Coset of e under multiplication by 3, by stepping.
std::size_t coset_by_stepping(std::uint64_t e, std::uint64_t n)
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t x = e % n; seen.insert(x).second; x = x * 3 % n) {
    }
    return seen.size();
}

}  // namespace

TEST_CASE("new-family exponents")
{
    const auto a = thm31_exponent(7);
    CHECK(a.e == BigNat((oracle::ipow(3, 5) + 5) / 2));
    CHECK(a.e == BigNat(124));
    CHECK(a.applicable);
    CHECK(full_verdict(7, a.e).optimal);
    CHECK_FALSE(thm31_exponent(13).applicable);
    CHECK_FALSE(thm31_exponent(9).applicable);
    CHECK(thm31_exponent(11).applicable);
    CHECK_THROWS_AS(thm31_exponent(8), std::invalid_argument);

    const auto b = thm32_exponent(7);
    CHECK(b.e == BigNat(16));
    CHECK(b.applicable);
    CHECK(full_verdict(7, b.e).optimal);
    CHECK(thm32_exponent(13).e == BigNat(124));
    CHECK(thm32_exponent(13).applicable);
    CHECK_FALSE(thm32_exponent(25).applicable);
    CHECK_THROWS_AS(thm32_exponent(9), std::invalid_argument);
}

TEST_CASE("property: applicable new-family exponents are optimal within the scan cap")
{
    for (unsigned m = 3; m <= 11; m += 2) {
        const auto f = thm31_exponent(m);
        if (f.applicable) CHECK_MESSAGE(full_verdict(m, f.e).optimal, "m=" << m);
    }
    for (unsigned m = 4; m <= 13; m += 3) {
        if (m % 2 == 0) continue;
        const auto f = thm32_exponent(m);
        if (f.applicable) CHECK_MESSAGE(full_verdict(m, f.e).optimal, "m=" << m);
    }
}

TEST_CASE("congruence families, worked examples")
{
    auto one = thm41_codes(5, 1, 1, -1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].e == BigNat(62));
    CHECK(one[0].condition);
    CHECK(one[0].verdict->optimal);

    auto two = thm41_codes(7, 1, 1, 1);
    REQUIRE(two.size() == 1);
    CHECK(two[0].e == BigNat(1638));
    CHECK(two[0].verdict->optimal);

    // solves the congruence, fails the gcd side condition, and is not optimal
    auto filtered = thm41_codes(11, 4, 0, 1);
    auto it = std::find_if(filtered.begin(), filtered.end(), [](const FamilyCode& c) { return c.e == BigNat(129538); });
    REQUIRE(it != filtered.end());
    CHECK_FALSE(it->condition);
    CHECK_FALSE(it->verdict->optimal);

    auto plus = thm42_codes(7, 1, 1);
    REQUIRE(plus.size() == 1);
    CHECK(plus[0].e == BigNat(274));
    CHECK(plus[0].verdict->optimal);
    CHECK(thm42_codes(6, 1, 1).empty());
    for (const auto& c : thm42_codes(5, 2, 0)) CHECK(c.verdict->optimal);

    CHECK_THROWS_AS(thm41_codes(9, 3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(thm41_codes(7, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("property: congruence families produce optimal codes")
{
    for (unsigned m = 3; m <= 9; m += 2) {
        const std::uint64_t n = oracle::ipow(3, m) - 1;
        for (unsigned h = 0; h < m; ++h) {
            for (unsigned t = 0; t <= 3; ++t) {
                for (const auto& c : thm42_codes(m, h, t)) {
                    CHECK_MESSAGE(c.verdict->optimal, "m=" << m << " h=" << h << " t=" << t << " e=" << c.e);
                }
                if (h == 0 || std::gcd(h, m) != 1) continue;
                for (int delta : {1, -1}) {
                    const auto codes = thm41_codes(m, h, t, delta);
                    for (const auto& c : codes) {
                        // side condition recomputed with 64-bit gcd
                        const std::uint64_t k = delta == 1 ? 2 : 1;
                        const std::uint64_t shift = k * oracle::ipow(3, t) % n;
                        const std::uint64_t e = c.e.to_u64();
                        CHECK(c.condition == (std::gcd((e + n - shift) % n, n) == k));
                        if (c.condition) {
                            CHECK_MESSAGE(c.verdict->optimal,
                                          "m=" << m << " h=" << h << " t=" << t << " delta=" << delta << " e=" << e);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("nonexistence for a = 5 (mod 8)")
{
    CHECK(thm51_scan(6, 2, 5).confirmed());
    CHECK(thm51_scan(7, 3, 13).confirmed());
    CHECK(thm51_scan(8, 1, 5).confirmed());
    for (unsigned m = 1; m <= 10; ++m) {
        for (unsigned h = 0; h < m; ++h) {
            for (long long a : {5, 13, -3, 21}) {
                CHECK_MESSAGE(thm51_scan(m, h, a).confirmed(), "m=" << m << " h=" << h << " a=" << a);
            }
        }
    }
    CHECK_THROWS_AS(thm51_scan(5, 1, 1), std::invalid_argument);
}

TEST_CASE("nonexistence for the a = 1 plus-sign congruence")
{
    const auto six = thm56_scan(6, 2);
    REQUIRE_FALSE(six.empty());
    for (const auto& entry : six) {
        CHECK(entry.reason == Disqualifier::coset_size);
        CHECK(coset_by_stepping(entry.e.to_u64(), 728) == 2);
    }

    const auto eight = thm56_scan(8, 4);
    CHECK(std::any_of(eight.begin(), eight.end(), [](const Thm56Entry& x) { return x.reason == Disqualifier::c3; }));

    for (const auto& entry : thm56_scan(4, 2)) {
        CHECK(entry.e.to_u64() % 8 == 4);
    }

    // m = 2: the only solutions, e = 2 and 6, have |C_e| = 2 = m and are optimal
    const auto tiny = thm56_scan(2, 0);
    REQUIRE(tiny.size() == 2);
    for (const auto& entry : tiny) {
        CHECK(entry.reason == Disqualifier::none);
        CHECK(entry.verdict.optimal);
    }

    for (unsigned m = 3; m <= 10; ++m) {
        const std::uint64_t n = oracle::ipow(3, m) - 1;
        for (unsigned h = 0; h < m; ++h) {
            const auto entries = thm56_scan(m, h);
            CHECK(entries.empty() == !exists_even_e_plus_a1(m, h));
            for (const auto& entry : entries) {
                CHECK_MESSAGE(entry.reason != Disqualifier::none, "m=" << m << " h=" << h << " e=" << entry.e);
                CHECK_FALSE(entry.verdict.optimal);
                if (entry.reason == Disqualifier::coset_size) {
                    CHECK(coset_by_stepping(entry.e.to_u64(), n) != m);
                }
            }
        }
    }
}

TEST_CASE("minus-sign a = 1 existence against enumeration")
{
    for (unsigned m = 2; m <= 14; ++m) {
        const std::uint64_t n = oracle::ipow(3, m) - 1;
        for (unsigned h = 1; h < m; ++h) {
            const std::uint64_t coef = oracle::ipow(3, h) - 1;
            bool found = false;
            for (std::uint64_t e = 2; e < n && !found; e += 2) {
                found = static_cast<unsigned __int128>(e) * coef % n == n / 2;
            }
            CHECK_MESSAGE(exists_even_e_minus_a1(m, h) == found, "m=" << m << " h=" << h);
        }
    }
}

TEST_CASE("explorer for e = (3^h+1)/2 + (3^h+1) t")
{
    const auto two = prob62_explore(2, 1);
    REQUIRE(two.size() == 2);
    CHECK(two[0].e == BigNat(2));
    CHECK(two[0].optimal);

    const auto six = prob62_explore(6, 25);
    CHECK(std::any_of(six.begin(), six.end(), [](const ExploreRow& r) { return r.optimal; }));
    for (const auto& row : six) {
        // e(t) solves e (3^h - 1) = (3^m - 1)/2
        CHECK(row.e.to_u64() * 26 % 728 == 364);
        if (row.oracle_agrees) CHECK(*row.oracle_agrees);
        if (row.optimal) CHECK(row.oracle_agrees.has_value());
    }
    CHECK_THROWS_AS(prob62_explore(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(prob62_explore(6, 26), std::invalid_argument);
}

TEST_CASE("counterexample hunt with shipped witnesses")
{
    const auto witnesses = read_poly_file(corpus("m35_h32_C3.txt"));
    REQUIRE(witnesses.size() == 2);
    const HuntReport r = hunt_counterexample(35, 32, Problem::p710, witnesses);
    CHECK(r.e == BigNat::from_decimal("926510094425918"));
    CHECK(r.refutes());
    CHECK(r.lower_bound);
    CHECK(r.root_count == 70);
    for (const auto& w : r.witnesses) {
        CHECK(w.status == WitnessStatus::verified);
        CHECK(w.factor.degree() == 35);
        CHECK(is_irreducible(w.factor));
    }
    CHECK_THROWS_AS(hunt_counterexample(35, 32, Problem::p710), CapabilityExceeded);

    const auto big = read_poly_file(corpus("m109_h101_C3.txt"));
    const HuntReport q = hunt_counterexample(109, 101, Problem::p79, big);
    CHECK(q.e == BigNat::from_decimal("773066281098016996554691694648431909053161283004"));
    CHECK(q.root_count == 218);

    // a witness for the wrong equation certifies nothing
    const HuntReport wrong = hunt_counterexample(35, 32, Problem::p710, witnesses, Equation::C2);
    CHECK(wrong.root_count == 0);
    CHECK_FALSE(wrong.refutes());
}

TEST_CASE("counterexample hunt by counting")
{
    const HuntReport ok = hunt_counterexample(7, 5, Problem::p79);
    CHECK(ok.e == BigNat(124));
    CHECK_FALSE(ok.refutes());

    CHECK_THROWS_AS(hunt_counterexample(9, 1, Problem::p79), std::invalid_argument);
    CHECK_THROWS_AS(hunt_counterexample(7, 2, Problem::p79), std::invalid_argument);
    CHECK_THROWS_AS(hunt_counterexample(7, 3, Problem::p710), std::invalid_argument);

    // every admissible (m, h) at m = 5, 7 against naive root counts
    for (unsigned m : {5u, 7u}) {
        const FieldContext ctx = build_context(m);
        const oracle::NaiveField naive(oracle::from(ctx.modulus()));
        for (unsigned h = 1; h < m; ++h) {
            for (Problem p : {Problem::p79, Problem::p710}) {
                HuntReport r;
                try {
                    r = hunt_counterexample(m, h, p);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                const std::uint64_t e = r.e.to_u64();
                const std::uint64_t c2 = naive_roots(naive, e, Equation::C2);
                const std::uint64_t c3 = naive_roots(naive, e, Equation::C3);
                CHECK(r.root_count == std::max(c2, c3));
                CHECK(r.refutes() == (std::max(c2, c3) > 1));
                // the split factors account for every root
                std::uint64_t roots = 0;
                for (const auto& d : r.factor_degrees) {
                    CHECK(m % d.degree == 0);
                    roots += static_cast<std::uint64_t>(d.degree) * d.count;
                }
                CHECK(roots == r.root_count);
            }
        }
    }
}

TEST_CASE("F - x^27 G factorization")
{
    const Lemma32Result r = reproduce_lemma32_factorization();

    // the polynomial itself, rebuilt with naive arithmetic
    const oracle::Poly f = oracle::mul({0, 1}, oracle::mul({1, 2, 2, 1, 2}, {1, 2, 2, 1, 2}));
    const oracle::Poly g = oracle::mul({2, 1, 2, 2, 1}, {2, 1, 2, 2, 1});
    std::vector<oracle::Poly> fp{{1}}, gp{{1}};
    for (int i = 0; i < 4; ++i) {
        fp.push_back(oracle::mul(fp.back(), f));
        gp.push_back(oracle::mul(gp.back(), g));
    }
    auto term = [&](int c, int i) { return c == 1 ? oracle::mul(fp[i], gp[4 - i]) : oracle::sub({}, oracle::mul(fp[i], gp[4 - i])); };
    // coefficients of f^i g^(4-i), i = 0..4
    const int cu[5] = {1, -1, -1, 1, -1};
    const int cv[5] = {-1, 1, -1, -1, 1};
    oracle::Poly u, v;
    for (int i = 0; i <= 4; ++i) {
        u = oracle::add(u, term(cu[i], i));
        v = oracle::add(v, term(cv[i], i));
    }
    const oracle::Poly F = oracle::mul(f, oracle::mul(u, u));
    oracle::Poly x27(28, 0);
    x27[27] = 1;
    const oracle::Poly G = oracle::mul(x27, oracle::mul(g, oracle::mul(v, v)));
    CHECK(oracle::from(r.polynomial) == oracle::sub(F, G));

    CHECK(r.polynomial.degree() == 107);
    CHECK(r.factorization.expand() == r.polynomial);

    const std::vector<DegreeCount> expect{{1, 1, 2}, {1, 9, 1}, {9, 1, 2}, {13, 1, 6}};
    CHECK(r.degrees == expect);

    std::set<std::string> got;
    for (const auto& t : r.factorization.factors) got.insert(t.factor.to_algebraic());
    for (const char* s : {"x^13+2x^12+2x^11+2x^10+x^9+2x^7+2x^5+x^4+x^3+2",
                          "x^13+2x^12+2x^11+2x^7+2x^6+2x^5+2x^4+2x^3+x^2+2x+2",
                          "x^13+x^12+2x^11+x^10+x^9+x^8+x^7+x^6+x^2+x+2",
                          "x^13+x^12+2x^10+x^9+2x^8+x^7+x^6+x^5+x^4+2x^3+x^2+2",
                          "x^13+2x^11+x^10+2x^9+2x^8+2x^7+2x^6+x^5+2x^4+x^3+2x+2",
                          "x^13+2x^10+2x^9+x^8+x^6+2x^4+x^3+x^2+x+2", "x^9+2x^7+2x^6+2x^5+x^4+x^2+2",
                          "x^9+2x^7+2x^5+x^4+x^3+x^2+2", "x+2", "x+1", "x"}) {
        CHECK_MESSAGE(got.count(s) == 1, s);
    }
}

TEST_CASE("known-family catalog")
{
    const auto results = table1_catalog(7);
    CHECK(results.size() > 100);
    for (const auto& r : results) {
        CHECK_MESSAGE(r.optimal, r.row << " m=" << r.m << " " << r.params << " e=" << r.e);
    }
    auto has = [&](std::string_view row, unsigned m, std::uint64_t e) {
        return std::any_of(results.begin(), results.end(),
                           [&](const CatalogResult& r) { return r.row == row && r.m == m && r.e == BigNat(e); });
    };
    CHECK(has("2", 3, 2));
    CHECK(has("(3^m-3)/4", 5, 60));
    CHECK(has("20", 5, 20));

    // the weight oracle agrees wherever it can run
    for (const auto& r : results) {
        if (r.m > 6) continue;
        const CyclicCode code = build_C1e(default_context(r.m), r.e);
        CHECK_FALSE(min_weight_at_most_3(code).has_value());
    }
}
