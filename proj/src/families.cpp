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

#include "ternopt/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ternopt/codes.hpp"
#include "ternopt/errors.hpp"
#include "ternopt/numthy.hpp"

namespace ternopt {

namespace {

constexpr unsigned kMaxT = 38;  // 2 * 3^t + 1 must fit a long long

mpz_class pow3(unsigned k)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, k);
    return r;
}

mpz_class floor_mod(const mpz_class& x, const mpz_class& n)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    return r;
}

long long pow3_ll(unsigned t)
{
    long long r = 1;
    for (unsigned i = 0; i < t; ++i) r *= 3;
    return r;
}

std::optional<CheckVerdict> verdict_if_decidable(unsigned m, const BigNat& e, const CheckConfig& config)
{
    try {
        return full_verdict(m, e, std::nullopt, config);
    } catch (const CapabilityExceeded&) {
        return std::nullopt;
    }
}

std::vector<FamilyCode> with_verdicts(unsigned m, const std::vector<BigNat>& es, const CheckConfig& config)
{
    std::vector<FamilyCode> out;
    out.reserve(es.size());
    for (const auto& e : es) {
        out.push_back({e, true, verdict_if_decidable(m, e, config)});
    }
    return out;
}

}  // namespace

FamilyExponent thm31_exponent(unsigned m)
{
    if (m <= 1 || m % 2 == 0) {
        throw std::invalid_argument("thm31_exponent: m must be odd and > 1");
    }
    const mpz_class e = (pow3((m + 3) / 2) + 5) / 2;
    const bool ok = (m % 12 == 7 || m % 12 == 11) && std::gcd(m, 13u) == 1;
    return {BigNat(e), ok};
}

FamilyExponent thm32_exponent(unsigned m)
{
    if (m <= 1 || (m + 2) % 3 != 0) {
        throw std::invalid_argument("thm32_exponent: need m > 1 and 3 | m + 2");
    }
    const mpz_class e = (pow3((m + 2) / 3) + 5) / 2;
    const bool ok = m % 6 == 1 && std::gcd(m, 235u) == 1;
    return {BigNat(e), ok};
}

std::vector<FamilyCode> thm41_codes(unsigned m, unsigned h, unsigned t, int delta, const CheckConfig& config)
{
    if (m <= 1 || m % 2 == 0 || h == 0 || h >= m || std::gcd(h, m) != 1) {
        throw std::invalid_argument("thm41_codes: need m > 1 odd, 1 <= h < m, gcd(h, m) = 1");
    }
    if (delta != 1 && delta != -1) {
        throw std::invalid_argument("thm41_codes: delta must be +1 or -1");
    }
    if (t > kMaxT) {
        throw std::invalid_argument("thm41_codes: t too large");
    }
    const long long a = 2 * delta * pow3_ll(t) + 1;
    const BigNat n = three_pow_minus_one(m);
    const mpz_class c = (delta + 3) / 2;
    std::vector<FamilyCode> out = with_verdicts(m, solve_even_e(m, h, Sign::Minus, a), config);
    for (auto& code : out) {
        const mpz_class shifted = floor_mod(code.e.mpz() - c * pow3(t), n.mpz());
        code.condition = gcd(BigNat(shifted), n) == BigNat(c);
    }
    return out;
}

std::vector<FamilyCode> thm42_codes(unsigned m, unsigned h, unsigned t, const CheckConfig& config)
{
    if (m == 0 || h >= m) {
        throw std::invalid_argument("thm42_codes: need 0 <= h < m");
    }
    if (t > kMaxT) {
        throw std::invalid_argument("thm42_codes: t too large");
    }
    if (m % 2 == 0) {
        return {};
    }
    return with_verdicts(m, solve_even_e(m, h, Sign::Plus, 1 - 2 * pow3_ll(t)), config);
}

Thm51Result thm51_scan(unsigned m, unsigned h, long long a)
{
    if (((a % 8) + 8) % 8 != 5) {
        throw std::invalid_argument("thm51_scan: need a = 5 (mod 8)");
    }
    return {solve_even_e(m, h, Sign::Minus, a).empty(), solve_even_e(m, h, Sign::Plus, a).empty()};
}

std::string_view to_string(Disqualifier d)
{
    switch (d) {
    case Disqualifier::coset_size:
        return "coset size";
    case Disqualifier::c2:
        return "C2";
    case Disqualifier::c3:
        return "C3";
    case Disqualifier::none:
        break;
    }
    return "none";
}

std::vector<Thm56Entry> thm56_scan(unsigned m, unsigned h, const CheckConfig& config)
{
    if (m > config.scan_cap) {
        throw CapabilityExceeded("thm56_scan: m = " + std::to_string(m) + " exceeds the scan cap");
    }
    std::vector<Thm56Entry> out;
    for (const auto& e : solve_even_e(m, h, Sign::Plus, 1)) {
        Thm56Entry entry{e, Disqualifier::none, full_verdict(m, e, std::nullopt, config)};
        const CheckVerdict& v = entry.verdict;
        if (v.coset_size != m) {
            entry.reason = Disqualifier::coset_size;
        } else if (v.c3_solution_count.value_or(0) > 1) {
            entry.reason = Disqualifier::c3;
        } else if (v.c2_solution_count.value_or(0) > 1) {
            entry.reason = Disqualifier::c2;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<ExploreRow> prob62_explore(unsigned m, std::uint64_t t_max, const CheckConfig& config)
{
    if (m % 4 != 2) {
        throw std::invalid_argument("prob62_explore: need m = 2 (mod 4)");
    }
    if (m > config.scan_cap) {
        throw CapabilityExceeded("prob62_explore: m = " + std::to_string(m) + " exceeds the scan cap");
    }
    const unsigned h = m / 2;
    const mpz_class q = pow3(h);
    if (mpz_class(std::to_string(t_max)) > q - 2) {
        throw std::invalid_argument("prob62_explore: t_max must be <= 3^h - 2");
    }
    const BigNat n = three_pow_minus_one(m);
    const FieldContext& ctx = default_context(m);
    const bool oracle = n <= BigNat(kDefaultOracleCap);
    std::vector<ExploreRow> out;
    for (std::uint64_t t = 0; t <= t_max; ++t) {
        const mpz_class e = (q + 1) / 2 + (q + 1) * mpz_class(std::to_string(t));
        ExploreRow row;
        row.t = t;
        row.e = BigNat(floor_mod(e, n.mpz()));
        const CheckVerdict v = full_verdict(m, BigNat(e), std::nullopt, config);
        row.optimal = v.optimal;
        if (oracle) {
            const bool light = min_weight_at_most_3(build_C1e(ctx, row.e), kDefaultOracleCap, config.exec).has_value();
            // the oracle alone cannot see a collapsed coset, so compare on |C_e| = m only
            if (v.coset_size == m) {
                row.oracle_agrees = light != v.optimal;
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string_view to_string(Problem p) { return p == Problem::p79 ? "7.9" : "7.10"; }

Problem parse_problem(std::string_view text)
{
    if (text == "7.9") return Problem::p79;
    if (text == "7.10") return Problem::p710;
    throw std::invalid_argument("unknown problem '" + std::string(text) + "' (expected 7.9 or 7.10)");
}

BigNat problem_exponent(Problem p, unsigned m, unsigned h)
{
    if (m % 2 == 0 || m % 3 == 0 || h >= m) {
        throw std::invalid_argument("problem_exponent: need m odd, 3 not dividing m, h < m");
    }
    if (p == Problem::p79) {
        if (h == 0 || h % 2 == 0 || std::gcd(h, m) != 1) {
            throw std::invalid_argument("problem 7.9 needs h odd with gcd(h, m) = 1");
        }
        return BigNat((pow3(h) + 5) / 2);
    }
    if (h < 2 || h % 2 != 0) {
        throw std::invalid_argument("problem 7.10 needs h even and >= 2");
    }
    return BigNat((pow3(h) - 5) / 2);
}

HuntReport hunt_counterexample(unsigned m, unsigned h, Problem problem, const std::vector<Gf3Poly>& witnesses,
                               Equation which, std::uint64_t expansion_cap)
{
    HuntReport r;
    r.m = m;
    r.h = h;
    r.problem = problem;
    r.e = problem_exponent(problem, m, h);

    const bool explicit_ok = r.e.fits_u64() && r.e.to_u64() <= expansion_cap;
    if (explicit_ok && witnesses.empty()) {
        // The roots in GF(3^m) are the roots of gcd(P, x^(3^m) - x); its
        // factor degrees certify the count.
        std::uint64_t best = 0;
        for (Equation eq : {Equation::C3, Equation::C2}) {
            const Gf3Poly p = equation_polynomial(r.e, eq, expansion_cap);
            const std::uint64_t count = count_large(r.e, m, eq, expansion_cap);
            if (count > best || (best == 0 && eq == Equation::C3)) {
                best = count;
                r.equation = eq;
                r.root_count = count;
                if (p.is_zero()) {
                    r.factor_degrees.clear();
                } else {
                    const Gf3Poly split = gcd(p, modpow(Gf3Poly::x(), BigNat::pow(3, m), p) - Gf3Poly::x());
                    r.factor_degrees = factor_degree_multiset(split);
                }
            }
        }
        return r;
    }
    if (witnesses.empty()) {
        throw CapabilityExceeded("e = " + r.e.to_decimal() + " exceeds the expansion cap " +
                                 std::to_string(expansion_cap) + "; supply witness factors");
    }

    r.equation = which;
    r.lower_bound = true;
    std::map<unsigned, std::size_t> degrees;
    std::vector<Gf3Poly> seen;
    for (const auto& f : witnesses) {
        WitnessCheck w{f, verify_witness(r.e, m, which, f)};
        if (w.status == WitnessStatus::verified && std::find(seen.begin(), seen.end(), f) == seen.end()) {
            seen.push_back(f);
            r.root_count += static_cast<std::uint64_t>(f.degree());
            ++degrees[static_cast<unsigned>(f.degree())];
        }
        r.witnesses.push_back(std::move(w));
    }
    for (const auto& [d, count] : degrees) {
        r.factor_degrees.push_back({d, 1, count});
    }
    return r;
}

Lemma32Result reproduce_lemma32_factorization()
{
    const Gf3Poly f = Gf3Poly::parse("x") * Gf3Poly::parse("2x^4+x^3+2x^2+2x+1") * Gf3Poly::parse("2x^4+x^3+2x^2+2x+1");
    const Gf3Poly g0 = Gf3Poly::parse("x^4+2x^3+2x^2+x+2");
    const Gf3Poly g = g0 * g0;

    std::vector<Gf3Poly> fp{Gf3Poly::constant(1)}, gp{Gf3Poly::constant(1)};
    for (int i = 1; i <= 4; ++i) {
        fp.push_back(fp.back() * f);
        gp.push_back(gp.back() * g);
    }
    // the quartics of the numerator and denominator, evaluated at f/g and
    // cleared of g^4
    const Gf3Poly u = -fp[4] + fp[3] * gp[1] - fp[2] * gp[2] - fp[1] * gp[3] + gp[4];
    const Gf3Poly v = fp[4] - fp[3] * gp[1] - fp[2] * gp[2] + fp[1] * gp[3] - gp[4];
    const Gf3Poly F = f * u * u;
    const Gf3Poly G = g * v * v;

    Lemma32Result r;
    r.polynomial = F - Gf3Poly::monomial(1, 27) * G;
    r.factorization = factor(r.polynomial);
    r.degrees = factor_degree_multiset(r.polynomial);
    return r;
}

namespace {

using Members = std::vector<FamilyMember>;

std::string kv(std::string_view k, unsigned v) { return std::string(k) + "=" + std::to_string(v); }

// Adds e (reduced modulo 3^m - 1) when it lands on an even value in (1, n).
void push(Members& out, unsigned m, std::string params, const mpz_class& e)
{
    const mpz_class n = pow3(m) - 1;
    const mpz_class r = floor_mod(e, n);
    if (r > 1 && mpz_even_p(r.get_mpz_t())) {
        out.push_back({std::move(params), BigNat(r)});
    }
}

void push_congruence(Members& out, unsigned m, const std::string& params, const mpz_class& coef,
                     const mpz_class& rhs)
{
    const mpz_class n = pow3(m) - 1;
    for (const auto& e : solve_even_congruence(BigNat(floor_mod(coef, n)), BigNat(floor_mod(rhs, n)), BigNat(n))) {
        out.push_back({params, e});
    }
}

bool coprime_to_n(unsigned m, const mpz_class& x)
{
    mpz_class g;
    const mpz_class n = pow3(m) - 1;
    const mpz_class r = floor_mod(x, n);
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return g == 1;
}

unsigned gcd_signed(unsigned m, long long x) { return std::gcd(m, static_cast<unsigned>(x < 0 ? -x : x)); }

FamilySpec row(std::string name, std::string conditions, std::function<Members(unsigned)> fn)
{
    return {std::move(name), std::move(conditions), std::move(fn)};
}

std::vector<FamilySpec> build_rows()
{
    const auto half = [](unsigned m) -> mpz_class { return (pow3(m) - 1) / 2; };
    std::vector<FamilySpec> rows;
    rows.push_back(row("2", "m >= 2", [](unsigned m) {
        Members o;
        push(o, m, "", 2);
        return o;
    }));
    rows.push_back(row("16", "m odd, 3 does not divide m", [](unsigned m) {
        Members o;
        if (m % 2 == 1 && m % 3 != 0) push(o, m, "", 16);
        return o;
    }));
    rows.push_back(row("20", "m odd", [](unsigned m) {
        Members o;
        if (m % 2 == 1) push(o, m, "", 20);
        return o;
    }));
    rows.push_back(row("3^s+1", "m/gcd(m,s) odd", [](unsigned m) {
        Members o;
        for (unsigned s = 1; s < m; ++s) {
            if ((m / std::gcd(m, s)) % 2 == 1) push(o, m, kv("s", s), pow3(s) + 1);
        }
        return o;
    }));
    rows.push_back(row("3^s-1", "gcd(m,s) = gcd(3^m-1,3^s-2) = 1", [](unsigned m) {
        Members o;
        for (unsigned s = 1; s < m; ++s) {
            if (std::gcd(m, s) == 1 && coprime_to_n(m, pow3(s) - 2)) push(o, m, kv("s", s), pow3(s) - 1);
        }
        return o;
    }));
    rows.push_back(row("(3^s+1)/2", "gcd(m,s) = 1, s odd", [](unsigned m) {
        Members o;
        for (unsigned s = 1; s < m; s += 2) {
            if (std::gcd(m, s) == 1) push(o, m, kv("s", s), (pow3(s) + 1) / 2);
        }
        return o;
    }));
    rows.push_back(row("(3^s-1)/2", "m odd, s even, gcd(m,s) = gcd(m,s-1) = 1", [](unsigned m) {
        Members o;
        if (m % 2 == 0) return o;
        for (unsigned s = 2; s < m; s += 2) {
            if (std::gcd(m, s) == 1 && std::gcd(m, s - 1) == 1) push(o, m, kv("s", s), (pow3(s) - 1) / 2);
        }
        return o;
    }));
    rows.push_back(row("(3^s+7)/2", "m odd, s even", [](unsigned m) {
        Members o;
        if (m % 2 == 0) return o;
        for (unsigned s = 2; s < m; s += 2) push(o, m, kv("s", s), (pow3(s) + 7) / 2);
        return o;
    }));
    rows.push_back(row("(3^s+7)/2+(3^m-1)/2", "m odd, s odd", [half](unsigned m) {
        Members o;
        if (m % 2 == 0) return o;
        for (unsigned s = 1; s < m; s += 2) push(o, m, kv("s", s), (pow3(s) + 7) / 2 + half(m));
        return o;
    }));
    rows.push_back(row("2(3^s+1)", "m odd", [](unsigned m) {
        Members o;
        if (m % 2 == 0) return o;
        for (unsigned s = 1; s < m; ++s) push(o, m, kv("s", s), 2 * (pow3(s) + 1));
        return o;
    }));
    rows.push_back(row("3^(m/2)+5", "m >= 4, m = 0 (mod 4)", [](unsigned m) {
        Members o;
        if (m >= 4 && m % 4 == 0) push(o, m, "", pow3(m / 2) + 5);
        return o;
    }));
    rows.push_back(row("3^((m+1)/2)-1", "m odd", [](unsigned m) {
        Members o;
        if (m % 2 == 1) push(o, m, "", pow3((m + 1) / 2) - 1);
        return o;
    }));
    rows.push_back(row("3^((m+2)/2)+5", "m >= 6, m = 2 (mod 4)", [](unsigned m) {
        Members o;
        if (m >= 6 && m % 4 == 2) push(o, m, "", pow3((m + 2) / 2) + 5);
        return o;
    }));
    rows.push_back(row("(3^((m+1)/2)-1)/2, (3^(m+1)-1)/8", "m = 3 (mod 4)", [](unsigned m) {
        Members o;
        if (m % 4 != 3) return o;
        push(o, m, "first", (pow3((m + 1) / 2) - 1) / 2);
        push(o, m, "second", (pow3(m + 1) - 1) / 8);
        return o;
    }));
    rows.push_back(row("(3^((m+1)/2)-1)/2+(3^m-1)/2", "m = 1 (mod 4)", [half](unsigned m) {
        Members o;
        if (m % 4 == 1) push(o, m, "", (pow3((m + 1) / 2) - 1) / 2 + half(m));
        return o;
    }));
    rows.push_back(row("(3^((m+1)/2)+5)/2", "m = 1 (mod 4)", [](unsigned m) {
        Members o;
        if (m % 4 == 1) push(o, m, "", (pow3((m + 1) / 2) + 5) / 2);
        return o;
    }));
    rows.push_back(row("(3^((m+1)/2)+5)/2+(3^m-1)/2", "m = 3 (mod 4)", [half](unsigned m) {
        Members o;
        if (m % 4 == 3) push(o, m, "", (pow3((m + 1) / 2) + 5) / 2 + half(m));
        return o;
    }));
    rows.push_back(row("(3^((m+1)/4)-1)(3^((m+1)/2)+1)", "m = 3 (mod 4)", [](unsigned m) {
        Members o;
        if (m % 4 == 3) push(o, m, "", (pow3((m + 1) / 4) - 1) * (pow3((m + 1) / 2) + 1));
        return o;
    }));
    rows.push_back(row("3^(m-1)-1, (3^m+1)/4+(3^m-1)/2", "m >= 3 odd", [half](unsigned m) {
        Members o;
        if (m < 3 || m % 2 == 0) return o;
        push(o, m, "first", pow3(m - 1) - 1);
        push(o, m, "second", (pow3(m) + 1) / 4 + half(m));
        return o;
    }));
    rows.push_back(row("2(3^(m-1)-1), 5(3^(m-1)-1)", "m odd, 3 does not divide m", [](unsigned m) {
        Members o;
        if (m % 2 == 0 || m % 3 == 0) return o;
        push(o, m, "k=2", 2 * (pow3(m - 1) - 1));
        push(o, m, "k=5", 5 * (pow3(m - 1) - 1));
        return o;
    }));
    rows.push_back(row("(3^m-3)/2", "m >= 5 odd", [](unsigned m) {
        Members o;
        if (m >= 5 && m % 2 == 1) push(o, m, "", (pow3(m) - 3) / 2);
        return o;
    }));
    rows.push_back(row("(3^m-3)/4", "m odd", [](unsigned m) {
        Members o;
        if (m % 2 == 1) push(o, m, "", (pow3(m) - 3) / 4);
        return o;
    }));
    rows.push_back(row("(3^m-1)/2-2, (3^m-1)/2+10", "m = 2 (mod 4)", [half](unsigned m) {
        Members o;
        if (m % 4 != 2) return o;
        push(o, m, "-2", half(m) - 2);
        push(o, m, "+10", half(m) + 10);
        return o;
    }));
    rows.push_back(row("(3^m-1)/2-5, (3^m-1)/2+7", "m odd", [half](unsigned m) {
        Members o;
        if (m % 2 == 0) return o;
        push(o, m, "-5", half(m) - 5);
        push(o, m, "+7", half(m) + 7);
        return o;
    }));
    rows.push_back(row("(3^(m+1)-1)/8+(3^m-1)/2", "m = 1 (mod 4)", [half](unsigned m) {
        Members o;
        if (m % 4 == 1) push(o, m, "", (pow3(m + 1) - 1) / 8 + half(m));
        return o;
    }));
    rows.push_back(row("(3^(m-1)-1)/2+3^h", "m even, gcd(m,h+1) = gcd(3^(h+1)-2,3^m-1) = 1", [](unsigned m) {
        Members o;
        if (m % 2 == 1) return o;
        for (unsigned h = 0; h < m; ++h) {
            if (std::gcd(m, h + 1) == 1 && coprime_to_n(m, pow3(h + 1) - 2)) {
                push(o, m, kv("h", h), (pow3(m - 1) - 1) / 2 + pow3(h));
            }
        }
        return o;
    }));
    rows.push_back(row("(3^m-1)/2+3^s+1", "m even, m/gcd(m,s) odd", [half](unsigned m) {
        Members o;
        if (m % 2 == 1) return o;
        for (unsigned s = 1; s < m; ++s) {
            if ((m / std::gcd(m, s)) % 2 == 1) push(o, m, kv("s", s), half(m) + pow3(s) + 1);
        }
        return o;
    }));
    rows.push_back(row("(3^m-1)/2+3^s-1", "m even, gcd(m,s) = gcd(3^m-1,3^s-2) = 1", [half](unsigned m) {
        Members o;
        if (m % 2 == 1) return o;
        for (unsigned s = 1; s < m; ++s) {
            if (std::gcd(m, s) == 1 && coprime_to_n(m, pow3(s) - 2)) push(o, m, kv("s", s), half(m) + pow3(s) - 1);
        }
        return o;
    }));
    rows.push_back(row("5e = 2", "3 does not divide m", [](unsigned m) {
        Members o;
        if (m % 3 != 0) push_congruence(o, m, "", 5, 2);
        return o;
    }));
    rows.push_back(row("7e = 2", "5 does not divide m", [](unsigned m) {
        Members o;
        if (m % 5 != 0) push_congruence(o, m, "", 7, 2);
        return o;
    }));
    rows.push_back(row("5e = 4", "m > 2, 3 and 5 do not divide m", [](unsigned m) {
        Members o;
        if (m > 2 && m % 3 != 0 && m % 5 != 0) push_congruence(o, m, "", 5, 4);
        return o;
    }));
    rows.push_back(row("e(3^s+1) = 3^t+1", "gcd(m,t-s) = gcd(m,t+s) = 1", [](unsigned m) {
        Members o;
        for (unsigned s = 0; s < m; ++s) {
            for (unsigned t = 0; t < m; ++t) {
                const long long ts = static_cast<long long>(t) - static_cast<long long>(s);
                if (gcd_signed(m, ts) == 1 && std::gcd(m, t + s) == 1) {
                    push_congruence(o, m, kv("s", s) + " " + kv("t", t), pow3(s) + 1, pow3(t) + 1);
                }
            }
        }
        return o;
    }));
    rows.push_back(row("e(3^s+1) = (3^m+1)/2", "m odd", [](unsigned m) {
        Members o;
        if (m % 2 == 0) return o;
        for (unsigned s = 0; s < m; ++s) push_congruence(o, m, kv("s", s), pow3(s) + 1, (pow3(m) + 1) / 2);
        return o;
    }));
    rows.push_back(row("e(3^s-1) = 3^t-1", "gcd(m,t) = gcd(m,t-s) = 1", [](unsigned m) {
        Members o;
        for (unsigned s = 1; s < m; ++s) {
            for (unsigned t = 0; t < m; ++t) {
                const long long ts = static_cast<long long>(t) - static_cast<long long>(s);
                if (std::gcd(m, t) == 1 && gcd_signed(m, ts) == 1) {
                    push_congruence(o, m, kv("s", s) + " " + kv("t", t), pow3(s) - 1, pow3(t) - 1);
                }
            }
        }
        return o;
    }));
    return rows;
}

}  // namespace

const std::vector<FamilySpec>& table1_rows()
{
    static const std::vector<FamilySpec> rows = build_rows();
    return rows;
}

std::vector<CatalogResult> table1_catalog(unsigned m_max, const CheckConfig& config)
{
    std::vector<CatalogResult> out;
    for (const auto& spec : table1_rows()) {
        for (unsigned m = 2; m <= m_max; ++m) {
            for (const auto& member : spec.members(m)) {
                const CheckVerdict v = full_verdict(m, member.e, std::nullopt, config);
                out.push_back({spec.name, m, member.params, member.e, v.optimal, v.reasons});
            }
        }
    }
    return out;
}

}  // namespace ternopt
