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

#include "ternopt/numthy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ternopt/errors.hpp"

namespace ternopt {

namespace {

void require_prime_base(unsigned p)
{
    if (p < 2 || !is_probable_prime(BigNat(p))) {
        throw std::invalid_argument("base p = " + std::to_string(p) + " is not prime");
    }
}

BigNat modulus_for(unsigned p, unsigned m)
{
    if (m == 0) {
        throw std::invalid_argument("extension degree m must be >= 1");
    }
    return BigNat::pow(p, m) - BigNat(1);
}

mpz_class floor_mod(const mpz_class& x, const mpz_class& n)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    return r;
}

mpz_class brent_rho(const mpz_class& n, unsigned long c_seed)
{
    if (mpz_even_p(n.get_mpz_t())) {
        return 2;
    }
    mpz_class y = 2 + c_seed;
    mpz_class c = 1 + c_seed;
    mpz_class g = 1;
    mpz_class q = 1;
    mpz_class x;
    mpz_class ys;
    constexpr unsigned long kBatch = 128;
    for (unsigned long r = 1; g == 1; r <<= 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) {
            y = floor_mod(y * y + c, n);
        }
        for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
            ys = y;
            const unsigned long lim = std::min(kBatch, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = floor_mod(y * y + c, n);
                q = floor_mod(q * abs(x - y), n);
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
    }
    if (g == n) {
        // batch overshot; replay one step at a time
        do {
            ys = floor_mod(ys * ys + c, n);
            mpz_class diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void factor_into(const mpz_class& n, std::vector<mpz_class>& out)
{
    if (n == 1) {
        return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        out.push_back(n);
        return;
    }
    for (unsigned long seed = 1;; ++seed) {
        const mpz_class d = brent_rho(n, seed);
        if (d != n && d != 1) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

}  // namespace

PPart p_part(const BigNat& n, unsigned p)
{
    require_prime_base(p);
    if (n.is_zero()) {
        return {};
    }
    mpz_class rest = n.mpz();
    const mpz_class base = p;
    mpz_class power = 1;
    while (mpz_divisible_p(rest.get_mpz_t(), base.get_mpz_t()) != 0) {
        rest /= base;
        power *= base;
    }
    return {BigNat(power)};
}

BigNat p_prime_part(const BigNat& n, unsigned p)
{
    if (n.is_zero()) {
        throw std::invalid_argument("p'-part of 0 is undefined");
    }
    return n / *p_part(n, p).value;
}

std::optional<unsigned> valuation(std::uint64_t n, unsigned p)
{
    if (n == 0) {
        return std::nullopt;
    }
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

CyclotomicCoset coset(const BigNat& j, unsigned p, unsigned m)
{
    require_prime_base(p);
    const BigNat n = modulus_for(p, m);
    if (j >= n) {
        throw std::invalid_argument("coset: representative " + j.to_decimal() + " not below p^m - 1");
    }
    CyclotomicCoset out;
    BigNat x = j;
    for (unsigned s = 0; s < m; ++s) {
        out.members.push_back(x);
        x = (x * BigNat(p)) % n;
    }
    std::sort(out.members.begin(), out.members.end());
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    out.representative = out.members.front();
    return out;
}

std::size_t coset_size(const BigNat& j, unsigned p, unsigned m)
{
    const BigNat n = modulus_for(p, m);
    const BigNat start = j % n;
    BigNat x = start;
    for (unsigned s = 1; s <= m; ++s) {
        x = (x * BigNat(p)) % n;
        if (x == start) {
            return s;
        }
    }
    return m;  // unreachable: j p^m = j (mod p^m - 1)
}

bool coset_size_equals_m_when_gcd2(const BigNat& e, unsigned p, unsigned m)
{
    return gcd(e, modulus_for(p, m)) == BigNat(2);
}

BigNat gcd_qk_minus_1(const BigNat& q, unsigned k, unsigned l)
{
    if (q < BigNat(2) || k == 0 || l == 0) {
        throw std::invalid_argument("gcd_qk_minus_1: need q >= 2 and k, l >= 1");
    }
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), q.mpz().get_mpz_t(), std::gcd(k, l));
    return BigNat(r - 1);
}

BigNat gcd_qk_plus_1(const BigNat& q, unsigned k, unsigned l)
{
    if (q < BigNat(2) || k == 0 || l == 0) {
        throw std::invalid_argument("gcd_qk_plus_1: need q >= 2 and k, l >= 1");
    }
    if (*valuation(k, 2) < *valuation(l, 2)) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), q.mpz().get_mpz_t(), std::gcd(k, l));
        return BigNat(r + 1);
    }
    return q.is_even() ? BigNat(1) : BigNat(2);
}

std::vector<BigNat> solve_even_congruence(const BigNat& coef, const BigNat& rhs, const BigNat& modulus,
                                          std::uint64_t max_solutions)
{
    if (modulus.is_zero()) {
        throw std::invalid_argument("solve_even_congruence: modulus must be positive");
    }
    const mpz_class& n = modulus.mpz();
    const mpz_class c = floor_mod(coef.mpz(), n);
    const mpz_class r = floor_mod(rhs.mpz(), n);

    mpz_class g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());  // gcd(0, n) = n
    if (mpz_divisible_p(r.get_mpz_t(), g.get_mpz_t()) == 0) {
        return {};
    }
    if (g > mpz_class(std::to_string(max_solutions))) {
        throw CapabilityExceeded("solve_even_congruence: " + g.get_str() + " residues exceed the enumeration cap");
    }
    const mpz_class step = n / g;
    mpz_class e0 = 0;
    if (step > 1) {
        mpz_class inv;
        const mpz_class reduced = c / g;
        mpz_invert(inv.get_mpz_t(), reduced.get_mpz_t(), step.get_mpz_t());
        e0 = floor_mod((r / g) * inv, step);
    }
    const bool step_even = mpz_even_p(step.get_mpz_t()) != 0;
    if (step_even && mpz_odd_p(e0.get_mpz_t())) {
        return {};
    }
    std::vector<BigNat> out;
    const unsigned long count = g.get_ui();
    mpz_class e = e0;
    for (unsigned long t = 0; t < count; ++t, e += step) {
        if (mpz_even_p(e.get_mpz_t()) && e > 1 && e < n) {
            out.emplace_back(e);
        }
    }
    return out;
}

std::vector<BigNat> solve_even_e(unsigned m, unsigned h, Sign sign, long long a, std::uint64_t max_solutions)
{
    if (m == 0 || h >= m) {
        throw std::invalid_argument("solve_even_e: need 0 <= h <= m - 1");
    }
    if (a % 2 == 0) {
        throw std::invalid_argument("solve_even_e: a must be odd");
    }
    const BigNat n = modulus_for(3, m);
    const mpz_class three_m = n.mpz() + 1;
    mpz_class three_h;
    mpz_ui_pow_ui(three_h.get_mpz_t(), 3, h);
    const mpz_class coef = floor_mod(three_h + to_int(sign), n.mpz());
    const mpz_class rhs = floor_mod((three_m - mpz_class(std::to_string(a))) / 2, n.mpz());
    return solve_even_congruence(BigNat(coef), BigNat(rhs), n, max_solutions);
}

bool exists_even_e_minus(unsigned m, unsigned h, long long a)
{
    if (((a % 4) + 4) % 4 != 3 || h == 0 || h >= m) {
        throw std::invalid_argument("exists_even_e_minus: need a = 3 (mod 4) and 1 <= h <= m - 1");
    }
    if (m % 2 == 0) {
        return false;
    }
    const mpz_class d = BigNat::pow(3, std::gcd(h, m)).mpz() - 1;
    const mpz_class am1 = mpz_class(std::to_string(a)) - 1;
    return mpz_divisible_p(am1.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool exists_even_e_plus(unsigned m, unsigned /*h*/, long long a)
{
    if (((a % 4) + 4) % 4 != 3) {
        throw std::invalid_argument("exists_even_e_plus: need a = 3 (mod 4)");
    }
    return m % 2 == 1;
}

bool exists_even_e_plus_a1(unsigned m, unsigned h)
{
    if (m == 0 || h >= m) {
        throw std::invalid_argument("exists_even_e_plus_a1: need 0 <= h <= m - 1");
    }
    if (m % 4 == 0) {
        return true;
    }
    if (m % 4 == 2) {
        const auto vh = valuation(h, 2);  // (0)_2 is infinite
        return !vh || *vh >= *valuation(m, 2);
    }
    return false;
}

bool exists_even_e_minus_a1(unsigned m, unsigned h)
{
    if (m < 2 || h == 0 || h >= m) {
        throw std::invalid_argument("exists_even_e_minus_a1: need m > 1 and 1 <= h <= m - 1");
    }
    if (m % 8 == 0) {
        const unsigned half_two_part = (1u << *valuation(m, 2)) / 2;
        return h % half_two_part != 0;
    }
    if (m % 2 == 0) {
        return h % 2 == 1;
    }
    return false;
}

bool is_probable_prime(const BigNat& n) { return mpz_probab_prime_p(n.mpz().get_mpz_t(), 30) != 0; }

std::vector<BigNat> prime_factors(const BigNat& n)
{
    if (n.is_zero()) {
        throw std::invalid_argument("prime_factors: zero");
    }
    std::vector<mpz_class> raw;
    mpz_class rest = n.mpz();
    for (unsigned long d = 2; d <= 1'000'000 && d * d <= rest; d += (d == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
            raw.emplace_back(d);
            rest /= d;
        }
    }
    factor_into(rest, raw);
    std::sort(raw.begin(), raw.end());
    std::vector<BigNat> out;
    out.reserve(raw.size());
    for (const auto& f : raw) {
        out.emplace_back(f);
    }
    return out;
}

}  // namespace ternopt
