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

#include "ternopt/gfext.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "ternopt/errors.hpp"
#include "ternopt/numthy.hpp"

namespace ternopt {

namespace {

std::vector<BigNat> distinct(std::vector<BigNat> primes)
{
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

}  // namespace

FieldContext::FieldContext(unsigned m, Gf3Poly modulus, std::vector<BigNat> order_primes)
    : m_(m), modulus_(std::move(modulus)), order_(three_pow_minus_one(m)), order_primes_(std::move(order_primes))
{
    order_u64_ = order_.fits_u64() ? order_.to_u64() : 0;
    mask_ = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    const auto& blocks = modulus_.blocks();
    low_ = {blocks[0].ones & mask_, blocks[0].twos & mask_};
}

FieldContext::Elem FieldContext::alpha() const { return m_ == 1 ? from_poly(Gf3Poly::x()) : Elem{2, 0}; }

FieldContext::Elem FieldContext::constant(int c)
{
    switch (((c % 3) + 3) % 3) {
    case 1: return {1, 0};
    case 2: return {0, 1};
    default: return {};
    }
}

FieldContext::Elem FieldContext::mul_x(Elem a) const
{
    const unsigned top = m_ - 1;
    const bool c1 = ((a.ones >> top) & 1) != 0;
    const bool c2 = ((a.twos >> top) & 1) != 0;
    Elem s{(a.ones << 1) & mask_, (a.twos << 1) & mask_};
    // x^m = -low
    if (c1) {
        s = ternopt::sub(s, low_);
    } else if (c2) {
        s = ternopt::add(s, low_);
    }
    return s;
}

FieldContext::Elem FieldContext::mul(Elem a, Elem b) const
{
    const std::uint64_t support = b.ones | b.twos;
    if (support == 0 || is_zero(a)) {
        return {};
    }
    Elem acc{};
    for (int i = 63 - std::countl_zero(support); i >= 0; --i) {
        acc = mul_x(acc);
        if (((b.ones >> i) & 1) != 0) {
            acc = ternopt::add(acc, a);
        } else if (((b.twos >> i) & 1) != 0) {
            acc = ternopt::sub(acc, a);
        }
    }
    return acc;
}

FieldContext::Elem FieldContext::pow(Elem a, std::uint64_t e) const
{
    if (e == 0) {
        return one();
    }
    if (is_zero(a)) {
        return {};
    }
    if (order_u64_ != 0) {
        e %= order_u64_;
    }
    Elem result = one();
    Elem base = a;
    while (e != 0) {
        if ((e & 1) != 0) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e != 0) {
            base = mul(base, base);
        }
    }
    return result;
}

FieldContext::Elem FieldContext::pow(Elem a, const BigNat& e) const
{
    if (e.is_zero()) {
        return one();
    }
    if (is_zero(a)) {
        return {};
    }
    const BigNat r = e % order_;
    if (r.fits_u64()) {
        return pow(a, r.to_u64());
    }
    Elem result = one();
    for (std::size_t i = r.bit_length(); i-- > 0;) {
        result = mul(result, result);
        if (r.test_bit(i)) {
            result = mul(result, a);
        }
    }
    return result;
}

std::uint64_t FieldContext::encode(Elem a) const
{
    std::uint64_t v = 0;
    for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
        v = v * 3 + ((a.ones >> i) & 1) + 2 * ((a.twos >> i) & 1);
    }
    return v;
}

FieldContext::Elem FieldContext::decode(std::uint64_t k) const
{
    Elem a{};
    for (unsigned i = 0; i < m_ && k != 0; ++i, k /= 3) {
        const auto d = k % 3;
        if (d == 1) {
            a.ones |= std::uint64_t{1} << i;
        } else if (d == 2) {
            a.twos |= std::uint64_t{1} << i;
        }
    }
    return a;
}

FieldContext::Elem FieldContext::from_poly(const Gf3Poly& p) const
{
    const Gf3Poly r = p % modulus_;
    return r.is_zero() ? Elem{} : r.blocks()[0];
}

Gf3Poly FieldContext::to_poly(Elem a) const { return Gf3Poly::from_blocks({a}); }

bool is_primitive(const Gf3Poly& f, const std::vector<BigNat>& order_primes)
{
    const unsigned m = static_cast<unsigned>(f.degree());
    const BigNat n = three_pow_minus_one(m);
    const Gf3Poly x = Gf3Poly::x();
    if (!modpow(x, n, f).is_one()) {
        return false;
    }
    for (const auto& p : distinct(order_primes)) {
        if (modpow(x, n / p, f).is_one()) {
            return false;
        }
    }
    return true;
}

FieldContext build_context(unsigned m, const std::optional<Gf3Poly>& modulus)
{
    if (m == 0 || m > kMaxContextDegree) {
        throw std::invalid_argument("build_context: m = " + std::to_string(m) + " outside [1, " +
                                    std::to_string(kMaxContextDegree) + "]");
    }
    std::vector<BigNat> primes = prime_factors(three_pow_minus_one(m));
    if (modulus) {
        const Gf3Poly& f = *modulus;
        if (f.degree() != static_cast<int>(m) || f.leading() != 1) {
            throw std::invalid_argument("build_context: modulus must be monic of degree " + std::to_string(m));
        }
        if (!is_irreducible(f)) {
            throw std::invalid_argument("build_context: modulus " + f.to_algebraic() + " is not irreducible");
        }
        if (!is_primitive(f, primes)) {
            throw std::invalid_argument("build_context: modulus " + f.to_algebraic() + " is not primitive");
        }
        return FieldContext(m, f, std::move(primes));
    }
    std::vector<std::uint8_t> digits(m + 1, 0);
    digits[m] = 1;
    for (;;) {
        // base-3 counter over the low digits, least significant first
        std::size_t i = 0;
        while (i < m && digits[i] == 2) {
            digits[i++] = 0;
        }
        if (i == m) {
            throw std::logic_error("build_context: no primitive polynomial found");
        }
        ++digits[i];
        if (digits[0] == 0) {
            continue;
        }
        const Gf3Poly f = Gf3Poly::from_digits(digits);
        if (is_irreducible(f) && is_primitive(f, primes)) {
            return FieldContext(m, f, std::move(primes));
        }
    }
}

FieldElement elem_pow(const FieldElement& a, const BigNat& e) { return {a.context(), a.context().pow(a.raw(), e)}; }

int quadratic_character(const FieldElement& a)
{
    if (a.is_zero()) {
        return 0;
    }
    const FieldContext& ctx = a.context();
    const auto r = ctx.pow(a.raw(), ctx.order() / BigNat(2));
    return r == ctx.one() ? 1 : -1;
}

Gf3Poly minimal_polynomial(const FieldContext& ctx, const BigNat& i)
{
    if (i >= ctx.order()) {
        throw std::invalid_argument("minimal_polynomial: exponent not below 3^m - 1");
    }
    std::vector<Gf3Block> coeffs{ctx.one()};
    for (const auto& j : coset(i, 3, ctx.m()).members) {
        const Gf3Block root = ctx.alpha_pow(j);
        std::vector<Gf3Block> next(coeffs.size() + 1);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] = ctx.add(next[k + 1], coeffs[k]);
            next[k] = ctx.sub(next[k], ctx.mul(root, coeffs[k]));
        }
        coeffs = std::move(next);
    }
    std::vector<std::uint8_t> digits(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Gf3Block c = coeffs[k];
        if (((c.ones | c.twos) & ~std::uint64_t{1}) != 0) {
            throw std::logic_error("minimal_polynomial: coefficient outside GF(3)");
        }
        digits[k] = static_cast<std::uint8_t>((c.ones & 1) + 2 * (c.twos & 1));
    }
    return Gf3Poly::from_digits(digits);
}

ZechTable::ZechTable(const FieldContext& ctx, unsigned cap) : ctx_(&ctx)
{
    if (ctx.m() > cap || ctx.m() > 20) {
        throw CapabilityExceeded("Zech table for m = " + std::to_string(ctx.m()) + " exceeds the cap m <= " +
                                 std::to_string(std::min(cap, 20u)));
    }
    order_ = static_cast<std::uint32_t>(ctx.order_u64());
    log_.assign(static_cast<std::size_t>(order_) + 1, kNone);
    zech_.assign(order_, kNone);
    Gf3Block cur = ctx.one();
    for (std::uint32_t i = 0; i < order_; ++i) {
        log_[ctx.encode(cur)] = i;
        cur = ctx.mul_x(cur);
    }
    cur = ctx.one();
    for (std::uint32_t i = 0; i < order_; ++i) {
        const Gf3Block next = ctx.add(cur, ctx.one());
        if (!FieldContext::is_zero(next)) {
            zech_[i] = log_[ctx.encode(next)];
        }
        cur = ctx.mul_x(cur);
    }
}

}  // namespace ternopt
