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

#include "ternopt/bignat.hpp"

#include <algorithm>
#include <cctype>

namespace ternopt {

BigNat::BigNat(std::uint64_t v)
{
    mpz_import(v_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

BigNat::BigNat(const mpz_class& v) : v_(v)
{
    if (sgn(v_) < 0) {
        throw std::domain_error("BigNat: negative value");
    }
}

BigNat BigNat::from_decimal(std::string_view text)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw std::invalid_argument("not a decimal natural number: '" + std::string(text) + "'");
    }
    BigNat out;
    out.v_.set_str(std::string(text), 10);
    return out;
}

BigNat BigNat::pow(std::uint64_t base, std::uint64_t exp)
{
    BigNat out;
    mpz_class b = BigNat(base).v_;
    mpz_pow_ui(out.v_.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

std::string BigNat::to_decimal() const { return v_.get_str(10); }

bool BigNat::fits_u64() const { return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64; }

std::uint64_t BigNat::to_u64() const
{
    if (!fits_u64()) {
        throw std::overflow_error("BigNat value exceeds 64 bits: " + to_decimal());
    }
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, -1, sizeof(out), 0, 0, v_.get_mpz_t());
    return count == 0 ? 0 : out;
}

std::size_t BigNat::bit_length() const
{
    return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

std::uint64_t BigNat::mod_u64(std::uint64_t m) const
{
    if (m == 0) {
        throw std::domain_error("BigNat: modulus zero");
    }
    mpz_class r = v_ % BigNat(m).v_;
    return BigNat(r).to_u64();
}

BigNat& BigNat::operator+=(const BigNat& o)
{
    v_ += o.v_;
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& o)
{
    if (cmp(v_, o.v_) < 0) {
        throw std::domain_error("BigNat: subtraction underflow");
    }
    v_ -= o.v_;
    return *this;
}

BigNat& BigNat::operator*=(const BigNat& o)
{
    v_ *= o.v_;
    return *this;
}

BigNat& BigNat::operator/=(const BigNat& o)
{
    if (o.is_zero()) {
        throw std::domain_error("BigNat: division by zero");
    }
    mpz_fdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

BigNat& BigNat::operator%=(const BigNat& o)
{
    if (o.is_zero()) {
        throw std::domain_error("BigNat: modulus zero");
    }
    mpz_fdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

BigNat gcd(const BigNat& a, const BigNat& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return BigNat(g);
}

BigNat powmod(const BigNat& base, const BigNat& exp, const BigNat& mod)
{
    if (mod.is_zero()) {
        throw std::domain_error("powmod: modulus zero");
    }
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.mpz().get_mpz_t(), exp.mpz().get_mpz_t(), mod.mpz().get_mpz_t());
    return BigNat(r);
}

BigNat three_pow_minus_one(unsigned m) { return BigNat::pow(3, m) - BigNat(1); }

}  // namespace ternopt
