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

#ifndef TERNOPT_BIGNAT_HPP
#define TERNOPT_BIGNAT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ternopt {

/// Arbitrary-precision natural number. Backed by GMP; the value is never
/// negative, and operations that would leave the naturals throw.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v);  // NOLINT(google-explicit-constructor)
    explicit BigNat(const mpz_class& v);

    /// Parses a decimal string. Throws std::invalid_argument on anything
    /// other than one or more ASCII digits.
    static BigNat from_decimal(std::string_view text);
    static BigNat pow(std::uint64_t base, std::uint64_t exp);

    std::string to_decimal() const;
    bool fits_u64() const;
    std::uint64_t to_u64() const;  // throws std::overflow_error

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }
    std::size_t bit_length() const;
    bool test_bit(std::size_t i) const { return mpz_tstbit(v_.get_mpz_t(), i) != 0; }
    std::uint64_t mod_u64(std::uint64_t m) const;

    const mpz_class& mpz() const { return v_; }

    BigNat& operator+=(const BigNat& o);
    BigNat& operator-=(const BigNat& o);  // throws std::domain_error on underflow
    BigNat& operator*=(const BigNat& o);
    BigNat& operator/=(const BigNat& o);  // throws std::domain_error on zero divisor
    BigNat& operator%=(const BigNat& o);

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
    friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
    friend BigNat operator/(BigNat a, const BigNat& b) { return a /= b; }
    friend BigNat operator%(BigNat a, const BigNat& b) { return a %= b; }

    friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigNat& n) { return os << n.to_decimal(); }

private:
    mpz_class v_{0};
};

BigNat gcd(const BigNat& a, const BigNat& b);
/// Modular exponentiation; `mod` must be nonzero.
BigNat powmod(const BigNat& base, const BigNat& exp, const BigNat& mod);
/// 3^m - 1, the multiplicative order of GF(3^m).
BigNat three_pow_minus_one(unsigned m);

}  // namespace ternopt

#endif  // TERNOPT_BIGNAT_HPP
