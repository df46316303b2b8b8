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

#ifndef TERNOPT_GF3POLY_HPP
#define TERNOPT_GF3POLY_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ternopt/bignat.hpp"

namespace ternopt {

/// 64 GF(3) digits in bit-sliced form: bit i of `ones` is set when digit i
/// is 1, bit i of `twos` when it is 2. The two masks are disjoint.
struct Gf3Block {
    std::uint64_t ones = 0;
    std::uint64_t twos = 0;

    friend bool operator==(const Gf3Block&, const Gf3Block&) = default;
};

/// Digit-wise sum of 64 packed GF(3) digits.
constexpr Gf3Block add(Gf3Block x, Gf3Block y) noexcept
{
    const std::uint64_t t = (x.ones | y.twos) ^ (x.twos | y.ones);
    return {(x.twos | y.twos) ^ t, (x.ones | y.ones) ^ t};
}

constexpr Gf3Block neg(Gf3Block x) noexcept { return {x.twos, x.ones}; }

constexpr Gf3Block sub(Gf3Block x, Gf3Block y) noexcept { return add(x, neg(y)); }

/// Dense univariate polynomial over GF(3). Immutable value type; the zero
/// polynomial has degree -1 and an empty block vector.
class Gf3Poly {
public:
    static constexpr int kZeroDegree = -1;

    Gf3Poly() = default;

    /// Little-endian coefficient digits; each must be 0, 1 or 2.
    static Gf3Poly from_digits(std::span<const std::uint8_t> digits);
    static Gf3Poly constant(int c);
    /// c * x^k, with c taken mod 3.
    static Gf3Poly monomial(int c, std::size_t k);
    static Gf3Poly x() { return monomial(1, 1); }
    static Gf3Poly from_blocks(std::vector<Gf3Block> blocks);

    /// Digit-string form: "1201" is 1 + 2x + x^3.
    static Gf3Poly from_text(std::string_view text);
    /// Accepts the digit-string form or an algebraic string like "x^5+2x+1".
    static Gf3Poly parse(std::string_view text);

    std::string to_text() const;
    std::string to_algebraic() const;

    bool is_zero() const { return degree_ < 0; }
    bool is_one() const { return degree_ == 0 && coeff(0) == 1; }
    int degree() const { return degree_; }
    std::uint8_t coeff(std::size_t i) const;
    std::uint8_t leading() const { return is_zero() ? 0 : coeff(static_cast<std::size_t>(degree_)); }
    std::vector<std::uint8_t> digits() const;
    std::size_t weight() const;
    std::span<const Gf3Block> blocks() const { return blocks_; }

    Gf3Poly monic() const;
    Gf3Poly scaled(int c) const;
    Gf3Poly shifted(std::size_t k) const;
    Gf3Poly derivative() const;
    /// f(x^3); over GF(3) this equals f(x)^3.
    Gf3Poly cubed() const;
    /// Inverse of cubed(): requires every nonzero coefficient at an index
    /// divisible by 3.
    Gf3Poly cube_root() const;

    std::uint64_t hash() const;

    friend Gf3Poly operator+(const Gf3Poly& a, const Gf3Poly& b);
    friend Gf3Poly operator-(const Gf3Poly& a, const Gf3Poly& b);
    friend Gf3Poly operator-(const Gf3Poly& a);
    friend Gf3Poly operator*(const Gf3Poly& a, const Gf3Poly& b);
    friend bool operator==(const Gf3Poly& a, const Gf3Poly& b)
    {
        return a.degree_ == b.degree_ && a.blocks_ == b.blocks_;
    }

private:
    explicit Gf3Poly(std::vector<Gf3Block> blocks);
    void normalize();

    std::vector<Gf3Block> blocks_;
    int degree_ = kZeroDegree;
};

/// Canonical order: degree ascending, then the base-3 integer encoding of
/// the coefficient vector ascending.
bool canonical_less(const Gf3Poly& a, const Gf3Poly& b);

struct DivRem {
    Gf3Poly quotient;
    Gf3Poly remainder;
};

DivRem divrem(const Gf3Poly& a, const Gf3Poly& b);
Gf3Poly operator/(const Gf3Poly& a, const Gf3Poly& b);
Gf3Poly operator%(const Gf3Poly& a, const Gf3Poly& b);

/// Monic gcd. Throws std::invalid_argument if both inputs are zero.
Gf3Poly gcd(const Gf3Poly& a, const Gf3Poly& b);
Gf3Poly mulmod(const Gf3Poly& a, const Gf3Poly& b, const Gf3Poly& modulus);
Gf3Poly modpow(const Gf3Poly& base, const BigNat& exp, const Gf3Poly& modulus);

/// h -> h^3 mod f as a GF(3)-linear map, using the precomputed rows
/// x^{3i} mod f (the Berlekamp matrix). Large moduli fall back to
/// cube-then-reduce.
class FrobeniusMap {
public:
    explicit FrobeniusMap(Gf3Poly modulus);

    const Gf3Poly& modulus() const { return modulus_; }
    Gf3Poly cube(const Gf3Poly& h) const;

    /// Row count above which the matrix is not materialized.
    static constexpr int kMaxMatrixDegree = 20000;

private:
    Gf3Poly modulus_;
    std::size_t row_words_ = 0;
    std::vector<Gf3Block> rows_;  // deg(modulus) rows of row_words_ blocks
};

/// x^{3^k} mod modulus by k successive cubings.
Gf3Poly frobenius_power(unsigned k, const Gf3Poly& modulus);

inline constexpr std::uint64_t kDefaultExpansionCap = std::uint64_t{1} << 20;

/// (x+1)^e as a dense polynomial; coefficients from Lucas' theorem.
/// Throws CapabilityExceeded when e > cap.
Gf3Poly binomial_power_poly(const BigNat& e, std::uint64_t cap = kDefaultExpansionCap);

/// Rabin's test. Throws std::invalid_argument for constants.
bool is_irreducible(const Gf3Poly& f);

/// Number of distinct roots of f in GF(3^m).
std::size_t count_roots_in_subfield(const Gf3Poly& f, unsigned m);

/// Reads the one-polynomial-per-line corpus format ('#' comments, blank
/// lines skipped).
std::vector<Gf3Poly> read_poly_file(const std::filesystem::path& path);

}  // namespace ternopt

#endif  // TERNOPT_GF3POLY_HPP
