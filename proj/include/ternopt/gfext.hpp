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

#ifndef TERNOPT_GFEXT_HPP
#define TERNOPT_GFEXT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ternopt/bignat.hpp"
#include "ternopt/gf3poly.hpp"

namespace ternopt {

inline constexpr unsigned kMaxContextDegree = 64;
inline constexpr unsigned kDefaultZechCap = 13;

/// GF(3^m) = GF(3)[x]/(f) for a primitive f of degree m <= 64. Elements are
/// single packed blocks (digit i = coefficient of x^i), so arithmetic never
/// allocates. The class of x is the generator alpha.
class FieldContext {
public:
    using Elem = Gf3Block;

    unsigned m() const { return m_; }
    const Gf3Poly& modulus() const { return modulus_; }
    /// 3^m - 1.
    const BigNat& order() const { return order_; }
    /// Primes dividing the order, with multiplicity, ascending.
    const std::vector<BigNat>& prime_factors_of_order() const { return order_primes_; }
    /// The order as a machine word; valid for m <= 40.
    std::uint64_t order_u64() const { return order_u64_; }

    Elem zero() const { return {}; }
    Elem one() const { return {1, 0}; }
    Elem alpha() const;
    static Elem constant(int c);

    Elem add(Elem a, Elem b) const { return ternopt::add(a, b); }
    Elem sub(Elem a, Elem b) const { return ternopt::sub(a, b); }
    Elem neg(Elem a) const { return ternopt::neg(a); }
    Elem mul_x(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    /// a^e with e reduced modulo the order for a != 0; 0^0 = 1.
    Elem pow(Elem a, const BigNat& e) const;
    Elem alpha_pow(const BigNat& i) const { return pow(alpha(), i); }

    static bool is_zero(Elem a) { return (a.ones | a.twos) == 0; }

    /// Bijection between elements and [0, 3^m): the base-3 value of the
    /// residue's digit vector. Only for m <= 40.
    std::uint64_t encode(Elem a) const;
    Elem decode(std::uint64_t k) const;

    Elem from_poly(const Gf3Poly& p) const;  // reduces modulo f
    Gf3Poly to_poly(Elem a) const;

private:
    friend FieldContext build_context(unsigned m, const std::optional<Gf3Poly>& modulus);
    FieldContext(unsigned m, Gf3Poly modulus, std::vector<BigNat> order_primes);

    unsigned m_ = 0;
    Gf3Poly modulus_;
    BigNat order_;
    std::uint64_t order_u64_ = 0;
    std::vector<BigNat> order_primes_;
    std::uint64_t mask_ = 0;
    Elem low_;  // modulus minus x^m
};

/// True when x has multiplicative order 3^m - 1 modulo the irreducible f.
bool is_primitive(const Gf3Poly& f, const std::vector<BigNat>& order_primes);

/// Builds GF(3^m). Without a modulus, the first primitive monic polynomial in
/// ascending base-3 encoding is used. Throws std::invalid_argument for m
/// outside [1, 64] or a supplied modulus that is not monic of degree m,
/// irreducible and primitive.
FieldContext build_context(unsigned m, const std::optional<Gf3Poly>& modulus = std::nullopt);

/// An element bound to its field. The context must outlive the element.
class FieldElement {
public:
    FieldElement(const FieldContext& ctx, Gf3Block residue) : ctx_(&ctx), v_(residue) {}
    static FieldElement from_poly(const FieldContext& ctx, const Gf3Poly& p) { return {ctx, ctx.from_poly(p)}; }

    const FieldContext& context() const { return *ctx_; }
    Gf3Block raw() const { return v_; }
    Gf3Poly residue() const { return ctx_->to_poly(v_); }
    bool is_zero() const { return FieldContext::is_zero(v_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return {*a.ctx_, a.ctx_->add(a.v_, b.v_)}; }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return {*a.ctx_, a.ctx_->sub(a.v_, b.v_)}; }
    friend FieldElement operator-(const FieldElement& a) { return {*a.ctx_, a.ctx_->neg(a.v_)}; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return {*a.ctx_, a.ctx_->mul(a.v_, b.v_)}; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.v_ == b.v_; }

private:
    const FieldContext* ctx_;
    Gf3Block v_;
};

FieldElement elem_pow(const FieldElement& a, const BigNat& e);

/// eta(a) = a^{(3^m-1)/2} as -1, 0 or 1.
int quadratic_character(const FieldElement& a);

/// Minimal polynomial of alpha^i over GF(3): prod over j in C_i of (x - alpha^j).
Gf3Poly minimal_polynomial(const FieldContext& ctx, const BigNat& i);

/// Discrete logs and Zech logarithms of GF(3^m), m <= cap.
class ZechTable {
public:
    static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

    explicit ZechTable(const FieldContext& ctx, unsigned cap = kDefaultZechCap);

    std::uint32_t order() const { return order_; }
    /// log_alpha of a nonzero element; kNone for 0.
    std::uint32_t log(Gf3Block a) const { return log_[ctx_->encode(a)]; }
    std::uint32_t log_of_code(std::uint64_t code) const { return log_[code]; }
    /// z with alpha^z = alpha^i + 1; kNone where alpha^i = -1.
    std::uint32_t zech(std::uint32_t i) const { return zech_[i]; }

private:
    const FieldContext* ctx_;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
};

}  // namespace ternopt

#endif  // TERNOPT_GFEXT_HPP
