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

#ifndef TERNOPT_NUMTHY_HPP
#define TERNOPT_NUMTHY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ternopt/bignat.hpp"

namespace ternopt {

enum class Sign : int { Minus = -1, Plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

/// p-part (n)_p: the largest power of p dividing n. (0)_p is infinite.
struct PPart {
    std::optional<BigNat> value;  // empty means infinity

    bool is_infinite() const { return !value.has_value(); }
    friend bool operator==(const PPart&, const PPart&) = default;
};

PPart p_part(const BigNat& n, unsigned p);
/// n / (n)_p. Throws std::invalid_argument for n = 0.
BigNat p_prime_part(const BigNat& n, unsigned p);
/// Exponent of p in n; nullopt for n = 0.
std::optional<unsigned> valuation(std::uint64_t n, unsigned p);

/// The p-cyclotomic coset {j p^s mod p^m - 1}. The representative is the
/// smallest member.
struct CyclotomicCoset {
    BigNat representative;
    std::vector<BigNat> members;  // ascending

    std::size_t size() const { return members.size(); }
};

CyclotomicCoset coset(const BigNat& j, unsigned p, unsigned m);
/// |C_j| without materializing the members.
std::size_t coset_size(const BigNat& j, unsigned p, unsigned m);
/// gcd(e, p^m - 1) == 2, a sufficient condition for |C_e| = m.
bool coset_size_equals_m_when_gcd2(const BigNat& e, unsigned p, unsigned m);

/// gcd(q^k - 1, q^l - 1) = q^gcd(k,l) - 1.
BigNat gcd_qk_minus_1(const BigNat& q, unsigned k, unsigned l);
/// gcd(q^k + 1, q^l - 1): q^gcd(k,l) + 1 when (k)_2 < (l)_2, else gcd(2, q+1).
BigNat gcd_qk_plus_1(const BigNat& q, unsigned k, unsigned l);

/// Default bound on the number of residues solve_even_e will enumerate.
inline constexpr std::uint64_t kMaxCongruenceSolutions = 50'000'000;

/// Every even e with 1 < e < modulus and coef * e = rhs (mod modulus),
/// ascending. Throws CapabilityExceeded when gcd(coef, modulus) residues
/// would have to be enumerated beyond max_solutions.
std::vector<BigNat> solve_even_congruence(const BigNat& coef, const BigNat& rhs, const BigNat& modulus,
                                          std::uint64_t max_solutions = kMaxCongruenceSolutions);

/// Every even e with 1 < e < 3^m - 1 and e (3^h + sign) = (3^m - a)/2
/// (mod 3^m - 1), ascending. a must be odd.
std::vector<BigNat> solve_even_e(unsigned m, unsigned h, Sign sign, long long a,
                                 std::uint64_t max_solutions = kMaxCongruenceSolutions);

/// Minus-sign existence for a = 3 (mod 4): m odd and (3^gcd(h,m) - 1) | (a - 1).
bool exists_even_e_minus(unsigned m, unsigned h, long long a);
/// Plus-sign existence for a = 3 (mod 4): m odd.
bool exists_even_e_plus(unsigned m, unsigned h, long long a);
/// Plus-sign existence for a = 1: m = 0 (mod 4), or m = 2 (mod 4) and
/// (h)_2 >= (m)_2.
bool exists_even_e_plus_a1(unsigned m, unsigned h);
/// Minus-sign existence for a = 1: m = 0 (mod 8) and h != 0 (mod (m)_2/2),
/// or m = 2, 4, 6 (mod 8) and h odd.
bool exists_even_e_minus_a1(unsigned m, unsigned h);

bool is_probable_prime(const BigNat& n);
/// Prime factors with multiplicity, ascending. Trial division to 10^6, then
/// Pollard rho with Brent's cycle finding.
std::vector<BigNat> prime_factors(const BigNat& n);

}  // namespace ternopt

#endif  // TERNOPT_NUMTHY_HPP
