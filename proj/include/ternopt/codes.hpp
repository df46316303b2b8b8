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

#ifndef TERNOPT_CODES_HPP
#define TERNOPT_CODES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ternopt/bignat.hpp"
#include "ternopt/gf3poly.hpp"
#include "ternopt/gfext.hpp"

namespace ternopt {

/// The ternary cyclic code C(1,e) of length 3^m - 1 generated by
/// lcm(m_1(x), m_e(x)).
struct CyclicCode {
    const FieldContext* ctx = nullptr;
    BigNat e;
    BigNat n;
    Gf3Poly generator;
    BigNat dimension;
};

struct CodeParams {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::optional<std::uint64_t> d;
};

/// Requires 1 < e < 3^m - 1.
CyclicCode build_C1e(const FieldContext& ctx, const BigNat& e);

/// deg(generator) == m + |C_e|. Requires e outside C_1.
bool dimension_formula_check(const FieldContext& ctx, const BigNat& e);

/// True when e = 3^j (mod 3^m - 1) for some j.
bool in_C1(const BigNat& e, unsigned m);

/// Largest d allowed by the sphere-packing bound (and d <= n - k + 1).
std::uint64_t sphere_packing_max_d(std::uint64_t n, std::uint64_t k, unsigned q);

inline constexpr std::uint64_t kDefaultOracleCap = 1000;

/// A nonzero codeword as (position, coefficient) pairs.
using SparseWord = std::vector<std::pair<std::uint32_t, std::uint8_t>>;

enum class Exec { serial, parallel };

/// Exhaustive search for a codeword of weight 1, 2 or 3 using the parity
/// check columns (alpha^i, alpha^{e i}). Weight-3 words are completed from
/// each pair by a discrete-log lookup. Throws CapabilityExceeded for n > cap.
/// Both execution modes return the same (lexicographically first) word.
std::optional<SparseWord> min_weight_at_most_3(const CyclicCode& code, std::uint64_t cap = kDefaultOracleCap,
                                               Exec exec = Exec::parallel);

/// Checks c(alpha) = c(alpha^e) = 0 directly.
bool is_codeword(const CyclicCode& code, const SparseWord& word);

}  // namespace ternopt

#endif  // TERNOPT_CODES_HPP
