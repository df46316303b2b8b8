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

#ifndef TERNOPT_FAMILIES_HPP
#define TERNOPT_FAMILIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ternopt/bignat.hpp"
#include "ternopt/checker.hpp"
#include "ternopt/factor.hpp"
#include "ternopt/gf3poly.hpp"

namespace ternopt {

struct FamilyExponent {
    BigNat e;
    bool applicable = false;
};

/// e = (3^((m+3)/2) + 5)/2. Applicable when m = 7, 11 (mod 12) and
/// gcd(m, 13) = 1. Throws std::invalid_argument for even m or m <= 1.
FamilyExponent thm31_exponent(unsigned m);

/// e = (3^((m+2)/3) + 5)/2. Applicable when m = 1 (mod 6) and
/// gcd(m, 235) = 1. Throws std::invalid_argument unless 3 | m + 2 and m > 1.
FamilyExponent thm32_exponent(unsigned m);

/// One even solution of a family congruence. condition holds the family's
/// side condition (always true where the family has none); verdict is
/// empty when m is past the scan cap and no cheap test decides.
struct FamilyCode {
    BigNat e;
    bool condition = true;
    std::optional<CheckVerdict> verdict;
};

/// e (3^h - 1) = (3^m - a)/2 with a = 2 delta 3^t + 1, every even solution,
/// flagged with gcd(e - c 3^t, 3^m - 1) == c where c = (delta + 3)/2.
/// Requires m > 1 odd, 1 <= h < m, gcd(h, m) = 1, delta = +-1, t <= 38.
std::vector<FamilyCode> thm41_codes(unsigned m, unsigned h, unsigned t, int delta,
                                    const CheckConfig& config = {});

/// e (3^h + 1) = (3^m - a)/2 with a = 1 - 2 3^t. Empty for even m.
/// Requires 0 <= h < m and t <= 38.
std::vector<FamilyCode> thm42_codes(unsigned m, unsigned h, unsigned t, const CheckConfig& config = {});

struct Thm51Result {
    bool minus_empty = false;
    bool plus_empty = false;

    bool confirmed() const { return minus_empty && plus_empty; }
};

/// Checks that neither e (3^h - 1) nor e (3^h + 1) = (3^m - a)/2 has an
/// even solution. Requires a = 5 (mod 8) and 0 <= h < m.
Thm51Result thm51_scan(unsigned m, unsigned h, long long a);

enum class Disqualifier { coset_size, c2, c3, none };

std::string_view to_string(Disqualifier d);

struct Thm56Entry {
    BigNat e;
    Disqualifier reason = Disqualifier::none;
    CheckVerdict verdict;
};

/// Every even e with e (3^h + 1) = (3^m - 1)/2, with the first condition
/// it fails. Disqualifier::none would be a counterexample to the
/// nonexistence result. Requires m within the scan cap.
std::vector<Thm56Entry> thm56_scan(unsigned m, unsigned h, const CheckConfig& config = {});

struct ExploreRow {
    std::uint64_t t = 0;
    BigNat e;  // reduced modulo 3^m - 1
    bool optimal = false;
    /// Weight oracle agreement, present when 3^m - 1 <= the oracle cap.
    std::optional<bool> oracle_agrees;
};

/// e(t) = (3^h + 1)/2 + (3^h + 1) t with h = m/2, for t in [0, t_max].
/// The findings are empirical. Requires m = 2 (mod 4), m within the scan
/// cap and t_max <= 3^h - 2.
std::vector<ExploreRow> prob62_explore(unsigned m, std::uint64_t t_max, const CheckConfig& config = {});

enum class Problem { p79, p710 };

std::string_view to_string(Problem p);
Problem parse_problem(std::string_view text);

/// (3^h + 5)/2 for 7.9, (3^h - 5)/2 for 7.10. Throws std::invalid_argument
/// when (m, h) is outside the problem's hypotheses.
BigNat problem_exponent(Problem p, unsigned m, unsigned h);

struct WitnessCheck {
    Gf3Poly factor;
    WitnessStatus status = WitnessStatus::not_a_divisor;
};

struct HuntReport {
    unsigned m = 0;
    unsigned h = 0;
    Problem problem = Problem::p79;
    BigNat e;
    Equation equation = Equation::C3;
    /// Irreducible factors of the equation polynomial that split in
    /// GF(3^m), or the verified witnesses in witness mode.
    std::vector<DegreeCount> factor_degrees;
    std::uint64_t root_count = 0;
    bool lower_bound = false;  // witness mode: root_count counts certified roots only
    std::vector<WitnessCheck> witnesses;

    bool refutes() const { return root_count > 1; }
};

/// Counts both equations through count_large when e is within the
/// expansion cap and reports the one with more roots. Past the cap the
/// witnesses (factors of the polynomial for `which`) are verified instead;
/// with none supplied CapabilityExceeded is thrown.
HuntReport hunt_counterexample(unsigned m, unsigned h, Problem problem, const std::vector<Gf3Poly>& witnesses = {},
                               Equation which = Equation::C3, std::uint64_t expansion_cap = kDefaultExpansionCap);

struct Lemma32Result {
    Gf3Poly polynomial;  // F - x^27 G
    Factorization factorization;
    std::vector<DegreeCount> degrees;
};

/// Factors F(x) - x^27 G(x) where F, G come from f = x(-x^4+x^3-x^2-x+1)^2
/// and g = (x^4-x^3-x^2+x-1)^2 through the substitution x^q -> f/g.
Lemma32Result reproduce_lemma32_factorization();

/// One exponent of a catalog row at a given m, with the row's auxiliary
/// parameters rendered for display.
struct FamilyMember {
    std::string params;
    BigNat e;
};

/// A known family: exponents for a given m (empty when the row's
/// conditions fail there). Every listed exponent is claimed optimal.
struct FamilySpec {
    std::string name;
    std::string conditions;
    std::function<std::vector<FamilyMember>(unsigned m)> members;
};

const std::vector<FamilySpec>& table1_rows();

struct CatalogResult {
    std::string row;
    unsigned m = 0;
    std::string params;
    BigNat e;  // reduced modulo 3^m - 1
    bool optimal = false;
    std::vector<std::string> reasons;
};

/// full_verdict for every member of every row, 2 <= m <= m_max. A result
/// with optimal == false is a mismatch.
std::vector<CatalogResult> table1_catalog(unsigned m_max, const CheckConfig& config = {});

}  // namespace ternopt

#endif  // TERNOPT_FAMILIES_HPP
