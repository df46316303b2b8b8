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

#ifndef TERNOPT_CHECKER_HPP
#define TERNOPT_CHECKER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ternopt/bignat.hpp"
#include "ternopt/codes.hpp"
#include "ternopt/gf3poly.hpp"
#include "ternopt/gfext.hpp"

namespace ternopt {

/// C2: (x+1)^e + x^e + 1 = 0.  C3: (x+1)^e - x^e - 1 = 0.
enum class Equation { C2, C3 };

std::string_view to_string(Equation eq);
Equation parse_equation(std::string_view text);

enum class Strategy { automatic, scan, zech };

std::string_view to_string(Strategy s);

inline constexpr unsigned kDefaultScanCap = 15;

struct CheckConfig {
    unsigned scan_cap = kDefaultScanCap;
    unsigned zech_cap = kDefaultZechCap;
    std::uint64_t expansion_cap = kDefaultExpansionCap;
    Exec exec = Exec::parallel;
};

// Failure tags carried in CheckVerdict::reasons.
inline constexpr std::string_view kReasonParity = "C1";
inline constexpr std::string_view kReasonInC1 = "e in C_1";
inline constexpr std::string_view kReasonCosetSize = "coset size";
inline constexpr std::string_view kReasonC2 = "C2";
inline constexpr std::string_view kReasonC3 = "C3";

struct CheckVerdict {
    BigNat e;  // as given
    unsigned m = 0;
    bool c1_even = false;
    bool e_not_in_C1 = false;
    std::size_t coset_size = 0;
    /// Absent when the field was too large to scan and a cheaper test
    /// already decided the verdict.
    std::optional<std::uint64_t> c2_solution_count;
    std::optional<std::uint64_t> c3_solution_count;
    bool optimal = false;
    std::vector<std::string> reasons;
    std::optional<Strategy> strategy;  // how the counts were obtained
};

struct SolutionCounts {
    std::uint64_t c2 = 0;
    std::uint64_t c3 = 0;

    friend bool operator==(const SolutionCounts&, const SolutionCounts&) = default;
};

/// Field-scan kernels: evaluate both equations at every element of GF(3^m)
/// for the reduced exponent e (0 < e < 3^m - 1).
SolutionCounts count_by_scan(const FieldContext& ctx, std::uint64_t e, Exec exec);
SolutionCounts count_by_zech(const ZechTable& zt, std::uint64_t e, Exec exec);

/// Exact C1/C2/C3 verdict. Requires 1 < e < 3^m - 1 and m <= scan cap.
CheckVerdict check(const FieldContext& ctx, const BigNat& e, Strategy strategy = Strategy::automatic,
                   const CheckConfig& config = {});

/// The explicit polynomial (x+1)^e +- x^e +- 1.
Gf3Poly equation_polynomial(const BigNat& e, Equation which, std::uint64_t cap = kDefaultExpansionCap);

/// Roots in GF(3^m) of the explicit equation polynomial. Throws
/// CapabilityExceeded when e is above the expansion cap.
std::uint64_t count_large(const BigNat& e, unsigned m, Equation which, std::uint64_t cap = kDefaultExpansionCap);

enum class WitnessStatus { verified, reducible, degree_mismatch, not_a_divisor };

std::string_view to_string(WitnessStatus s);

/// Certifies deg f solutions of the equation in GF(3^m): f irreducible,
/// deg f | m, and f divides (x+1)^e +- x^e +- 1 (checked with modpow).
/// Throws std::invalid_argument if f is not monic of positive degree.
WitnessStatus verify_witness(const BigNat& e, unsigned m, Equation which, const Gf3Poly& f);
inline bool verify_witness_factor(const BigNat& e, unsigned m, Equation which, const Gf3Poly& f)
{
    return verify_witness(e, m, which, f) == WitnessStatus::verified;
}

/// Parity, C_1 membership and coset size first, then C2/C3 counts when the
/// field is within the scan cap. e is reduced modulo 3^m - 1; a multiple of
/// 3^m - 1 is rejected. Beyond the scan cap a verdict is returned only when
/// one of the cheap tests fails; otherwise CapabilityExceeded is thrown.
CheckVerdict full_verdict(unsigned m, const BigNat& e, const std::optional<Gf3Poly>& modulus = std::nullopt,
                          const CheckConfig& config = {});

/// Cached default-modulus context for m (built on first use, thread-safe).
const FieldContext& default_context(unsigned m);

}  // namespace ternopt

#endif  // TERNOPT_CHECKER_HPP
