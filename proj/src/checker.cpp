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

#include "ternopt/checker.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "ternopt/errors.hpp"
#include "ternopt/numthy.hpp"

namespace ternopt {

namespace {

using Elem = FieldContext::Elem;
using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

struct ScanPartial {
    std::uint64_t c2 = 0;
    std::uint64_t c3 = 0;
};

// Exponents i in [lo, hi): x = alpha^i walks by one multiplication by x, and
// x^e by one multiplication by alpha^e.
ScanPartial scan_range(const FieldContext& ctx, std::uint64_t e, std::uint64_t lo, std::uint64_t hi)
{
    ScanPartial out;
    const Elem one = ctx.one();
    const Elem step = ctx.pow(ctx.alpha(), e);
    Elem x = ctx.pow(ctx.alpha(), lo);
    Elem xe = ctx.pow(x, e);
    for (std::uint64_t i = lo; i < hi; ++i) {
        const Elem a = ctx.pow(ctx.add(x, one), e);
        if (FieldContext::is_zero(ctx.add(ctx.add(a, xe), one))) {
            ++out.c2;
        }
        if (FieldContext::is_zero(ctx.sub(ctx.sub(a, xe), one))) {
            ++out.c3;
        }
        x = ctx.mul_x(x);
        xe = ctx.mul(xe, step);
    }
    return out;
}

// Contribution of x = alpha^i for one index, in log coordinates.
inline void zech_point(const ZechTable& zt, std::uint64_t n, std::uint64_t half, std::uint64_t e, std::uint64_t i,
                       std::uint64_t& c2, std::uint64_t& c3)
{
    if (i == half) {
        // x = -1, so x + 1 = 0: both reduce to (-1)^e = -1
        if ((e & 1) != 0) {
            ++c2;
            ++c3;
        }
        return;
    }
    const std::uint64_t a = mulmod_u64(zt.zech(static_cast<std::uint32_t>(i)), e, n);  // log (x+1)^e
    const std::uint64_t b = mulmod_u64(i, e, n);                                      // log x^e
    // C2: alpha^a + alpha^b = -1 = alpha^half
    const std::uint64_t d = (a + n - b) % n;
    if (d != half && (b + zt.zech(static_cast<std::uint32_t>(d))) % n == half) {
        ++c2;
    }
    // C3: alpha^a = alpha^b + 1
    if (b != half && a == zt.zech(static_cast<std::uint32_t>(b))) {
        ++c3;
    }
}

CheckVerdict assemble(const FieldContext& ctx, const BigNat& e_reduced, Strategy strategy, const CheckConfig& config)
{
    const unsigned m = ctx.m();
    if (m > config.scan_cap) {
        throw CapabilityExceeded("m = " + std::to_string(m) + " exceeds the scan cap " +
                                 std::to_string(config.scan_cap) + "; use count_large or verify_witness_factor");
    }
    if (strategy == Strategy::automatic) {
        strategy = m <= config.zech_cap ? Strategy::zech : Strategy::scan;
    }
    if (strategy == Strategy::zech && m > config.zech_cap) {
        throw CapabilityExceeded("m = " + std::to_string(m) + " exceeds the Zech cap " +
                                 std::to_string(config.zech_cap));
    }
    CheckVerdict v;
    v.e = e_reduced;
    v.m = m;
    v.c1_even = e_reduced.is_even();
    v.e_not_in_C1 = !in_C1(e_reduced, m);
    v.coset_size = coset_size(e_reduced, 3, m);
    const std::uint64_t e = e_reduced.to_u64();
    SolutionCounts counts;
    if (strategy == Strategy::zech) {
        const ZechTable zt(ctx, config.zech_cap);
        counts = count_by_zech(zt, e, config.exec);
    } else {
        counts = count_by_scan(ctx, e, config.exec);
    }
    v.c2_solution_count = counts.c2;
    v.c3_solution_count = counts.c3;
    v.strategy = strategy;
    if (!v.c1_even) {
        v.reasons.emplace_back(kReasonParity);
    }
    if (!v.e_not_in_C1) {
        v.reasons.emplace_back(kReasonInC1);
    }
    if (v.coset_size != m) {
        v.reasons.emplace_back(kReasonCosetSize);
    }
    if (counts.c2 != 1) {
        v.reasons.emplace_back(kReasonC2);
    }
    if (counts.c3 != 1) {
        v.reasons.emplace_back(kReasonC3);
    }
    v.optimal = v.reasons.empty();
    return v;
}

}  // namespace

std::string_view to_string(Equation eq) { return eq == Equation::C2 ? "C2" : "C3"; }

Equation parse_equation(std::string_view text)
{
    if (text == "C2" || text == "c2") {
        return Equation::C2;
    }
    if (text == "C3" || text == "c3") {
        return Equation::C3;
    }
    throw std::invalid_argument("unknown equation '" + std::string(text) + "' (expected C2 or C3)");
}

std::string_view to_string(Strategy s)
{
    switch (s) {
    case Strategy::scan: return "scan";
    case Strategy::zech: return "zech";
    default: return "auto";
    }
}

std::string_view to_string(WitnessStatus s)
{
    switch (s) {
    case WitnessStatus::verified: return "verified";
    case WitnessStatus::reducible: return "reducible";
    case WitnessStatus::degree_mismatch: return "degree does not divide m";
    default: return "does not divide the equation polynomial";
    }
}

SolutionCounts count_by_scan(const FieldContext& ctx, std::uint64_t e, Exec exec)
{
    const std::uint64_t n = ctx.order_u64();
    SolutionCounts out;
    out.c3 = 1;  // x = 0: 1 - 0 - 1 = 0, while C2 gives 2
    if (exec == Exec::serial) {
        const ScanPartial p = scan_range(ctx, e, 0, n);
        out.c2 += p.c2;
        out.c3 += p.c3;
        return out;
    }
    std::uint64_t c2 = 0;
    std::uint64_t c3 = 0;
    constexpr std::uint64_t kChunk = 4096;
    const auto chunks = static_cast<std::int64_t>((n + kChunk - 1) / kChunk);
#pragma omp parallel for schedule(dynamic) reduction(+ : c2, c3)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
        const ScanPartial p = scan_range(ctx, e, lo, std::min(n, lo + kChunk));
        c2 += p.c2;
        c3 += p.c3;
    }
    out.c2 += c2;
    out.c3 += c3;
    return out;
}

SolutionCounts count_by_zech(const ZechTable& zt, std::uint64_t e, Exec exec)
{
    const std::uint64_t n = zt.order();
    const std::uint64_t half = n / 2;
    e %= n;
    std::uint64_t c2 = 0;
    std::uint64_t c3 = 1;  // x = 0
    if (exec == Exec::serial) {
        for (std::uint64_t i = 0; i < n; ++i) {
            zech_point(zt, n, half, e, i, c2, c3);
        }
        return {c2, c3};
    }
    std::uint64_t p2 = 0;
    std::uint64_t p3 = 0;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) reduction(+ : p2, p3)
    for (std::int64_t i = 0; i < count; ++i) {
        zech_point(zt, n, half, e, static_cast<std::uint64_t>(i), p2, p3);
    }
    return {c2 + p2, c3 + p3};
}

CheckVerdict check(const FieldContext& ctx, const BigNat& e, Strategy strategy, const CheckConfig& config)
{
    if (e <= BigNat(1) || e >= ctx.order()) {
        throw std::invalid_argument("check: need 1 < e < 3^m - 1, got e = " + e.to_decimal());
    }
    return assemble(ctx, e, strategy, config);
}

Gf3Poly equation_polynomial(const BigNat& e, Equation which, std::uint64_t cap)
{
    const Gf3Poly p = binomial_power_poly(e, cap);
    const Gf3Poly xe = Gf3Poly::monomial(1, e.to_u64());
    const Gf3Poly one = Gf3Poly::constant(1);
    return which == Equation::C2 ? p + xe + one : p - xe - one;
}

std::uint64_t count_large(const BigNat& e, unsigned m, Equation which, std::uint64_t cap)
{
    if (m == 0 || e.is_zero()) {
        throw std::invalid_argument("count_large: need m >= 1 and e >= 1");
    }
    const Gf3Poly f = equation_polynomial(e, which, cap);
    if (f.is_zero()) {
        // e a power of 3: every element solves C3
        return (three_pow_minus_one(m) + BigNat(1)).to_u64();
    }
    return count_roots_in_subfield(f, m);
}

WitnessStatus verify_witness(const BigNat& e, unsigned m, Equation which, const Gf3Poly& f)
{
    if (f.degree() < 1 || f.leading() != 1) {
        throw std::invalid_argument("verify_witness: factor must be monic of positive degree");
    }
    if (!is_irreducible(f)) {
        return WitnessStatus::reducible;
    }
    if (m % static_cast<unsigned>(f.degree()) != 0) {
        return WitnessStatus::degree_mismatch;
    }
    const Gf3Poly x = Gf3Poly::x();
    const Gf3Poly one = Gf3Poly::constant(1);
    const Gf3Poly a = modpow(x + one, e, f);
    const Gf3Poly b = modpow(x, e, f);
    const Gf3Poly r = (which == Equation::C2 ? a + b + one : a - b - one) % f;
    return r.is_zero() ? WitnessStatus::verified : WitnessStatus::not_a_divisor;
}

const FieldContext& default_context(unsigned m)
{
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<FieldContext>> cache;
    const std::lock_guard lock(mu);
    auto& slot = cache[m];
    if (!slot) {
        slot = std::make_unique<FieldContext>(build_context(m));
    }
    return *slot;
}

CheckVerdict full_verdict(unsigned m, const BigNat& e, const std::optional<Gf3Poly>& modulus,
                          const CheckConfig& config)
{
    if (m == 0) {
        throw std::invalid_argument("full_verdict: m must be >= 1");
    }
    const BigNat n = three_pow_minus_one(m);
    const BigNat r = e % n;
    if (r.is_zero()) {
        throw std::invalid_argument("full_verdict: e = " + e.to_decimal() + " is a multiple of 3^m - 1");
    }
    if (m <= config.scan_cap) {
        const FieldContext owned = modulus ? build_context(m, modulus) : FieldContext(default_context(m));
        CheckVerdict v = assemble(owned, r, Strategy::automatic, config);
        v.e = e;
        return v;
    }
    CheckVerdict v;
    v.e = e;
    v.m = m;
    v.c1_even = r.is_even();
    v.e_not_in_C1 = !in_C1(r, m);
    v.coset_size = coset_size(r, 3, m);
    if (!v.c1_even) {
        v.reasons.emplace_back(kReasonParity);
    }
    if (!v.e_not_in_C1) {
        v.reasons.emplace_back(kReasonInC1);
    }
    if (v.coset_size != m) {
        v.reasons.emplace_back(kReasonCosetSize);
    }
    if (v.reasons.empty()) {
        throw CapabilityExceeded("m = " + std::to_string(m) + " exceeds the scan cap " +
                                 std::to_string(config.scan_cap) +
                                 "; C2/C3 need count_large or verify_witness_factor");
    }
    return v;
}

}  // namespace ternopt
