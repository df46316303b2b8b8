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

#include "ternopt/codes.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "ternopt/errors.hpp"
#include "ternopt/numthy.hpp"

namespace ternopt {

namespace {

using Elem = FieldContext::Elem;

Elem scale(Elem a, std::uint8_t c) { return c == 2 ? neg(a) : a; }

struct Columns {
    std::vector<Elem> first;   // alpha^i
    std::vector<Elem> second;  // alpha^{e i}
};

Columns parity_columns(const FieldContext& ctx, std::uint64_t n, std::uint64_t e)
{
    Columns c;
    c.first.resize(n);
    c.second.resize(n);
    const Elem ae = ctx.pow(ctx.alpha(), e);
    Elem x = ctx.one();
    Elem y = ctx.one();
    for (std::uint64_t i = 0; i < n; ++i) {
        c.first[i] = x;
        c.second[i] = y;
        x = ctx.mul_x(x);
        y = ctx.mul(y, ae);
    }
    return c;
}

// Lexicographically first word of weight 2 or 3 whose lowest position is i
// with coefficient 1.
std::optional<SparseWord> search_from(std::uint32_t i, const Columns& col, const ZechTable& zt)
{
    const auto n = static_cast<std::uint32_t>(col.first.size());
    for (std::uint32_t j = i + 1; j < n; ++j) {
        for (std::uint8_t cj = 1; cj <= 2; ++cj) {
            const Elem s1 = add(col.first[i], scale(col.first[j], cj));
            const Elem s2 = add(col.second[i], scale(col.second[j], cj));
            if (FieldContext::is_zero(s1)) {
                if (FieldContext::is_zero(s2)) {
                    return SparseWord{{i, 1}, {j, cj}};
                }
                continue;
            }
            for (std::uint8_t ck = 1; ck <= 2; ++ck) {
                // c_k alpha^k = -s1, and c_k^{-1} = c_k
                const std::uint32_t k = zt.log(scale(neg(s1), ck));
                if (k > j && k < n && add(s2, scale(col.second[k], ck)) == Elem{}) {
                    return SparseWord{{i, 1}, {j, cj}, {k, ck}};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool in_C1(const BigNat& e, unsigned m)
{
    const BigNat n = three_pow_minus_one(m);
    const BigNat r = e % n;
    BigNat p(1);
    for (unsigned j = 0; j < m; ++j) {
        if (p % n == r) {
            return true;
        }
        p *= BigNat(3);
    }
    return false;
}

CyclicCode build_C1e(const FieldContext& ctx, const BigNat& e)
{
    const BigNat& n = ctx.order();
    if (e <= BigNat(1) || e >= n) {
        throw std::invalid_argument("build_C1e: need 1 < e < 3^m - 1, got e = " + e.to_decimal());
    }
    const Gf3Poly& m1 = ctx.modulus();
    const Gf3Poly me = minimal_polynomial(ctx, e);
    CyclicCode code;
    code.ctx = &ctx;
    code.e = e;
    code.n = n;
    code.generator = me == m1 ? m1 : m1 * me;
    code.dimension = n - BigNat(static_cast<std::uint64_t>(code.generator.degree()));
    return code;
}

bool dimension_formula_check(const FieldContext& ctx, const BigNat& e)
{
    if (in_C1(e, ctx.m())) {
        throw std::invalid_argument("dimension_formula_check: e lies in C_1");
    }
    const CyclicCode code = build_C1e(ctx, e);
    return static_cast<std::size_t>(code.generator.degree()) == ctx.m() + coset_size(e, 3, ctx.m());
}

std::uint64_t sphere_packing_max_d(std::uint64_t n, std::uint64_t k, unsigned q)
{
    if (k == 0 || k > n || q < 2) {
        throw std::invalid_argument("sphere_packing_max_d: need 0 < k <= n and q >= 2");
    }
    mpz_class budget;
    mpz_ui_pow_ui(budget.get_mpz_t(), q, n - k);
    mpz_class ball = 1;
    mpz_class binom = 1;
    mpz_class qpow = 1;
    std::uint64_t t_max = 0;
    for (std::uint64_t t = 1; t <= n; ++t) {
        binom = binom * static_cast<unsigned long>(n - t + 1) / static_cast<unsigned long>(t);
        qpow *= q - 1;
        ball += binom * qpow;
        if (ball > budget) {
            break;
        }
        t_max = t;
    }
    return std::min({2 * t_max + 2, n - k + 1, n});
}

std::optional<SparseWord> min_weight_at_most_3(const CyclicCode& code, std::uint64_t cap, Exec exec)
{
    if (code.ctx == nullptr) {
        throw std::invalid_argument("min_weight_at_most_3: code has no field context");
    }
    if (code.n > BigNat(cap)) {
        throw CapabilityExceeded("weight oracle: n = " + code.n.to_decimal() + " exceeds the cap " +
                                 std::to_string(cap));
    }
    const FieldContext& ctx = *code.ctx;
    const std::uint64_t n = code.n.to_u64();
    const Columns col = parity_columns(ctx, n, (code.e % code.n).to_u64());
    const ZechTable zt(ctx, 20);
    const auto count = static_cast<std::int64_t>(n);

    if (exec == Exec::serial) {
        for (std::int64_t i = 0; i < count; ++i) {
            if (auto w = search_from(static_cast<std::uint32_t>(i), col, zt)) {
                return w;
            }
        }
        return std::nullopt;
    }

    std::atomic<std::int64_t> best{count};
    std::optional<SparseWord> found;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) {
            continue;
        }
        if (auto w = search_from(static_cast<std::uint32_t>(i), col, zt)) {
#pragma omp critical(ternopt_weight_oracle)
            {
                if (i < best.load()) {
                    best.store(i);
                    found = std::move(w);
                }
            }
        }
    }
    return found;
}

bool is_codeword(const CyclicCode& code, const SparseWord& word)
{
    const FieldContext& ctx = *code.ctx;
    const Elem ae = ctx.pow(ctx.alpha(), code.e);
    Elem s1{};
    Elem s2{};
    for (const auto& [pos, c] : word) {
        s1 = add(s1, scale(ctx.pow(ctx.alpha(), std::uint64_t{pos}), c));
        s2 = add(s2, scale(ctx.pow(ae, std::uint64_t{pos}), c));
    }
    return !word.empty() && FieldContext::is_zero(s1) && FieldContext::is_zero(s2);
}

}  // namespace ternopt
