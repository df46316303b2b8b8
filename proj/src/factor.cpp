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

#include "ternopt/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ternopt {

namespace {

Gf3Poly random_below(int degree, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> digit(0, 2);
    std::vector<std::uint8_t> d(static_cast<std::size_t>(degree));
    for (auto& c : d) {
        c = static_cast<std::uint8_t>(digit(rng));
    }
    return Gf3Poly::from_digits(d);
}

}  // namespace

Gf3Poly Factorization::expand() const
{
    Gf3Poly out = Gf3Poly::constant(unit);
    for (const auto& t : factors) {
        for (unsigned i = 0; i < t.multiplicity; ++i) {
            out = out * t.factor;
        }
    }
    return out;
}

std::vector<FactorTerm> squarefree_decomposition(const Gf3Poly& monic_f)
{
    std::vector<FactorTerm> out;
    if (monic_f.degree() <= 0) {
        return out;
    }
    const Gf3Poly one = Gf3Poly::constant(1);
    const Gf3Poly fp = monic_f.derivative();
    Gf3Poly rest;  // the part that is a perfect cube
    if (!fp.is_zero()) {
        Gf3Poly c = gcd(monic_f, fp);
        Gf3Poly w = monic_f / c;
        unsigned i = 1;
        while (!w.is_one()) {
            const Gf3Poly y = gcd(w, c);
            const Gf3Poly fac = w / y;
            if (fac.degree() > 0) {
                out.push_back({fac.monic(), i});
            }
            ++i;
            w = y;
            c = c / y;
        }
        if (c.degree() > 0) {
            rest = c.monic();
        }
    } else {
        rest = monic_f;
    }
    if (!rest.is_zero() && rest.degree() > 0) {
        for (auto& t : squarefree_decomposition(rest.cube_root().monic())) {
            out.push_back({std::move(t.factor), 3 * t.multiplicity});
        }
    }
    return out;
}

std::vector<DegreePart> distinct_degree_factorization(const Gf3Poly& squarefree_monic)
{
    std::vector<DegreePart> out;
    Gf3Poly cur = squarefree_monic.monic();
    if (cur.degree() <= 0) {
        return out;
    }
    const Gf3Poly x = Gf3Poly::x();
    FrobeniusMap frob(cur);
    Gf3Poly h = x % cur;
    for (unsigned i = 1; cur.degree() >= 2 * static_cast<int>(i); ++i) {
        h = frob.cube(h);
        const Gf3Poly g = gcd(h - x, cur);
        if (g.degree() > 0) {
            out.push_back({g, i});
            cur = cur / g;
            if (cur.degree() > 0) {
                frob = FrobeniusMap(cur);
                h = h % cur;
            }
        }
    }
    if (cur.degree() > 0) {
        out.push_back({cur, static_cast<unsigned>(cur.degree())});
    }
    return out;
}

std::vector<Gf3Poly> equal_degree_split(const Gf3Poly& f, unsigned d, std::mt19937_64& rng)
{
    const Gf3Poly g = f.monic();
    if (g.degree() <= static_cast<int>(d)) {
        return {g};
    }
    if (g.degree() % static_cast<int>(d) != 0) {
        throw std::invalid_argument("equal_degree_split: degree not a multiple of d");
    }
    const FrobeniusMap frob(g);
    const Gf3Poly one = Gf3Poly::constant(1);
    for (;;) {
        const Gf3Poly a = random_below(g.degree(), rng);
        if (a.degree() < 1) {
            continue;
        }
        Gf3Poly split = gcd(a, g);
        if (split.degree() == 0) {
            // a^{(3^d-1)/2} = prod_{j<d} a^{3^j}
            Gf3Poly power = a;
            Gf3Poly acc = a;
            for (unsigned j = 1; j < d; ++j) {
                power = frob.cube(power);
                acc = mulmod(acc, power, g);
            }
            split = gcd(acc - one, g);
        }
        if (split.degree() > 0 && split.degree() < g.degree()) {
            auto left = equal_degree_split(split, d, rng);
            auto right = equal_degree_split(g / split, d, rng);
            left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
            return left;
        }
    }
}

Factorization factor(const Gf3Poly& f, const FactorOptions& options)
{
    if (f.is_zero()) {
        throw std::domain_error("factor: zero polynomial");
    }
    Factorization out;
    out.unit = f.leading();
    std::mt19937_64 rng(options.seed.value_or(f.hash()));
    for (const auto& sq : squarefree_decomposition(f.monic())) {
        for (const auto& part : distinct_degree_factorization(sq.factor)) {
            for (auto& irr : equal_degree_split(part.product, part.degree, rng)) {
                out.factors.push_back({std::move(irr), sq.multiplicity});
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorTerm& a, const FactorTerm& b) { return canonical_less(a.factor, b.factor); });
    return out;
}

std::vector<DegreeCount> factor_degree_multiset(const Gf3Poly& f)
{
    if (f.is_zero()) {
        throw std::domain_error("factor_degree_multiset: zero polynomial");
    }
    std::map<std::pair<unsigned, unsigned>, std::size_t> tally;
    for (const auto& sq : squarefree_decomposition(f.monic())) {
        for (const auto& part : distinct_degree_factorization(sq.factor)) {
            tally[{part.degree, sq.multiplicity}] += static_cast<std::size_t>(part.product.degree()) / part.degree;
        }
    }
    std::vector<DegreeCount> out;
    for (const auto& [key, count] : tally) {
        out.push_back({key.first, key.second, count});
    }
    return out;
}

}  // namespace ternopt
