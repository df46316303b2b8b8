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

#ifndef TERNOPT_FACTOR_HPP
#define TERNOPT_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ternopt/gf3poly.hpp"

namespace ternopt {

struct FactorTerm {
    Gf3Poly factor;
    unsigned multiplicity = 1;
};

/// unit * prod(factor^multiplicity). Factors are monic, irreducible,
/// pairwise distinct and in canonical_less order.
struct Factorization {
    std::uint8_t unit = 1;
    std::vector<FactorTerm> factors;

    Gf3Poly expand() const;
};

struct FactorOptions {
    /// Overrides the default seed (a hash of the input).
    std::optional<std::uint64_t> seed;
};

/// Square-free decomposition of a monic polynomial: coprime square-free
/// parts with their multiplicities.
std::vector<FactorTerm> squarefree_decomposition(const Gf3Poly& monic_f);

struct DegreePart {
    Gf3Poly product;  // product of every irreducible factor of this degree
    unsigned degree = 0;
};

/// Distinct-degree factorization of a square-free monic polynomial.
std::vector<DegreePart> distinct_degree_factorization(const Gf3Poly& squarefree_monic);

/// Cantor-Zassenhaus splitting of a product of degree-d irreducibles.
std::vector<Gf3Poly> equal_degree_split(const Gf3Poly& f, unsigned d, std::mt19937_64& rng);

Factorization factor(const Gf3Poly& f, const FactorOptions& options = {});

struct DegreeCount {
    unsigned degree = 0;
    unsigned multiplicity = 0;
    std::size_t count = 0;  // distinct irreducible factors with this (degree, multiplicity)

    friend bool operator==(const DegreeCount&, const DegreeCount&) = default;
};

/// Irreducible-factor degree multiset from square-free plus distinct-degree
/// factorization alone (no splitting), sorted by (degree, multiplicity).
std::vector<DegreeCount> factor_degree_multiset(const Gf3Poly& f);

}  // namespace ternopt

#endif  // TERNOPT_FACTOR_HPP
