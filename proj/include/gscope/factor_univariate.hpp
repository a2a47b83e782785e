#pragma once

#include <vector>

#include "gscope/rng.hpp"
#include "gscope/unipoly.hpp"

namespace gscope {

struct UniFactor {
    UniPoly factor;  // monic irreducible
    int multiplicity = 1;
};

// Complete factorization over the coefficient field. The product of
// factor^multiplicity times the returned unit equals the input. Randomized
// equal-degree splitting draws from a generator seeded from `seed`, and the
// output is sorted canonically, so results are reproducible.
std::vector<UniFactor> factor_univariate(const UniPoly& f, std::uint64_t seed = 0x5eed);

bool up_is_irreducible(const UniPoly& f);

// Roots in the field of f's coefficients.
std::vector<FieldElement> up_roots(const UniPoly& f);

// Roots found in GF(p^(e*m')) for m' <= m, tagged by minimal level. Returned
// elements live in extensions of the coefficient field of f.
std::vector<FieldElement> up_roots_in_extension(const UniPoly& f, std::uint32_t m);

// Splits f completely: every root over the algebraic closure, each
// represented in GF(p^(e*k)) where k is the degree of its minimal polynomial
// factor. Pairs are (root, multiplicity).
std::vector<std::pair<FieldElement, int>> up_all_roots(const UniPoly& f);

}  // namespace gscope
