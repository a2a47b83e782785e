#pragma once

#include "gscope/bipoly.hpp"
#include "gscope/factor_univariate.hpp"

namespace gscope {

struct BiFactor {
    BiPoly factor;  // primitive in x, leading scalar 1
    int multiplicity = 1;
};

// Complete factorization over the coefficient field: evaluation, Hensel
// lifting, factor recombination, and Frobenius-orbit descent when the good
// evaluation point only exists in an extension. The product of
// factor^multiplicity equals the input up to a scalar.
std::vector<BiFactor> factor_bivariate(const BiPoly& f, std::uint64_t seed = 0x5eed);

bool bp_is_irreducible(const BiPoly& f);

// Irreducibility over the algebraic closure. A degree-d polynomial that is
// irreducible over GF(q) splits over GF(q^r) into r conjugate factors with
// r | d, so checking GF(q^l) for the primes l dividing d is exhaustive.
// Returns the witness field level (in multiples of the base degree) and a
// factor through `witness` when reducible.
bool bp_absolutely_irreducible(const BiPoly& f, std::string* witness = nullptr);

}  // namespace gscope
