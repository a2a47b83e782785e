#pragma once

#include "gscope/factor_bivariate.hpp"
#include "gscope/ratfun.hpp"

namespace gscope {

// Polynomial in Y over GF(p^e)(x).
using FunFieldPoly = Poly<RatFun>;

struct FFFactor {
    FunFieldPoly factor;  // monic in Y
    int multiplicity = 1;
};

FunFieldPoly ffp_from_bipoly(const BiPoly& b);
// Clears denominators and removes content in x: a primitive bivariate
// polynomial that equals F up to a unit of GF(q)(x).
BiPoly ffp_clear_denominators(const FunFieldPoly& F);

FunFieldPoly ffp_monic(const FunFieldPoly& F);
void ffp_divmod(const FunFieldPoly& f, const FunFieldPoly& g, FunFieldPoly& q, FunFieldPoly& r);
FunFieldPoly ffp_gcd(const FunFieldPoly& a, const FunFieldPoly& b);
Poly<RatFun> gcd_generic(const Poly<RatFun>& a, const Poly<RatFun>& b);

// Factorization into monic irreducibles over the rational function field,
// realized by clearing denominators and factoring the bivariate polynomial.
std::vector<FFFactor> function_field_factor(const FunFieldPoly& F);

// Searches for a root a(x)/b(x) with deg a, deg b <= height_bound, using the
// rational root constraints b | lc and a | trailing coefficient.
std::optional<RatFun> ffp_bounded_root(const FunFieldPoly& F, int height_bound);

std::string ffp_str(const FunFieldPoly& F, const std::string& xvar, const std::string& yvar);

}  // namespace gscope
