#pragma once

#include "gscope/unipoly.hpp"

namespace gscope {

// Bivariate polynomial: outer variable y, coefficients polynomials in x.
using BiPoly = Poly<UniPoly>;

UniPoly bp_content_x(const BiPoly& f);
BiPoly bp_primitive(const BiPoly& f);  // content removed, leading scalar 1

BiPoly bp_swap_xy(const BiPoly& f);
BiPoly bp_deriv_y(const BiPoly& f);
BiPoly bp_deriv_x(const BiPoly& f);
int bp_degree_x(const BiPoly& f);
int bp_total_degree(const BiPoly& f);

UniPoly bp_eval_x(const BiPoly& f, const FieldElement& a);  // polynomial in y
UniPoly bp_eval_y(const BiPoly& f, const FieldElement& a);  // polynomial in x
FieldElement bp_eval(const BiPoly& f, const FieldElement& x, const FieldElement& y);

BiPoly bp_embed(const BiPoly& f, const FieldSpec* target);
BiPoly bp_shift_x(const BiPoly& f, const FieldElement& a);  // x -> x + a
BiPoly bp_trunc_x(const BiPoly& f, int k);                  // mod x^k
// coefficient-wise Frobenius x -> x^(p^k) on the base field
BiPoly bp_coeff_pow_p(const BiPoly& f, std::uint32_t k);
// p-th root of a polynomial lying in F[x^p, y^p]
BiPoly bp_pth_root(const BiPoly& f);

// Division in y by a divisor whose leading y-coefficient is the constant 1.
void bp_divmod_monic(const BiPoly& f, const BiPoly& g, BiPoly& q, BiPoly& r);

std::string bp_str(const BiPoly& f, const std::string& xvar, const std::string& yvar);

// Canonical comparison used to order factor lists deterministically.
bool bp_less(const BiPoly& a, const BiPoly& b);

}  // namespace gscope
