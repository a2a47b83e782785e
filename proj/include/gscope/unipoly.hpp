#pragma once

#include <initializer_list>
#include <optional>
#include <string>

#include "gscope/poly.hpp"

namespace gscope {

using UniPoly = Poly<FieldElement>;

// Convenience constructor from small integer coefficients, c0 first.
UniPoly up_make(const FieldSpec* spec, std::initializer_list<std::int64_t> coeffs);

void up_divmod(const UniPoly& f, const UniPoly& g, UniPoly& q, UniPoly& r);
UniPoly up_mod(const UniPoly& f, const UniPoly& g);
UniPoly up_monic(const UniPoly& f);
UniPoly up_gcd(const UniPoly& a, const UniPoly& b);  // monic
UniPoly up_powmod(const UniPoly& base, std::uint64_t n, const UniPoly& mod);
// Monic g = gcd(a, b) together with s, t such that s*a + t*b = g.
UniPoly up_ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t);

// Largest k with (x-a)^k | f; nullopt encodes infinity (the zero polynomial).
std::optional<int> local_order(const UniPoly& f, const FieldElement& a);

// Coefficient-wise embedding into a larger field.
UniPoly up_embed(const UniPoly& f, const FieldSpec* target);

// Monic random polynomial of exact degree deg.
UniPoly up_random_monic(const FieldSpec* spec, int deg, class Rng& rng);
// Random polynomial of degree < deg_bound (possibly zero).
UniPoly up_random_below(const FieldSpec* spec, int deg_bound, class Rng& rng);

std::string poly_str(const UniPoly& f, const std::string& var);

}  // namespace gscope
