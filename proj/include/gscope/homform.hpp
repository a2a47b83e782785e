#pragma once

#include "gscope/binform.hpp"
#include "gscope/bipoly.hpp"
#include "gscope/projective.hpp"

namespace gscope {

// Homogeneous ternary form of a fixed degree over a field. Coefficients are
// indexed by the X and Y exponents; the Z exponent is implied.
class HomForm {
  public:
    HomForm() = default;
    HomForm(const FieldSpec* spec, int degree);

    const FieldSpec* spec() const { return spec_; }
    int degree() const { return d_; }
    bool is_zero() const;

    FieldElement coeff(int i, int j) const;       // X^i Y^j Z^(d-i-j)
    void set_coeff(int i, int j, FieldElement v);

    FieldElement eval(const ProjPoint& p) const;
    HomForm partial(int var) const;  // 0: X, 1: Y, 2: Z

    friend HomForm operator*(const HomForm& a, const HomForm& b);
    friend HomForm operator+(const HomForm& a, const HomForm& b);
    HomForm operator-() const;
    HomForm scaled(const FieldElement& s) const;
    friend bool operator==(const HomForm& a, const HomForm& b);

    HomForm embedded(const FieldSpec* target) const;

    // F(M * v): substitution by an invertible matrix.
    HomForm substituted(const Mat3& m) const;

    // Restriction to the chart var=1: a bivariate polynomial in the two
    // remaining coordinates, ordered (x, y) by ascending variable index.
    BiPoly dehomogenized(int var) const;
    // Inverse of dehomogenized(2): lifts f(x,y) of total degree <= d.
    static HomForm homogenized(const BiPoly& f, int degree, const FieldSpec* spec);

    // F(P + u R) as a polynomial in u.
    UniPoly restricted_affine(const ProjPoint& p, const ProjPoint& r) const;
    // F(v P + u R) as a binary form in (u, v): the root (0:1) is P.
    BinForm restricted(const ProjPoint& p, const ProjPoint& r) const;
    // Restriction to the line var=0 as a binary form in the two others.
    BinForm boundary(int var) const;

    std::string str() const;  // canonical text grammar

  private:
    const FieldSpec* spec_ = nullptr;
    int d_ = -1;
    std::vector<FieldElement> c_;  // (d+1)*(d+1), index i*(d+1)+j

    int idx(int i, int j) const { return i * (d_ + 1) + j; }
};

}  // namespace gscope
