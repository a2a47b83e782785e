#pragma once

#include "gscope/factor_univariate.hpp"
#include "gscope/unipoly.hpp"

namespace gscope {

// Homogeneous binary form of a declared degree: sum c[t] * s^t * u^(deg - t).
// The degree is part of the value; the zero form of degree d keeps its degree.
class BinForm {
  public:
    BinForm() = default;
    BinForm(int degree, std::vector<FieldElement> coeffs);
    // Homogenization of an affine polynomial to the given degree.
    static BinForm homogenize(const UniPoly& f, int degree);

    int degree() const { return deg_; }
    bool is_zero() const;
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement coeff(int t) const;

    // The affine polynomial B(s, 1).
    UniPoly dehomogenize() const;
    // Order of vanishing at the point (1:0), i.e. the power of u dividing B.
    int order_at_infinity() const;

    FieldElement eval(const FieldElement& s, const FieldElement& u) const;

    friend BinForm operator*(const BinForm& a, const BinForm& b);
    friend BinForm operator+(const BinForm& a, const BinForm& b);
    BinForm operator-() const;
    friend bool operator==(const BinForm& a, const BinForm& b);

    BinForm embed(const FieldSpec* target) const;

  private:
    int deg_ = -1;  // -1: the unique degreeless zero
    std::vector<FieldElement> c_;
};

// A point of the projective line over some extension.
struct P1Point {
    FieldElement s, u;  // normalized: first nonzero coordinate is 1
    bool at_infinity() const { return u.is_zero(); }
    bool operator==(const P1Point& o) const { return s == o.s && u == o.u; }
};

P1Point p1_normalize(FieldElement s, FieldElement u);
bool p1_less(const P1Point& a, const P1Point& b);
std::string p1_str(const P1Point& p);

// All roots of the form over the algebraic closure with multiplicities;
// each root is represented over the smallest extension containing it.
std::vector<std::pair<P1Point, int>> binform_roots(const BinForm& f);

// Order of vanishing at a specific point of P^1.
int binform_order_at(const BinForm& f, const P1Point& p);

}  // namespace gscope
