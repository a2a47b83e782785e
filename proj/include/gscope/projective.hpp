#pragma once

#include <array>
#include <string>

#include "gscope/field.hpp"

namespace gscope {

// Point of P^2 in canonical form: first nonzero coordinate equals 1.
struct ProjPoint {
    FieldElement x, y, z;

    static ProjPoint make(FieldElement x, FieldElement y, FieldElement z);
    const FieldSpec* spec() const;
    ProjPoint embedded(const FieldSpec* target) const;
    // Smallest absolute extension degree over GF(p) that contains the point.
    std::uint32_t minimal_level() const;
    std::string str() const;  // "x,y,z" in the element grammar

    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
};

bool point_less(const ProjPoint& a, const ProjPoint& b);

// Line of P^2 by its dual coordinates: the zero set of a*X + b*Y + c*Z.
struct ProjLine {
    FieldElement a, b, c;

    static ProjLine make(FieldElement a, FieldElement b, FieldElement c);
    const FieldSpec* spec() const;
    ProjLine embedded(const FieldSpec* target) const;
    FieldElement eval(const ProjPoint& p) const;
    bool contains(const ProjPoint& p) const { return eval(p).is_zero(); }
    std::string str() const;

    bool operator==(const ProjLine& o) const;
    bool operator!=(const ProjLine& o) const { return !(*this == o); }

    // Deterministic basis of the point row: two independent points spanning
    // the line.
    std::pair<ProjPoint, ProjPoint> span() const;
};

bool line_less(const ProjLine& a, const ProjLine& b);

ProjLine line_through(const ProjPoint& p, const ProjPoint& q);
ProjPoint line_intersection(const ProjLine& l, const ProjLine& m);

// 3x3 matrix over a common field, acting on column-vector points.
struct Mat3 {
    std::array<FieldElement, 9> m;  // row-major

    static Mat3 identity(const FieldSpec* s);
    const FieldElement& at(int r, int c) const { return m[3 * r + c]; }
    FieldElement& at(int r, int c) { return m[3 * r + c]; }

    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    ProjPoint apply(const ProjPoint& p) const;
    // Image of a line under the point action: coefficients transform by the
    // inverse transpose.
    ProjLine apply(const ProjLine& l) const;
    FieldElement det() const;
    Mat3 inverse() const;
    Mat3 normalized() const;  // first nonzero entry scaled to 1
    bool operator==(const Mat3& o) const;

    std::string str() const;
};

bool mat_less(const Mat3& a, const Mat3& b);

// Invertible matrix whose third column is P: it maps (0:0:1) to P.
Mat3 basis_to_point(const ProjPoint& p);
// Invertible matrix whose second column is P: it maps (0:1:0) to P.
Mat3 basis_to_point_axis_y(const ProjPoint& p);

}  // namespace gscope
