#include "gscope/projective.hpp"

#include <numeric>
#include <sstream>

namespace gscope {

namespace {

void coerce_triple(FieldElement& a, FieldElement& b, FieldElement& c) {
    const FieldSpec* s = nullptr;
    for (const FieldElement* v : {&a, &b, &c})
        if (v->spec()) s = common_field(s, v->spec());
    if (!s) throw std::invalid_argument("all coordinates zero");
    a = a.spec() ? ff_embed_to(a, s) : FieldElement::zero(s);
    b = b.spec() ? ff_embed_to(b, s) : FieldElement::zero(s);
    c = c.spec() ? ff_embed_to(c, s) : FieldElement::zero(s);
}

std::array<FieldElement, 3> normalize_triple(FieldElement a, FieldElement b, FieldElement c) {
    coerce_triple(a, b, c);
    FieldElement* first = nullptr;
    for (FieldElement* v : {&a, &b, &c})
        if (!first && !v->is_zero()) first = v;
    if (!first) throw std::invalid_argument("projective coordinates cannot all vanish");
    const FieldElement inv = first->inverse();
    return {a * inv, b * inv, c * inv};
}

std::uint32_t triple_minimal_level(const FieldElement& a, const FieldElement& b,
                                   const FieldElement& c) {
    const FieldSpec* s = a.spec();
    for (std::uint32_t k = 1; k < s->e; ++k) {
        if (s->e % k != 0) continue;
        if (a.in_subfield(k) && b.in_subfield(k) && c.in_subfield(k)) return k;
    }
    return s->e;
}

}  // namespace

ProjPoint ProjPoint::make(FieldElement x, FieldElement y, FieldElement z) {
    auto n = normalize_triple(std::move(x), std::move(y), std::move(z));
    return ProjPoint{n[0], n[1], n[2]};
}

const FieldSpec* ProjPoint::spec() const { return x.spec(); }

ProjPoint ProjPoint::embedded(const FieldSpec* target) const {
    return ProjPoint{ff_embed_to(x, target), ff_embed_to(y, target), ff_embed_to(z, target)};
}

std::uint32_t ProjPoint::minimal_level() const { return triple_minimal_level(x, y, z); }

std::string ProjPoint::str() const { return x.str() + "," + y.str() + "," + z.str(); }

bool ProjPoint::operator==(const ProjPoint& o) const {
    if (spec() == o.spec()) return x == o.x && y == o.y && z == o.z;
    const FieldSpec* s = common_field(spec(), o.spec());
    const ProjPoint a = embedded(s), b = o.embedded(s);
    return a.x == b.x && a.y == b.y && a.z == b.z;
}

bool point_less(const ProjPoint& a, const ProjPoint& b) {
    const std::uint32_t la = a.minimal_level(), lb = b.minimal_level();
    if (la != lb) return la < lb;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

ProjLine ProjLine::make(FieldElement a, FieldElement b, FieldElement c) {
    auto n = normalize_triple(std::move(a), std::move(b), std::move(c));
    return ProjLine{n[0], n[1], n[2]};
}

const FieldSpec* ProjLine::spec() const { return a.spec(); }

ProjLine ProjLine::embedded(const FieldSpec* target) const {
    return ProjLine{ff_embed_to(a, target), ff_embed_to(b, target), ff_embed_to(c, target)};
}

FieldElement ProjLine::eval(const ProjPoint& p) const {
    const FieldSpec* s = common_field(spec(), p.spec());
    const ProjLine l = embedded(s);
    const ProjPoint q = p.embedded(s);
    return l.a * q.x + l.b * q.y + l.c * q.z;
}

std::string ProjLine::str() const { return a.str() + "," + b.str() + "," + c.str(); }

bool ProjLine::operator==(const ProjLine& o) const {
    if (spec() == o.spec()) return a == o.a && b == o.b && c == o.c;
    const FieldSpec* s = common_field(spec(), o.spec());
    const ProjLine u = embedded(s), v = o.embedded(s);
    return u.a == v.a && u.b == v.b && u.c == v.c;
}

bool line_less(const ProjLine& a, const ProjLine& b) {
    const std::uint32_t la = triple_minimal_level(a.a, a.b, a.c);
    const std::uint32_t lb = triple_minimal_level(b.a, b.b, b.c);
    if (la != lb) return la < lb;
    if (a.a != b.a) return a.a < b.a;
    if (a.b != b.b) return a.b < b.b;
    return a.c < b.c;
}

std::pair<ProjPoint, ProjPoint> ProjLine::span() const {
    const FieldSpec* s = spec();
    const FieldElement zero = FieldElement::zero(s), one = FieldElement::one(s);
    if (!a.is_zero()) {
        return {ProjPoint::make(-b, a, zero), ProjPoint::make(-c, zero, a)};
    }
    if (!b.is_zero()) {
        return {ProjPoint::make(one, zero, zero), ProjPoint::make(zero, -c, b)};
    }
    return {ProjPoint::make(one, zero, zero), ProjPoint::make(zero, one, zero)};
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    const FieldSpec* s = common_field(p.spec(), q.spec());
    const ProjPoint u = p.embedded(s), v = q.embedded(s);
    const FieldElement a = u.y * v.z - u.z * v.y;
    const FieldElement b = u.z * v.x - u.x * v.z;
    const FieldElement c = u.x * v.y - u.y * v.x;
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw std::invalid_argument("line through equal points");
    return ProjLine::make(a, b, c);
}

ProjPoint line_intersection(const ProjLine& l, const ProjLine& m) {
    const FieldSpec* s = common_field(l.spec(), m.spec());
    const ProjLine u = l.embedded(s), v = m.embedded(s);
    const FieldElement x = u.b * v.c - u.c * v.b;
    const FieldElement y = u.c * v.a - u.a * v.c;
    const FieldElement z = u.a * v.b - u.b * v.a;
    if (x.is_zero() && y.is_zero() && z.is_zero())
        throw std::invalid_argument("intersection of equal lines");
    return ProjPoint::make(x, y, z);
}

Mat3 Mat3::identity(const FieldSpec* s) {
    Mat3 r;
    for (auto& v : r.m) v = FieldElement::zero(s);
    r.at(0, 0) = r.at(1, 1) = r.at(2, 2) = FieldElement::one(s);
    return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            FieldElement acc;
            for (int k = 0; k < 3; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

ProjPoint Mat3::apply(const ProjPoint& p) const {
    const FieldSpec* ms = nullptr;
    for (const auto& v : m)
        if (v.spec()) {
            ms = v.spec();
            break;
        }
    const FieldSpec* s = common_field(ms, p.spec());
    const ProjPoint q = p.embedded(s);
    FieldElement coords[3];
    for (int i = 0; i < 3; ++i) {
        FieldElement acc;
        acc = acc + ff_embed_to(at(i, 0), s) * q.x;
        acc = acc + ff_embed_to(at(i, 1), s) * q.y;
        acc = acc + ff_embed_to(at(i, 2), s) * q.z;
        coords[i] = acc;
    }
    return ProjPoint::make(coords[0], coords[1], coords[2]);
}

ProjLine Mat3::apply(const ProjLine& l) const {
    const Mat3 inv = inverse();
    // h' = h o M^{-1}: coefficients are (M^{-1})^T * h
    const FieldSpec* s = common_field(inv.at(0, 0).spec(), l.spec());
    const ProjLine h = l.embedded(s);
    FieldElement coords[3];
    for (int j = 0; j < 3; ++j) {
        coords[j] = ff_embed_to(inv.at(0, j), s) * h.a + ff_embed_to(inv.at(1, j), s) * h.b +
                    ff_embed_to(inv.at(2, j), s) * h.c;
    }
    return ProjLine::make(coords[0], coords[1], coords[2]);
}

FieldElement Mat3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Mat3 Mat3::inverse() const {
    const FieldElement d = det();
    if (d.is_zero()) throw std::invalid_argument("singular matrix");
    const FieldElement inv = d.inverse();
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
            const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            // adjugate: cofactor transpose
            r.at(j, i) = (at(i1, j1) * at(i2, j2) - at(i1, j2) * at(i2, j1)) * inv;
        }
    return r;
}

Mat3 Mat3::normalized() const {
    for (const auto& v : m) {
        if (!v.is_zero()) {
            const FieldElement inv = v.inverse();
            Mat3 r = *this;
            for (auto& w : r.m) w = w * inv;
            return r;
        }
    }
    throw std::invalid_argument("zero matrix");
}

bool Mat3::operator==(const Mat3& o) const {
    for (int i = 0; i < 9; ++i)
        if (!(m[i] == o.m[i])) return false;
    return true;
}

std::string Mat3::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 3; ++i) {
        if (i) os << ";";
        for (int j = 0; j < 3; ++j) {
            if (j) os << ",";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

bool mat_less(const Mat3& a, const Mat3& b) {
    for (int i = 0; i < 9; ++i) {
        if (a.m[i] != b.m[i]) return a.m[i] < b.m[i];
    }
    return false;
}

namespace {
Mat3 basis_with_point_in_column(const ProjPoint& p, int col) {
    const FieldSpec* s = p.spec();
    const FieldElement zero = FieldElement::zero(s), one = FieldElement::one(s);
    const int pivot = !p.x.is_zero() ? 0 : (!p.y.is_zero() ? 1 : 2);
    Mat3 r;
    for (auto& v : r.m) v = zero;
    // the standard basis vectors e_j (j != pivot) fill the columns other
    // than `col`, in ascending order
    std::array<int, 2> other_cols{}, other_rows{};
    for (int c = 0, k = 0; c < 3; ++c)
        if (c != col) other_cols[k++] = c;
    for (int j = 0, k = 0; j < 3; ++j)
        if (j != pivot) other_rows[k++] = j;
    r.at(other_rows[0], other_cols[0]) = one;
    r.at(other_rows[1], other_cols[1]) = one;
    const std::array<FieldElement, 3> pc{p.x, p.y, p.z};
    for (int i = 0; i < 3; ++i) r.at(i, col) = pc[i];
    if (r.det().is_zero()) throw InternalConsistencyError("degenerate coordinate change");
    return r;
}
}  // namespace

Mat3 basis_to_point(const ProjPoint& p) { return basis_with_point_in_column(p, 2); }

Mat3 basis_to_point_axis_y(const ProjPoint& p) { return basis_with_point_in_column(p, 1); }

}  // namespace gscope
