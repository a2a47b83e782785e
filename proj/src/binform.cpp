#include "gscope/binform.hpp"

#include <algorithm>
#include <sstream>

namespace gscope {

BinForm::BinForm(int degree, std::vector<FieldElement> coeffs) : deg_(degree), c_(std::move(coeffs)) {
    if (degree < 0) throw std::invalid_argument("binary form degree must be >= 0");
    c_.resize(degree + 1, FieldElement());
}

BinForm BinForm::homogenize(const UniPoly& f, int degree) {
    if (f.degree() > degree) throw std::invalid_argument("degree too small to homogenize");
    std::vector<FieldElement> c(degree + 1, FieldElement());
    for (int i = 0; i <= f.degree(); ++i) c[i] = f.coeff(i);
    return BinForm(degree, std::move(c));
}

bool BinForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

FieldElement BinForm::coeff(int t) const {
    if (t < 0 || t > deg_) return FieldElement();
    return c_[t];
}

UniPoly BinForm::dehomogenize() const {
    return UniPoly::from_coeffs(c_);
}

int BinForm::order_at_infinity() const {
    if (is_zero()) throw std::invalid_argument("order of the zero form");
    return deg_ - dehomogenize().degree();
}

FieldElement BinForm::eval(const FieldElement& s, const FieldElement& u) const {
    FieldElement acc;
    // Horner in s with powers of u
    for (int t = deg_; t >= 0; --t) acc = acc * s + c_[t] * u.pow(deg_ - t);
    return acc;
}

BinForm operator*(const BinForm& a, const BinForm& b) {
    if (a.deg_ < 0 || b.deg_ < 0) throw std::invalid_argument("degreeless zero in product");
    std::vector<FieldElement> c(a.deg_ + b.deg_ + 1, FieldElement());
    for (int i = 0; i <= a.deg_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j <= b.deg_; ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return BinForm(a.deg_ + b.deg_, std::move(c));
}

BinForm operator+(const BinForm& a, const BinForm& b) {
    if (a.deg_ != b.deg_) throw std::invalid_argument("degree mismatch in binary form sum");
    std::vector<FieldElement> c(a.deg_ + 1);
    for (int i = 0; i <= a.deg_; ++i) c[i] = a.c_[i] + b.c_[i];
    return BinForm(a.deg_, std::move(c));
}

BinForm BinForm::operator-() const {
    BinForm r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

bool operator==(const BinForm& a, const BinForm& b) {
    if (a.deg_ != b.deg_) return false;
    for (int i = 0; i <= a.deg_; ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

BinForm BinForm::embed(const FieldSpec* target) const {
    std::vector<FieldElement> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v.spec() ? ff_embed_to(v, target) : FieldElement());
    return BinForm(deg_, std::move(c));
}

// Affine-first normalization: (a:1) for finite points, (1:0) for infinity.
P1Point p1_normalize(FieldElement s, FieldElement u) {
    coerce_pair(s, u);
    if (!u.is_zero()) {
        const FieldElement inv = u.inverse();
        return P1Point{s * inv, unit_of(u)};
    }
    if (s.is_zero()) throw std::invalid_argument("(0:0) is not a point of P^1");
    return P1Point{unit_of(s), u.spec() ? FieldElement::zero(u.spec()) : FieldElement::zero(s.spec())};
}

bool p1_less(const P1Point& a, const P1Point& b) {
    if (a.at_infinity() != b.at_infinity()) return b.at_infinity();  // finite first
    if (a.s < b.s) return true;
    if (b.s < a.s) return false;
    return a.u < b.u;
}

std::string p1_str(const P1Point& p) {
    return "(" + p.s.str() + ":" + p.u.str() + ")";
}

std::vector<std::pair<P1Point, int>> binform_roots(const BinForm& f) {
    if (f.is_zero()) throw std::invalid_argument("roots of the zero form");
    std::vector<std::pair<P1Point, int>> out;
    const int k_inf = f.order_at_infinity();
    const FieldSpec* s = base_spec(f.dehomogenize());
    if (k_inf > 0)
        out.emplace_back(P1Point{FieldElement::one(s), FieldElement::zero(s)}, k_inf);
    const UniPoly affine = f.dehomogenize();
    if (affine.degree() >= 1) {
        for (const auto& [root, mult] : up_all_roots(affine)) {
            out.emplace_back(P1Point{root, FieldElement::one(root.spec())}, mult);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return p1_less(a.first, b.first); });
    return out;
}

int binform_order_at(const BinForm& f, const P1Point& p) {
    if (f.is_zero()) throw std::invalid_argument("order of the zero form");
    const FieldSpec* target = common_field(base_spec(f.dehomogenize()), p.s.spec());
    const BinForm g = f.embed(target);
    if (p.at_infinity()) return g.order_at_infinity();
    auto ord = local_order(g.dehomogenize(), ff_embed_to(p.s, target));
    return *ord;
}

}  // namespace gscope
