#include "gscope/homform.hpp"

#include <sstream>

namespace gscope {

HomForm::HomForm(const FieldSpec* spec, int degree) : spec_(spec), d_(degree) {
    if (!spec) throw std::invalid_argument("null field spec");
    if (degree < 0) throw std::invalid_argument("negative degree");
    c_.assign((degree + 1) * (degree + 1), FieldElement::zero(spec));
}

bool HomForm::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

FieldElement HomForm::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > d_) return FieldElement::zero(spec_);
    return c_[idx(i, j)];
}

void HomForm::set_coeff(int i, int j, FieldElement v) {
    if (i < 0 || j < 0 || i + j > d_) throw std::invalid_argument("monomial outside the form");
    c_[idx(i, j)] = std::move(v);
}

FieldElement HomForm::eval(const ProjPoint& p) const {
    const FieldSpec* s = common_field(spec_, p.spec());
    const ProjPoint q = p.embedded(s);
    // powers
    std::vector<FieldElement> px(d_ + 1), py(d_ + 1), pz(d_ + 1);
    px[0] = py[0] = pz[0] = FieldElement::one(s);
    for (int k = 1; k <= d_; ++k) {
        px[k] = px[k - 1] * q.x;
        py[k] = py[k - 1] * q.y;
        pz[k] = pz[k - 1] * q.z;
    }
    FieldElement acc = FieldElement::zero(s);
    for (int i = 0; i <= d_; ++i)
        for (int j = 0; i + j <= d_; ++j) {
            const FieldElement& cv = c_[idx(i, j)];
            if (cv.is_zero()) continue;
            acc = acc + ff_embed_to(cv, s) * px[i] * py[j] * pz[d_ - i - j];
        }
    return acc;
}

HomForm HomForm::partial(int var) const {
    if (d_ == 0) return HomForm(spec_, 0);
    HomForm r(spec_, d_ - 1);
    for (int i = 0; i <= d_; ++i)
        for (int j = 0; i + j <= d_; ++j) {
            const FieldElement& cv = c_[idx(i, j)];
            if (cv.is_zero()) continue;
            const int k = d_ - i - j;
            if (var == 0 && i > 0)
                r.set_coeff(i - 1, j, r.coeff(i - 1, j) + FieldElement::scalar(spec_, i) * cv);
            if (var == 1 && j > 0)
                r.set_coeff(i, j - 1, r.coeff(i, j - 1) + FieldElement::scalar(spec_, j) * cv);
            if (var == 2 && k > 0)
                r.set_coeff(i, j, r.coeff(i, j) + FieldElement::scalar(spec_, k) * cv);
        }
    return r;
}

HomForm operator*(const HomForm& a, const HomForm& b) {
    if (a.spec_ != b.spec_) throw std::invalid_argument("field mismatch");
    HomForm r(a.spec_, a.d_ + b.d_);
    for (int i = 0; i <= a.d_; ++i)
        for (int j = 0; i + j <= a.d_; ++j) {
            const FieldElement& av = a.c_[a.idx(i, j)];
            if (av.is_zero()) continue;
            for (int k = 0; k <= b.d_; ++k)
                for (int l = 0; k + l <= b.d_; ++l) {
                    const FieldElement& bv = b.c_[b.idx(k, l)];
                    if (bv.is_zero()) continue;
                    r.set_coeff(i + k, j + l, r.coeff(i + k, j + l) + av * bv);
                }
        }
    return r;
}

HomForm operator+(const HomForm& a, const HomForm& b) {
    if (a.spec_ != b.spec_ || a.d_ != b.d_) throw std::invalid_argument("form mismatch");
    HomForm r = a;
    for (int i = 0; i <= a.d_; ++i)
        for (int j = 0; i + j <= a.d_; ++j) r.set_coeff(i, j, a.coeff(i, j) + b.coeff(i, j));
    return r;
}

HomForm HomForm::operator-() const {
    HomForm r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

HomForm HomForm::scaled(const FieldElement& s) const {
    HomForm r = *this;
    for (auto& v : r.c_) v = v * s;
    return r;
}

bool operator==(const HomForm& a, const HomForm& b) {
    if (a.spec_ != b.spec_ || a.d_ != b.d_) return false;
    for (int i = 0; i <= a.d_; ++i)
        for (int j = 0; i + j <= a.d_; ++j)
            if (!(a.coeff(i, j) == b.coeff(i, j))) return false;
    return true;
}

HomForm HomForm::embedded(const FieldSpec* target) const {
    HomForm r(target, d_);
    for (int i = 0; i <= d_; ++i)
        for (int j = 0; i + j <= d_; ++j) r.set_coeff(i, j, ff_embed_to(coeff(i, j), target));
    return r;
}

HomForm HomForm::substituted(const Mat3& m) const {
    // rows of m give the linear forms substituted for X, Y, Z
    const FieldSpec* s = spec_;
    auto linear = [&](int row) {
        HomForm l(s, 1);
        l.set_coeff(1, 0, m.at(row, 0));
        l.set_coeff(0, 1, m.at(row, 1));
        l.set_coeff(0, 0, m.at(row, 2));
        return l;
    };
    const HomForm lx = linear(0), ly = linear(1), lz = linear(2);
    // powers up to d
    std::vector<HomForm> px{HomForm(s, 0)}, py{HomForm(s, 0)}, pz{HomForm(s, 0)};
    px[0].set_coeff(0, 0, FieldElement::one(s));
    py[0].set_coeff(0, 0, FieldElement::one(s));
    pz[0].set_coeff(0, 0, FieldElement::one(s));
    for (int k = 1; k <= d_; ++k) {
        px.push_back(px[k - 1] * lx);
        py.push_back(py[k - 1] * ly);
        pz.push_back(pz[k - 1] * lz);
    }
    HomForm r(s, d_);
    for (int i = 0; i <= d_; ++i)
        for (int j = 0; i + j <= d_; ++j) {
            const FieldElement& cv = c_[idx(i, j)];
            if (cv.is_zero()) continue;
            const HomForm term = (px[i] * py[j]) * pz[d_ - i - j];
            r = r + term.scaled(cv);
        }
    return r;
}

BiPoly HomForm::dehomogenized(int var) const {
    // remaining variables in ascending index order become (x, y)
    std::vector<std::vector<FieldElement>> grid;  // [y-deg][x-deg]
    for (int i = 0; i <= d_; ++i)
        for (int j = 0; i + j <= d_; ++j) {
            const FieldElement& cv = c_[idx(i, j)];
            if (cv.is_zero()) continue;
            const int k = d_ - i - j;
            int xi, yj;
            if (var == 2) {
                xi = i;
                yj = j;
            } else if (var == 1) {
                xi = i;
                yj = k;
            } else {
                xi = j;
                yj = k;
            }
            if (static_cast<std::size_t>(yj) >= grid.size()) grid.resize(yj + 1);
            auto& row = grid[yj];
            if (static_cast<std::size_t>(xi) >= row.size()) row.resize(xi + 1, FieldElement());
            row[xi] = cv;
        }
    std::vector<UniPoly> cs;
    cs.reserve(grid.size());
    for (auto& row : grid) cs.push_back(UniPoly::from_coeffs(std::move(row)));
    return BiPoly::from_coeffs(std::move(cs));
}

HomForm HomForm::homogenized(const BiPoly& f, int degree, const FieldSpec* spec) {
    HomForm r(spec, degree);
    for (int j = 0; j <= f.degree(); ++j) {
        const UniPoly& c = f.coeff(j);
        for (int i = 0; i <= c.degree(); ++i) {
            if (c.coeff(i).is_zero()) continue;
            if (i + j > degree) throw std::invalid_argument("total degree exceeds the form degree");
            r.set_coeff(i, j, c.coeff(i));
        }
    }
    return r;
}

UniPoly HomForm::restricted_affine(const ProjPoint& p, const ProjPoint& r) const {
    const FieldSpec* s = common_field(common_field(spec_, p.spec()), r.spec());
    const ProjPoint a = p.embedded(s), b = r.embedded(s);
    const UniPoly lx = UniPoly::from_coeffs({a.x, b.x});
    const UniPoly ly = UniPoly::from_coeffs({a.y, b.y});
    const UniPoly lz = UniPoly::from_coeffs({a.z, b.z});
    std::vector<UniPoly> px{UniPoly(FieldElement::one(s))}, py = px, pz = px;
    for (int k = 1; k <= d_; ++k) {
        px.push_back(px[k - 1] * lx);
        py.push_back(py[k - 1] * ly);
        pz.push_back(pz[k - 1] * lz);
    }
    UniPoly acc;
    for (int i = 0; i <= d_; ++i)
        for (int j = 0; i + j <= d_; ++j) {
            const FieldElement& cv = c_[idx(i, j)];
            if (cv.is_zero()) continue;
            acc = acc + scale(px[i] * py[j] * pz[d_ - i - j], ff_embed_to(cv, s));
        }
    return acc;
}

BinForm HomForm::restricted(const ProjPoint& p, const ProjPoint& r) const {
    // F(v p + u r): coefficient of u^t v^(d-t)
    const UniPoly affine = restricted_affine(p, r);
    // F(p + u r) has coefficient of u^t equal to the (t, d-t) binary coefficient
    return BinForm::homogenize(affine, d_);
}

BinForm HomForm::boundary(int var) const {
    // restriction to var = 0; remaining variables (lower index : higher index)
    std::vector<FieldElement> c(d_ + 1, FieldElement::zero(spec_));
    for (int i = 0; i <= d_; ++i)
        for (int j = 0; i + j <= d_; ++j) {
            const FieldElement& cv = c_[idx(i, j)];
            if (cv.is_zero()) continue;
            const int k = d_ - i - j;
            if (var == 0 && i == 0) c[j] = cv;          // form in (Y, Z): s=Y, u=Z
            if (var == 1 && j == 0) c[i] = cv;          // form in (X, Z)
            if (var == 2 && k == 0) c[i] = cv;          // form in (X, Y)
        }
    return BinForm(d_, std::move(c));
}

std::string HomForm::str() const {
    std::ostringstream os;
    bool first = true;
    // terms sorted by descending (i, j) exponents: X-major
    for (int i = d_; i >= 0; --i)
        for (int j = d_ - i; j >= 0; --j) {
            const FieldElement cv = coeff(i, j);
            if (cv.is_zero()) continue;
            if (!first) os << "+";
            first = false;
            const int k = d_ - i - j;
            const std::string cs = cv.str();
            const bool parens = cs.find('+') != std::string::npos;
            const bool unit = cv.is_one();
            bool wrote = false;
            if (!unit || (i == 0 && j == 0 && k == 0)) {
                os << (parens ? "(" + cs + ")" : cs);
                wrote = true;
            }
            auto var = [&](const char* name, int pow) {
                if (pow == 0) return;
                if (wrote) os << "*";
                os << name;
                if (pow > 1) os << "^" << pow;
                wrote = true;
            };
            var("X", i);
            var("Y", j);
            var("Z", k);
        }
    if (first) os << "0";
    return os.str();
}

}  // namespace gscope
