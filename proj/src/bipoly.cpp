#include "gscope/bipoly.hpp"

#include <sstream>

namespace gscope {

UniPoly bp_content_x(const BiPoly& f) {
    UniPoly c;
    for (const auto& coeff : f.coeffs()) c = up_gcd(c, coeff);
    return c;
}

BiPoly bp_primitive(const BiPoly& f) {
    if (f.zero()) return f;
    const UniPoly c = bp_content_x(f);
    BiPoly g = exact_div(f, BiPoly(c));
    return scale(g, lead_scalar(g).inverse());
}

BiPoly bp_swap_xy(const BiPoly& f) {
    std::vector<std::vector<FieldElement>> grid;
    for (int j = 0; j <= f.degree(); ++j) {
        const UniPoly& c = f.coeff(j);
        for (int i = 0; i <= c.degree(); ++i) {
            if (static_cast<std::size_t>(i) >= grid.size()) grid.resize(i + 1);
            auto& row = grid[i];
            if (static_cast<std::size_t>(j) >= row.size()) row.resize(j + 1, FieldElement());
            row[j] = c.coeff(i);
        }
    }
    std::vector<UniPoly> out;
    out.reserve(grid.size());
    for (auto& row : grid) out.push_back(UniPoly::from_coeffs(std::move(row)));
    return BiPoly::from_coeffs(std::move(out));
}

BiPoly bp_deriv_y(const BiPoly& f) {
    const FieldSpec* s = base_spec(f);
    if (!s) return BiPoly();
    return f.derivative(s->p);
}

BiPoly bp_deriv_x(const BiPoly& f) {
    const FieldSpec* s = base_spec(f);
    if (!s) return BiPoly();
    std::vector<UniPoly> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.derivative(s->p));
    return BiPoly::from_coeffs(std::move(out));
}

int bp_degree_x(const BiPoly& f) {
    int d = -1;
    for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
    return d;
}

int bp_total_degree(const BiPoly& f) {
    int d = -1;
    for (int j = 0; j <= f.degree(); ++j) {
        const UniPoly& c = f.coeff(j);
        if (!c.zero()) d = std::max(d, j + c.degree());
    }
    return d;
}

UniPoly bp_eval_x(const BiPoly& f, const FieldElement& a) {
    std::vector<FieldElement> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.eval(a));
    return UniPoly::from_coeffs(std::move(out));
}

UniPoly bp_eval_y(const BiPoly& f, const FieldElement& a) {
    UniPoly acc;
    const UniPoly ya = UniPoly(a);
    for (int j = f.degree(); j >= 0; --j) acc = acc * ya + f.coeff(j);
    return acc;
}

FieldElement bp_eval(const BiPoly& f, const FieldElement& x, const FieldElement& y) {
    return bp_eval_x(f, x).eval(y);
}

BiPoly bp_embed(const BiPoly& f, const FieldSpec* target) {
    std::vector<UniPoly> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(up_embed(c, target));
    return BiPoly::from_coeffs(std::move(out));
}

BiPoly bp_shift_x(const BiPoly& f, const FieldElement& a) {
    if (a.is_zero()) return f;
    std::vector<UniPoly> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.taylor_shift(a));
    return BiPoly::from_coeffs(std::move(out));
}

BiPoly bp_trunc_x(const BiPoly& f, int k) {
    std::vector<UniPoly> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.truncated(static_cast<std::size_t>(k)));
    return BiPoly::from_coeffs(std::move(out));
}

BiPoly bp_coeff_pow_p(const BiPoly& f, std::uint32_t k) {
    std::vector<UniPoly> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        std::vector<FieldElement> cc;
        cc.reserve(c.coeffs().size());
        for (const auto& v : c.coeffs()) cc.push_back(v.pow_p(k));
        out.push_back(UniPoly::from_coeffs(std::move(cc)));
    }
    return BiPoly::from_coeffs(std::move(out));
}

BiPoly bp_pth_root(const BiPoly& f) {
    const FieldSpec* s = base_spec(f);
    const std::uint32_t p = s->p;
    std::vector<UniPoly> out(f.degree() / static_cast<int>(p) + 1, UniPoly());
    for (int j = 0; j <= f.degree(); ++j) {
        const UniPoly& c = f.coeff(j);
        if (c.zero()) continue;
        if (j % static_cast<int>(p) != 0)
            throw InternalConsistencyError("bp_pth_root: y-exponent not divisible by p");
        std::vector<FieldElement> cc(c.degree() / static_cast<int>(p) + 1, FieldElement());
        for (int i = 0; i <= c.degree(); ++i) {
            if (c.coeff(i).is_zero()) continue;
            if (i % static_cast<int>(p) != 0)
                throw InternalConsistencyError("bp_pth_root: x-exponent not divisible by p");
            cc[i / static_cast<int>(p)] = c.coeff(i).pth_root();
        }
        out[j / static_cast<int>(p)] = UniPoly::from_coeffs(std::move(cc));
    }
    return BiPoly::from_coeffs(std::move(out));
}

void bp_divmod_monic(const BiPoly& f, const BiPoly& g, BiPoly& q, BiPoly& r) {
    if (g.zero() || !(g.lead().degree() == 0 && g.lead().coeff(0).is_one()))
        throw std::invalid_argument("bp_divmod_monic requires a monic-in-y divisor");
    q = BiPoly();
    r = f;
    const int dg = g.degree();
    std::vector<UniPoly> qc;
    if (f.degree() >= dg) qc.assign(f.degree() - dg + 1, UniPoly());
    while (!r.zero() && r.degree() >= dg) {
        const UniPoly c = r.lead();
        const int k = r.degree() - dg;
        qc[k] = c;
        r = r - BiPoly::monomial(c, k) * g;
    }
    q = BiPoly::from_coeffs(std::move(qc));
}

std::string bp_str(const BiPoly& f, const std::string& xvar, const std::string& yvar) {
    if (f.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = f.degree(); j >= 0; --j) {
        const UniPoly& c = f.coeff(j);
        if (c.zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << poly_str(c, xvar) << ")";
        if (j >= 1) {
            os << "*" << yvar;
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

bool bp_less(const BiPoly& a, const BiPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (bp_degree_x(a) != bp_degree_x(b)) return bp_degree_x(a) < bp_degree_x(b);
    for (int j = a.degree(); j >= 0; --j) {
        const UniPoly ca = a.coeff(j), cb = b.coeff(j);
        if (ca.degree() != cb.degree()) return ca.degree() < cb.degree();
        for (int i = ca.degree(); i >= 0; --i) {
            const FieldElement va = ca.coeff(i), vb = cb.coeff(i);
            if (!(va == vb)) return va < vb;
        }
    }
    return false;
}

}  // namespace gscope
