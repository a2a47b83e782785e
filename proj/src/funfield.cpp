#include "gscope/funfield.hpp"

#include <sstream>

namespace gscope {

FunFieldPoly ffp_from_bipoly(const BiPoly& b) {
    std::vector<RatFun> cs;
    cs.reserve(b.coeffs().size());
    for (const auto& c : b.coeffs()) cs.push_back(RatFun(c));
    return FunFieldPoly::from_coeffs(std::move(cs));
}

BiPoly ffp_clear_denominators(const FunFieldPoly& F) {
    if (F.zero()) return BiPoly();
    // lcm of the denominators
    const FieldSpec* s = nullptr;
    for (const auto& c : F.coeffs())
        if (!c.is_zero()) s = base_spec(c.num());
    UniPoly lcm(FieldElement::one(s));
    for (const auto& c : F.coeffs()) {
        if (c.is_zero() || c.den_is_one()) continue;
        const UniPoly d = c.den();
        lcm = exact_div(lcm * d, up_gcd(lcm, d));
    }
    std::vector<UniPoly> cs;
    cs.reserve(F.coeffs().size());
    for (const auto& c : F.coeffs()) {
        if (c.is_zero()) {
            cs.push_back(UniPoly());
        } else {
            cs.push_back(c.num() * exact_div(lcm, c.den()));
        }
    }
    return bp_primitive(BiPoly::from_coeffs(std::move(cs)));
}

FunFieldPoly ffp_monic(const FunFieldPoly& F) {
    if (F.zero()) return F;
    const RatFun inv = F.lead().inverse();
    std::vector<RatFun> cs = F.coeffs();
    for (auto& c : cs) c = c * inv;
    return FunFieldPoly::from_coeffs(std::move(cs));
}

void ffp_divmod(const FunFieldPoly& f, const FunFieldPoly& g, FunFieldPoly& q, FunFieldPoly& r) {
    if (g.zero()) throw std::invalid_argument("division by zero polynomial");
    q = FunFieldPoly();
    r = f;
    const int dg = g.degree();
    const RatFun lg_inv = g.lead().inverse();
    std::vector<RatFun> qc;
    if (f.degree() >= dg) qc.assign(f.degree() - dg + 1, RatFun());
    while (!r.zero() && r.degree() >= dg) {
        const RatFun c = r.lead() * lg_inv;
        const int k = r.degree() - dg;
        qc[k] = c;
        r = r - FunFieldPoly::monomial(c, k) * g;
    }
    q = FunFieldPoly::from_coeffs(std::move(qc));
}

FunFieldPoly ffp_gcd(const FunFieldPoly& a, const FunFieldPoly& b) {
    FunFieldPoly f = a, g = b;
    while (!g.zero()) {
        FunFieldPoly q, r;
        ffp_divmod(f, g, q, r);
        f = std::move(g);
        g = std::move(r);
    }
    return f.zero() ? f : ffp_monic(f);
}

Poly<RatFun> gcd_generic(const Poly<RatFun>& a, const Poly<RatFun>& b) { return ffp_gcd(a, b); }

std::vector<FFFactor> function_field_factor(const FunFieldPoly& F) {
    if (F.zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    std::vector<FFFactor> out;
    if (F.degree() == 0) return out;
    const BiPoly cleared = ffp_clear_denominators(F);
    for (const auto& fac : factor_bivariate(cleared)) {
        if (fac.factor.degree() < 1) continue;  // content in x: a unit here
        out.push_back({ffp_monic(ffp_from_bipoly(fac.factor)), fac.multiplicity});
    }
    return out;
}

std::optional<RatFun> ffp_bounded_root(const FunFieldPoly& F, int height_bound) {
    if (F.zero()) throw std::invalid_argument("root search on zero polynomial");
    const BiPoly cleared = ffp_clear_denominators(F);
    const int n = cleared.degree();
    if (n < 1) return std::nullopt;
    const FieldSpec* s = base_spec(cleared);
    const UniPoly lead = cleared.lead();
    UniPoly trail = cleared.coeff(0);
    if (trail.zero()) return RatFun();  // Y = 0 is a root
    // monic divisors of a polynomial, degree-capped
    auto monic_divisors = [&](const UniPoly& f) {
        std::vector<UniPoly> divs{UniPoly(FieldElement::one(s))};
        for (const auto& fac : factor_univariate(f)) {
            std::vector<UniPoly> next;
            for (const auto& d : divs) {
                UniPoly acc = d;
                next.push_back(acc);
                for (int i = 0; i < fac.multiplicity; ++i) {
                    acc = acc * fac.factor;
                    if (acc.degree() <= height_bound) next.push_back(acc);
                }
            }
            divs = std::move(next);
        }
        return divs;
    };
    const auto nums = monic_divisors(trail);
    const auto dens = monic_divisors(lead);
    // nonzero constants of the field
    std::vector<FieldElement> constants;
    for (std::uint64_t enc = 1; enc < s->order(); ++enc) {
        std::vector<std::uint32_t> c(s->e);
        std::uint64_t v = enc;
        for (std::uint32_t i = 0; i < s->e; ++i) {
            c[i] = static_cast<std::uint32_t>(v % s->p);
            v /= s->p;
        }
        constants.emplace_back(s, std::move(c));
    }
    for (const auto& a : nums) {
        for (const auto& b : dens) {
            if (up_gcd(a, b).degree() > 0) continue;
            for (const auto& c : constants) {
                const RatFun cand(scale(a, c), b);
                // evaluate sum coeff_k * a^k * b^(n-k) after clearing
                UniPoly acc;
                UniPoly apow(FieldElement::one(s));
                std::vector<UniPoly> apows;
                for (int k = 0; k <= n; ++k) {
                    apows.push_back(apow);
                    apow = apow * scale(a, c);
                }
                UniPoly bpow(FieldElement::one(s));
                for (int k = n; k >= 0; --k) {
                    acc = acc + cleared.coeff(k) * apows[k] * bpow;
                    bpow = bpow * b;
                }
                if (acc.zero()) return cand;
            }
        }
    }
    return std::nullopt;
}

std::string ffp_str(const FunFieldPoly& F, const std::string& xvar, const std::string& yvar) {
    if (F.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = F.degree(); j >= 0; --j) {
        const RatFun c = F.coeff(j);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(xvar) << ")";
        if (j >= 1) {
            os << "*" << yvar;
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

}  // namespace gscope
