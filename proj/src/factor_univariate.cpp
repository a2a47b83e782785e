#include "gscope/factor_univariate.hpp"

#include <algorithm>
#include <map>

namespace gscope {

namespace {

// f with every exponent divided by p, coefficients taken to their p-th roots.
// Valid exactly when f' == 0, i.e. all exponents are multiples of p.
UniPoly pth_root_poly(const UniPoly& f) {
    const FieldSpec* s = base_spec(f);
    const std::uint32_t p = s->p;
    std::vector<FieldElement> out(f.degree() / p + 1, FieldElement());
    for (int i = 0; i <= f.degree(); ++i) {
        const FieldElement c = f.coeff(i);
        if (c.is_zero()) continue;
        if (i % p != 0) throw InternalConsistencyError("pth_root_poly: exponent not divisible by p");
        out[i / p] = c.pth_root();
    }
    return UniPoly::from_coeffs(std::move(out));
}

// Squarefree decomposition of a monic f: pairs (g, k), g monic squarefree,
// f = prod g^k, the g pairwise coprime.
void squarefree_decompose(const UniPoly& f, int outer_mult,
                          std::vector<std::pair<UniPoly, int>>& out) {
    const FieldSpec* s = base_spec(f);
    const std::uint32_t p = s->p;
    if (f.degree() == 0) return;
    UniPoly df = f.derivative(p);
    if (df.zero()) {
        squarefree_decompose(pth_root_poly(f), outer_mult * p, out);
        return;
    }
    UniPoly c = up_gcd(f, df);
    UniPoly w = exact_div(f, c);
    w = up_monic(w);
    int i = 1;
    while (w.degree() > 0) {
        UniPoly y = up_gcd(w, c);
        UniPoly z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(up_monic(z), i * outer_mult);
        w = std::move(y);
        c = up_monic(exact_div(c, w));
        ++i;
    }
    // what is left of c is the wild part: every multiplicity divisible by p,
    // so its derivative vanishes and the recursion takes the p-th root branch
    if (c.degree() > 0) squarefree_decompose(c, outer_mult, out);
}

// Distinct-degree split of a monic squarefree f: pairs (product, degree).
std::vector<std::pair<UniPoly, int>> distinct_degree(const UniPoly& f) {
    const FieldSpec* s = base_spec(f);
    const std::uint64_t q = s->order();
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly rest = f;
    UniPoly x = UniPoly::monomial(FieldElement::one(s), 1);
    UniPoly h = up_mod(x, rest);
    int d = 0;
    while (rest.degree() >= 2 * (d + 1)) {
        ++d;
        h = up_powmod(h, q, rest);
        UniPoly g = up_gcd(h - x, rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = up_monic(exact_div(rest, g));
            h = up_mod(h, rest);
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus); f monic squarefree, all
// irreducible factors of degree d.
void equal_degree(const UniPoly& f, int d, Rng& rng, std::vector<UniPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const FieldSpec* s = base_spec(f);
    const std::uint64_t q = s->order();
    const std::uint32_t p = s->p;
    UniPoly splitter;
    while (true) {
        UniPoly r = up_random_below(s, f.degree(), rng);
        if (r.degree() < 1) continue;
        UniPoly g0 = up_gcd(r, f);
        if (g0.degree() > 0 && g0.degree() < f.degree()) {
            splitter = g0;
            break;
        }
        UniPoly t;
        if (p != 2) {
            // r^((q^d-1)/2) via the norm chain r^(1+q+...+q^(d-1)) then ^((q-1)/2)
            UniPoly norm = up_mod(r, f);
            UniPoly acc = norm;
            for (int j = 1; j < d; ++j) {
                acc = up_powmod(acc, q, f);
                acc = up_mod(acc * norm, f);
            }
            t = up_powmod(acc, (q - 1) / 2, f);
            t = t - UniPoly(FieldElement::one(s));
        } else {
            // trace map over GF(2)
            const std::uint32_t bits = s->e * static_cast<std::uint32_t>(d);
            UniPoly acc = up_mod(r, f);
            UniPoly sum = acc;
            for (std::uint32_t j = 1; j < bits; ++j) {
                acc = up_mod(acc * acc, f);
                sum = sum + acc;
            }
            t = up_mod(sum, f);
        }
        UniPoly g = up_gcd(t, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
    }
    equal_degree(splitter, d, rng, out);
    equal_degree(up_monic(exact_div(f, splitter)), d, rng, out);
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const FieldElement ca = a.coeff(i), cb = b.coeff(i);
        if (!(ca == cb)) return ca < cb;
    }
    return false;
}

}  // namespace

std::vector<UniFactor> factor_univariate(const UniPoly& f, std::uint64_t seed) {
    if (f.zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    std::vector<UniFactor> result;
    if (f.degree() == 0) return result;
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    const UniPoly fm = up_monic(f);
    std::vector<std::pair<UniPoly, int>> sqf;
    squarefree_decompose(fm, 1, sqf);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<UniPoly> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& g : irr) result.push_back({up_monic(g), mult});
        }
    }
    std::sort(result.begin(), result.end(), [](const UniFactor& a, const UniFactor& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
        return poly_less(a.factor, b.factor);
    });
    return result;
}

bool up_is_irreducible(const UniPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    auto fs = factor_univariate(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

std::vector<FieldElement> up_roots(const UniPoly& f) {
    std::vector<FieldElement> roots;
    for (const auto& fac : factor_univariate(f)) {
        if (fac.factor.degree() != 1) continue;
        FieldElement r = -fac.factor.coeff(0);
        if (!r.spec()) r = FieldElement::zero(base_spec(fac.factor));
        roots.push_back(std::move(r));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<FieldElement> up_roots_in_extension(const UniPoly& f, std::uint32_t m) {
    const FieldSpec* s = base_spec(f);
    std::vector<FieldElement> out;
    // Factor once over the base; each irreducible factor of degree k has its
    // roots in GF(p^(e*k)), so only factor degrees dividing some m' <= m matter.
    for (const auto& fac : factor_univariate(f)) {
        const std::uint32_t k = static_cast<std::uint32_t>(fac.factor.degree());
        if (k > m) continue;
        const FieldSpec* target = FieldTable::get(s->p, s->e * k);
        UniPoly lifted = up_embed(fac.factor, target);
        for (const auto& r : up_roots(lifted)) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<FieldElement, int>> up_all_roots(const UniPoly& f) {
    const FieldSpec* s = base_spec(f);
    std::vector<std::pair<FieldElement, int>> out;
    for (const auto& fac : factor_univariate(f)) {
        const std::uint32_t k = static_cast<std::uint32_t>(fac.factor.degree());
        const FieldSpec* target = FieldTable::get(s->p, s->e * k);
        UniPoly lifted = up_embed(fac.factor, target);
        for (const auto& r : up_roots(lifted)) out.emplace_back(r, fac.multiplicity);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace gscope
