#include "gscope/factor_bivariate.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace gscope {

namespace {

// ---------------------------------------------------------------------------
// Hensel lifting of a factorization of F(0, y) to a factorization mod x^K.
// F is monic in y. The factor tree keeps Bezout cofactors per internal node.
// ---------------------------------------------------------------------------

struct HenselNode {
    BiPoly f;  // product of the leaves below, known mod x^precision
    std::unique_ptr<HenselNode> left, right;
    BiPoly s, t;  // s*left.f + t*right.f == 1 mod x^precision (internal nodes)
    bool leaf() const { return !left; }
};

std::unique_ptr<HenselNode> build_tree(const std::vector<UniPoly>& locals, std::size_t lo,
                                       std::size_t hi) {
    auto node = std::make_unique<HenselNode>();
    if (hi - lo == 1) {
        // a univariate polynomial in y becomes a BiPoly with constant-in-x coeffs
        std::vector<UniPoly> cs;
        for (const auto& c : locals[lo].coeffs()) cs.push_back(UniPoly(c));
        node->f = BiPoly::from_coeffs(std::move(cs));
        return node;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    node->left = build_tree(locals, lo, mid);
    node->right = build_tree(locals, mid, hi);
    node->f = node->left->f * node->right->f;
    return node;
}

UniPoly bp_to_unipoly_at0(const BiPoly& f) {
    return bp_eval_x(f, FieldElement::zero(base_spec(f)));
}

void init_bezout(HenselNode* node) {
    if (node->leaf()) return;
    UniPoly l0 = bp_to_unipoly_at0(node->left->f);
    UniPoly r0 = bp_to_unipoly_at0(node->right->f);
    UniPoly s, t;
    UniPoly g = up_ext_gcd(l0, r0, s, t);
    if (g.degree() != 0) throw InternalConsistencyError("hensel: local factors not coprime");
    const FieldElement inv = g.coeff(0).inverse();
    s = scale(s, inv);
    t = scale(t, inv);
    std::vector<UniPoly> sc, tc;
    for (const auto& c : s.coeffs()) sc.push_back(UniPoly(c));
    for (const auto& c : t.coeffs()) tc.push_back(UniPoly(c));
    node->s = BiPoly::from_coeffs(std::move(sc));
    node->t = BiPoly::from_coeffs(std::move(tc));
    init_bezout(node->left.get());
    init_bezout(node->right.get());
}

// One quadratic step: from precision k to 2k, for the pair below `node`.
// node->f must already be correct mod x^(2k).
void hensel_step(HenselNode* node, int two_k) {
    BiPoly& g = node->left->f;
    BiPoly& h = node->right->f;
    BiPoly& s = node->s;
    BiPoly& t = node->t;
    const BiPoly e = bp_trunc_x(node->f - g * h, two_k);
    BiPoly q, r;
    bp_divmod_monic(bp_trunc_x(s * e, two_k), h, q, r);
    q = bp_trunc_x(q, two_k);
    r = bp_trunc_x(r, two_k);
    const BiPoly g1 = bp_trunc_x(g + t * e + q * g, two_k);
    const BiPoly h1 = bp_trunc_x(h + r, two_k);
    const FieldSpec* spec = base_spec(node->f);
    const BiPoly one(UniPoly(FieldElement::one(spec)));
    const BiPoly b = bp_trunc_x(s * g1 + t * h1 - one, two_k);
    BiPoly c, d;
    bp_divmod_monic(bp_trunc_x(s * b, two_k), h1, c, d);
    c = bp_trunc_x(c, two_k);
    d = bp_trunc_x(d, two_k);
    s = bp_trunc_x(s - d, two_k);
    t = bp_trunc_x(t - t * b - c * g1, two_k);
    g = g1;
    h = h1;
}

void lift_subtree(HenselNode* node, int two_k) {
    if (node->leaf()) return;
    hensel_step(node, two_k);
    lift_subtree(node->left.get(), two_k);
    lift_subtree(node->right.get(), two_k);
}

void collect_leaves(HenselNode* node, std::vector<BiPoly>& out) {
    if (node->leaf()) {
        out.push_back(node->f);
        return;
    }
    collect_leaves(node->left.get(), out);
    collect_leaves(node->right.get(), out);
}

// Lift the distinct monic irreducible factors of F(0,y) to mod x^K.
// F monic in y, F(0,y) squarefree.
std::vector<BiPoly> hensel_lift(const BiPoly& F, const std::vector<UniPoly>& locals, int K) {
    if (locals.size() == 1) return {F};
    auto root = build_tree(locals, 0, locals.size());
    root->f = bp_trunc_x(F, 1);
    init_bezout(root.get());
    int k = 1;
    while (k < K) {
        const int two_k = std::min(2 * k, K);
        root->f = bp_trunc_x(F, two_k);
        lift_subtree(root.get(), two_k);
        k = two_k;
    }
    std::vector<BiPoly> out;
    collect_leaves(root.get(), out);
    return out;
}

// ---------------------------------------------------------------------------
// Factor recombination
// ---------------------------------------------------------------------------

// F monic in y over its field; lifted locals mod x^K with K > deg_x(F).
// Returns the monic irreducible factors of F.
std::vector<BiPoly> recombine(const BiPoly& F, std::vector<BiPoly> locals, int K) {
    std::vector<BiPoly> out;
    BiPoly remaining = F;
    std::size_t sz = 1;
    while (2 * sz <= locals.size()) {
        bool found = false;
        // subsets of the current locals of size sz, lexicographic order
        std::vector<std::size_t> idx(sz);
        for (std::size_t i = 0; i < sz; ++i) idx[i] = i;
        while (true) {
            BiPoly cand(UniPoly(FieldElement::one(base_spec(F))));
            for (auto i : idx) cand = bp_trunc_x(cand * locals[i], K);
            auto quot = try_exact_div(remaining, cand);
            if (quot.has_value()) {
                out.push_back(cand);
                remaining = *quot;
                std::vector<BiPoly> rest;
                for (std::size_t i = 0; i < locals.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        rest.push_back(locals[i]);
                locals = std::move(rest);
                found = true;
                break;
            }
            // next subset
            int pos = static_cast<int>(sz) - 1;
            while (pos >= 0 && idx[pos] == locals.size() - sz + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t i = pos + 1; i < sz; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++sz;
    }
    if (remaining.degree() > 0) out.push_back(remaining);
    return out;
}

// ---------------------------------------------------------------------------
// The driver for a squarefree, y-separable, primitive polynomial.
// ---------------------------------------------------------------------------

FieldElement element_by_encoding(const FieldSpec* s, std::uint64_t enc) {
    std::vector<std::uint32_t> c(s->e);
    for (std::uint32_t i = 0; i < s->e; ++i) {
        c[i] = static_cast<std::uint32_t>(enc % s->p);
        enc /= s->p;
    }
    return FieldElement(s, std::move(c));
}

// distinct irreducible factors over the base field of f: squarefree,
// gcd(f, f_y) == 1, primitive in x, deg_y >= 1
std::vector<BiPoly> factor_separable(const BiPoly& f, std::uint64_t seed) {
    const FieldSpec* base = base_spec(f);
    if (f.degree() == 1) return {bp_primitive(f)};
    const int n = f.degree();

    // monic model: multiply by lc^(n-1) and substitute y -> y/lc
    const UniPoly lc = f.lead();
    BiPoly monic;
    {
        std::vector<UniPoly> cs(n + 1);
        for (int k = 0; k <= n; ++k) {
            UniPoly c = f.coeff(k);
            if (c.zero()) continue;
            // multiply by lc^(n-1-k)
            for (int j = 0; j < n - 1 - k; ++j) c = c * lc;
            cs[k] = std::move(c);
        }
        cs[n] = UniPoly(FieldElement::one(base));
        monic = BiPoly::from_coeffs(std::move(cs));
    }

    // find an evaluation point x0 with monic(x0, y) squarefree
    const FieldSpec* ext = base;
    FieldElement x0;
    bool found = false;
    for (std::uint32_t s = 1; !found && s <= 12; ++s) {
        ext = FieldTable::get(base->p, base->e * s);
        const std::uint64_t count = ext->order();
        BiPoly lifted = (s == 1) ? monic : bp_embed(monic, ext);
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            const FieldElement cand = element_by_encoding(ext, enc);
            UniPoly u = bp_eval_x(lifted, cand);
            if (u.degree() != n) continue;  // cannot happen: monic
            UniPoly du = u.derivative(ext->p);
            if (du.zero()) continue;
            if (up_gcd(u, du).degree() == 0) {
                x0 = cand;
                found = true;
                break;
            }
        }
    }
    if (!found) throw InternalConsistencyError("no squarefree evaluation point found");

    const BiPoly work0 = (ext == base) ? monic : bp_embed(monic, ext);
    const BiPoly shifted = bp_shift_x(work0, x0);
    const int K = bp_degree_x(shifted) + 1;

    // local factorization at x = 0
    UniPoly u0 = bp_to_unipoly_at0(shifted);
    std::vector<UniPoly> locals;
    for (const auto& fac : factor_univariate(u0, seed)) locals.push_back(fac.factor);
    std::sort(locals.begin(), locals.end(), [](const UniPoly& a, const UniPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (!(a.coeff(i) == b.coeff(i))) return a.coeff(i) < b.coeff(i);
        return false;
    });

    std::vector<BiPoly> lifted = hensel_lift(shifted, locals, K);
    std::vector<BiPoly> monic_factors = recombine(shifted, std::move(lifted), K);

    // shift back
    for (auto& g : monic_factors) g = bp_shift_x(g, -x0);

    // descend to the base field via Frobenius orbits if we worked in an extension
    std::vector<BiPoly> over_base;
    if (ext != base) {
        std::vector<bool> used(monic_factors.size(), false);
        for (std::size_t i = 0; i < monic_factors.size(); ++i) {
            if (used[i]) continue;
            BiPoly orbit_product = monic_factors[i];
            used[i] = true;
            BiPoly conj = bp_coeff_pow_p(monic_factors[i], base->e);
            while (!(conj == monic_factors[i])) {
                bool matched = false;
                for (std::size_t j = 0; j < monic_factors.size(); ++j) {
                    if (used[j]) continue;
                    if (monic_factors[j] == conj) {
                        used[j] = true;
                        orbit_product = orbit_product * conj;
                        matched = true;
                        break;
                    }
                }
                if (!matched)
                    throw InternalConsistencyError("frobenius orbit left the factor set");
                conj = bp_coeff_pow_p(conj, base->e);
            }
            // coefficients are now fixed by Frobenius^e: project down
            std::vector<UniPoly> cs;
            for (const auto& c : orbit_product.coeffs()) {
                std::vector<FieldElement> cc;
                for (const auto& v : c.coeffs()) {
                    auto proj = ff_project(v, base);
                    if (!proj) throw InternalConsistencyError("orbit product not rational");
                    cc.push_back(*proj);
                }
                cs.push_back(UniPoly::from_coeffs(std::move(cc)));
            }
            over_base.push_back(BiPoly::from_coeffs(std::move(cs)));
        }
    } else {
        over_base = std::move(monic_factors);
    }

    // undo the monic substitution: factor of f = primitive part of G(x, lc*y)
    std::vector<BiPoly> result;
    for (const auto& g : over_base) {
        std::vector<UniPoly> cs(g.degree() + 1);
        UniPoly pw(FieldElement::one(base));
        for (int k = 0; k <= g.degree(); ++k) {
            cs[k] = g.coeff(k) * pw;
            pw = pw * lc;
        }
        result.push_back(bp_primitive(BiPoly::from_coeffs(std::move(cs))));
    }
    return result;
}

// full list of (irreducible, multiplicity) for primitive f with deg_y >= 1
std::vector<BiFactor> factor_primitive(const BiPoly& f, std::uint64_t seed);

std::vector<BiFactor> factor_full(const BiPoly& f, std::uint64_t seed) {
    std::vector<BiFactor> result;
    const UniPoly cont = bp_content_x(f);
    if (cont.degree() > 0) {
        for (const auto& fac : factor_univariate(cont, seed ^ 0xc0117e47))
            result.push_back({BiPoly(fac.factor), fac.multiplicity});
    }
    BiPoly fp = bp_primitive(f);
    if (fp.degree() >= 1) {
        auto inner = factor_primitive(fp, seed);
        result.insert(result.end(), inner.begin(), inner.end());
    }
    return result;
}

std::vector<BiFactor> factor_primitive(const BiPoly& f, std::uint64_t seed) {
    const FieldSpec* base = base_spec(f);
    const BiPoly fy = bp_deriv_y(f);
    if (fy.zero()) {
        const BiPoly fx = bp_deriv_x(f);
        if (fx.zero()) {
            // p-th power
            std::vector<BiFactor> inner = factor_full(bp_pth_root(f), seed);
            for (auto& fac : inner) fac.multiplicity *= static_cast<int>(base->p);
            return inner;
        }
        // separable in x instead: factor the swapped polynomial
        std::vector<BiFactor> inner = factor_full(bp_swap_xy(f), seed);
        for (auto& fac : inner) fac.factor = bp_primitive(bp_swap_xy(fac.factor));
        return inner;
    }
    const BiPoly g = gcd_generic(f, fy);
    std::vector<BiFactor> result;
    BiPoly rem = f;
    if (g.degree() == 0 && bp_degree_x(g) <= 0) {
        for (const auto& h : factor_separable(f, seed)) result.push_back({h, 1});
        return result;
    }
    const BiPoly w = bp_primitive(exact_div(f, g));
    // w: the squarefree separable-in-y part; may be constant if every factor
    // is wild or y-inseparable, in which case g still shrinks the problem
    std::vector<BiPoly> hs;
    if (w.degree() >= 1) hs = factor_separable(w, seed);
    for (const auto& h : hs) {
        int m = 0;
        while (true) {
            auto q = try_exact_div(rem, h);
            if (!q) break;
            rem = *q;
            ++m;
        }
        if (m == 0) throw InternalConsistencyError("separable factor does not divide input");
        result.push_back({h, m});
    }
    rem = bp_primitive(rem);
    if (rem.degree() >= 1 || bp_degree_x(rem) >= 1) {
        auto tail = factor_full(rem, seed ^ 0x7a11);
        result.insert(result.end(), tail.begin(), tail.end());
    }
    return result;
}

}  // namespace

std::vector<BiFactor> factor_bivariate(const BiPoly& f, std::uint64_t seed) {
    if (f.zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    if (f.degree() == 0 && bp_degree_x(f) <= 0) return {};
    std::vector<BiFactor> result = factor_full(f, seed);
    for (auto& fac : result) {
        if (fac.factor.degree() >= 1)
            fac.factor = bp_primitive(fac.factor);
        else
            fac.factor = scale(fac.factor, lead_scalar(fac.factor).inverse());
    }
    std::sort(result.begin(), result.end(), [](const BiFactor& a, const BiFactor& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
        return bp_less(a.factor, b.factor);
    });
    return result;
}

bool bp_is_irreducible(const BiPoly& f) {
    if (f.zero()) return false;
    auto fs = factor_bivariate(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

bool bp_absolutely_irreducible(const BiPoly& f, std::string* witness) {
    if (f.zero()) return false;
    const FieldSpec* base = base_spec(f);
    const int d = bp_total_degree(f);
    auto check = [&](const FieldSpec* where, const BiPoly& lifted) {
        auto fs = factor_bivariate(lifted);
        if (fs.size() == 1 && fs[0].multiplicity == 1) return true;
        if (witness) {
            std::ostringstream os;
            os << "form factors over GF(" << where->p << "^" << where->e << ")";
            if (!fs.empty())
                os << ": " << bp_str(fs[0].factor, "x", "y") << " divides it";
            *witness = os.str();
        }
        return false;
    };
    if (!check(base, f)) return false;
    std::vector<int> primes;
    for (int l = 2; l <= d; ++l) {
        bool prime = true;
        for (int m = 2; m * m <= l; ++m)
            if (l % m == 0) prime = false;
        if (prime && d % l == 0) primes.push_back(l);
    }
    for (int l : primes) {
        const FieldSpec* ext = FieldTable::get(base->p, base->e * static_cast<std::uint32_t>(l));
        if (!check(ext, bp_embed(f, ext))) return false;
    }
    return true;
}

}  // namespace gscope
