#include "gscope/unipoly.hpp"

#include <sstream>

#include "gscope/rng.hpp"

namespace gscope {

UniPoly up_make(const FieldSpec* spec, std::initializer_list<std::int64_t> coeffs) {
    std::vector<FieldElement> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) v.push_back(FieldElement::scalar(spec, c));
    return UniPoly::from_coeffs(std::move(v));
}

void up_divmod(const UniPoly& f, const UniPoly& g, UniPoly& q, UniPoly& r) {
    if (g.zero()) throw std::invalid_argument("division by zero polynomial");
    q = UniPoly();
    r = f;
    const int dg = g.degree();
    const FieldElement lg_inv = g.lead().inverse();
    std::vector<FieldElement> qc;
    if (f.degree() >= dg) qc.assign(f.degree() - dg + 1, FieldElement());
    while (!r.zero() && r.degree() >= dg) {
        const FieldElement c = r.lead() * lg_inv;
        const int k = r.degree() - dg;
        qc[k] = c;
        r = r - UniPoly::monomial(c, k) * g;
    }
    q = UniPoly::from_coeffs(std::move(qc));
}

UniPoly up_mod(const UniPoly& f, const UniPoly& g) {
    UniPoly q, r;
    up_divmod(f, g, q, r);
    return r;
}

UniPoly up_monic(const UniPoly& f) {
    if (f.zero() || f.lead().is_one()) return f;
    return scale(f, f.lead().inverse());
}

UniPoly up_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.zero()) {
        UniPoly r = up_mod(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return up_monic(f);
}

UniPoly up_powmod(const UniPoly& base, std::uint64_t n, const UniPoly& mod) {
    UniPoly result(unit_of(mod.lead()));
    UniPoly b = up_mod(base, mod);
    while (n) {
        if (n & 1) result = up_mod(result * b, mod);
        b = up_mod(b * b, mod);
        n >>= 1;
    }
    return result;
}

UniPoly up_ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0, s1, t0, t1;
    const FieldSpec* spec = base_spec(a) ? base_spec(a) : base_spec(b);
    if (!spec) throw std::invalid_argument("ext_gcd of two zero polynomials");
    s0 = UniPoly(FieldElement::one(spec));
    t1 = UniPoly(FieldElement::one(spec));
    while (!r1.zero()) {
        UniPoly q, r;
        up_divmod(r0, r1, q, r);
        UniPoly ns = s0 - q * s1;
        UniPoly nt = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r0.zero()) throw std::invalid_argument("ext_gcd of two zero polynomials");
    const FieldElement inv = r0.lead().inverse();
    s = scale(s0, inv);
    t = scale(t0, inv);
    return scale(r0, inv);
}

std::optional<int> local_order(const UniPoly& f, const FieldElement& a) {
    if (f.zero()) return std::nullopt;
    const FieldSpec* s = base_spec(f);
    FieldElement aa = a;
    if (aa.spec() && aa.spec() != s) {
        const FieldSpec* c = common_field(aa.spec(), s);
        if (c != s) {
            // widen f rather than a
            return local_order(up_embed(f, c), ff_embed_to(aa, c));
        }
        aa = ff_embed_to(aa, c);
    }
    if (!aa.spec()) aa = FieldElement::zero(s);
    UniPoly lin = UniPoly::from_coeffs({-aa, FieldElement::one(s)});
    int k = 0;
    UniPoly g = f;
    while (true) {
        if (!g.eval(aa).is_zero()) return k;
        UniPoly q, r;
        up_divmod(g, lin, q, r);
        if (!r.zero()) throw InternalConsistencyError("root division left a remainder");
        g = std::move(q);
        ++k;
        if (g.zero()) throw InternalConsistencyError("local_order exceeded degree");
    }
}

UniPoly up_embed(const UniPoly& f, const FieldSpec* target) {
    std::vector<FieldElement> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs())
        v.push_back(c.spec() ? ff_embed_to(c, target) : FieldElement());
    return UniPoly::from_coeffs(std::move(v));
}

namespace {
FieldElement random_element(const FieldSpec* spec, Rng& rng) {
    std::vector<std::uint32_t> c(spec->e);
    for (auto& v : c) v = static_cast<std::uint32_t>(rng.below(spec->p));
    return FieldElement(spec, std::move(c));
}
}  // namespace

UniPoly up_random_monic(const FieldSpec* spec, int deg, Rng& rng) {
    std::vector<FieldElement> v(deg + 1);
    for (int i = 0; i < deg; ++i) v[i] = random_element(spec, rng);
    v[deg] = FieldElement::one(spec);
    return UniPoly::from_coeffs(std::move(v));
}

UniPoly up_random_below(const FieldSpec* spec, int deg_bound, Rng& rng) {
    std::vector<FieldElement> v(deg_bound);
    for (auto& c : v) c = random_element(spec, rng);
    return UniPoly::from_coeffs(std::move(v));
}

std::string poly_str(const UniPoly& f, const std::string& var) {
    if (f.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const FieldElement c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string cs = c.str();
        const bool needs_parens = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else {
            if (!c.is_one()) os << (needs_parens ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly<FieldElement> gcd_generic(const Poly<FieldElement>& a, const Poly<FieldElement>& b) {
    return up_gcd(a, b);
}

}  // namespace gscope
