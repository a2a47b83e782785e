#include "gscope/curve.hpp"

#include <algorithm>

#include "gscope/factor_bivariate.hpp"
#include "gscope/rng.hpp"

namespace gscope {

bool is_absolutely_irreducible(const HomForm& form, std::string* witness) {
    if (form.is_zero()) throw std::invalid_argument("zero form");
    if (form.degree() < 1) return false;
    if (form.degree() == 1) return true;
    if (form.boundary(2).is_zero()) {
        if (witness) *witness = "Z divides the form";
        return false;
    }
    return bp_absolutely_irreducible(form.dehomogenized(2), witness);
}

PlaneCurve::PlaneCurve(HomForm form) : form_(std::move(form)) {
    if (form_.degree() < 2) throw std::invalid_argument("curve degree must be >= 2");
    std::string witness;
    if (!is_absolutely_irreducible(form_, &witness))
        throw ReducibleCurveError("curve is not absolutely irreducible: " + witness);
    for (int v = 0; v < 3; ++v) partials_[v] = form_.partial(v);
    affine_ = form_.dehomogenized(2);
}

bool on_curve(const PlaneCurve& c, const ProjPoint& p) { return c.form().eval(p).is_zero(); }

bool smooth_at(const PlaneCurve& c, const ProjPoint& p) {
    if (!on_curve(c, p)) return false;
    for (int v = 0; v < 3; ++v)
        if (!c.partial(v).eval(p).is_zero()) return true;
    return false;
}

int multiplicity_at(const PlaneCurve& c, const ProjPoint& p) {
    if (!on_curve(c, p)) return 0;
    if (smooth_at(c, p)) return 1;
    const FieldSpec* s = common_field(c.spec(), p.spec());
    const Mat3 m = basis_to_point(p.embedded(s));
    const HomForm moved = c.form().embedded(s).substituted(m);
    const BiPoly g = moved.dehomogenized(2);
    int lowest = moved.degree() + 1;
    for (int j = 0; j <= g.degree(); ++j) {
        const UniPoly& cj = g.coeff(j);
        for (int i = 0; i <= cj.degree(); ++i)
            if (!cj.coeff(i).is_zero()) lowest = std::min(lowest, i + j);
    }
    if (lowest > moved.degree())
        throw InternalConsistencyError("vanishing dehomogenization of a nonzero form");
    return lowest;
}

TangentCone tangent_cone(const PlaneCurve& c, const ProjPoint& p) {
    if (!on_curve(c, p)) throw std::invalid_argument("tangent cone of a point off the curve");
    const FieldSpec* s = common_field(c.spec(), p.spec());
    const ProjPoint pe = p.embedded(s);
    const Mat3 m = basis_to_point(pe);
    const HomForm moved = c.form().embedded(s).substituted(m);
    const BiPoly g = moved.dehomogenized(2);
    int mult = moved.degree() + 1;
    for (int j = 0; j <= g.degree(); ++j) {
        const UniPoly& cj = g.coeff(j);
        for (int i = 0; i <= cj.degree(); ++i)
            if (!cj.coeff(i).is_zero()) mult = std::min(mult, i + j);
    }
    // lowest homogeneous component as a binary form in the chart coordinates
    std::vector<FieldElement> lowest(mult + 1, FieldElement::zero(s));
    for (int j = 0; j <= g.degree() && j <= mult; ++j) lowest[mult - j] = g.coeff(j).coeff(mult - j);
    const BinForm cone(mult, std::move(lowest));
    TangentCone out;
    out.multiplicity = mult;
    for (const auto& [root, k] : binform_roots(cone)) {
        // root (s0:u0) of the form in (x, y) gives the chart line u0*x - s0*y = 0
        const FieldSpec* rs = common_field(s, root.s.spec());
        const ProjLine chart_line = ProjLine::make(ff_embed_to(root.u, rs), -ff_embed_to(root.s, rs),
                                                   FieldElement::zero(rs));
        // transform back: the substitution matrix acts on lines contravariantly
        Mat3 me;
        {
            const Mat3 base = m;
            me = Mat3::identity(rs);
            for (int i = 0; i < 9; ++i) me.m[i] = ff_embed_to(base.m[i], rs);
        }
        out.lines.emplace_back(me.apply(chart_line), k);
    }
    std::sort(out.lines.begin(), out.lines.end(),
              [](const auto& a, const auto& b) { return line_less(a.first, b.first); });
    return out;
}

ProjLine tangent_line_smooth(const PlaneCurve& c, const ProjPoint& p) {
    if (!on_curve(c, p)) throw std::invalid_argument("tangent line of a point off the curve");
    const FieldElement gx = c.partial(0).eval(p);
    const FieldElement gy = c.partial(1).eval(p);
    const FieldElement gz = c.partial(2).eval(p);
    if (gx.is_zero() && gy.is_zero() && gz.is_zero())
        throw std::invalid_argument("tangent line undefined at a singular point");
    return ProjLine::make(gx, gy, gz);
}

namespace {

// second span point of l independent of p
ProjPoint second_point_on_line(const ProjLine& l, const ProjPoint& p) {
    auto [a, b] = l.span();
    if (!(a == p)) return a;
    return b;
}

}  // namespace

int intersection_multiplicity(const PlaneCurve& c, const ProjLine& l, const ProjPoint& p) {
    if (!l.contains(p)) return 0;
    const ProjPoint r = second_point_on_line(l, p);
    const UniPoly phi = c.form().restricted_affine(p, r);
    if (phi.zero()) throw std::invalid_argument("line is a component of the curve");
    for (int k = 0; k <= phi.degree(); ++k)
        if (!phi.coeff(k).is_zero()) return k;
    throw InternalConsistencyError("unreachable");
}

int intersection_multiplicity_resultant(const PlaneCurve& c, const ProjLine& l, const ProjPoint& p,
                                        std::uint64_t seed) {
    if (!l.contains(p)) return 0;
    // Move the configuration into the affine z-chart with a non-vertical line,
    // then read the multiplicity of x(P) in Res_y(curve, line).
    Rng rng(seed);
    const FieldSpec* s = common_field(c.spec(), p.spec());
    const FieldSpec* ls = common_field(s, l.spec());
    for (int attempt = 0; attempt < 64; ++attempt) {
        Mat3 m = Mat3::identity(ls);
        if (attempt > 0) {
            for (int i = 0; i < 9; ++i) {
                std::vector<std::uint32_t> cc(ls->e);
                for (auto& v : cc) v = static_cast<std::uint32_t>(rng.below(ls->p));
                m.m[i] = FieldElement(ls, std::move(cc));
            }
            if (m.det().is_zero()) continue;
        }
        const Mat3 minv = m.inverse();
        const ProjPoint pm = minv.apply(p.embedded(ls));
        const ProjLine lm = minv.apply(l.embedded(ls));
        if (pm.z.is_zero()) continue;       // point must be affine
        if (lm.b.is_zero()) continue;       // line must involve y
        const HomForm fm = c.form().embedded(ls).substituted(m);
        const BiPoly fa = fm.dehomogenized(2);
        if (fa.degree() < 1) continue;
        // the line as a y-polynomial: b*y + (a*x + c)
        const BiPoly lin = BiPoly::from_coeffs(
            {UniPoly::from_coeffs({lm.c, lm.a}), UniPoly(lm.b)});
        const UniPoly res = sylvester_resultant(fa, lin);
        if (res.zero()) continue;  // line inside the curve: impossible, re-randomize
        const FieldElement x0 = pm.x / pm.z;
        auto ord = local_order(res, x0);
        return *ord;
    }
    throw InternalConsistencyError("no usable coordinate change for the resultant oracle");
}

std::vector<CurveLinePoint> line_intersections(const PlaneCurve& c, const ProjLine& l) {
    const FieldSpec* s = common_field(c.spec(), l.spec());
    const ProjLine le = l.embedded(s);
    auto [p0, r0] = le.span();
    const BinForm b = c.form().embedded(s).restricted(p0, r0);
    if (b.is_zero()) throw std::invalid_argument("line is a component of the curve");
    std::vector<CurveLinePoint> out;
    for (const auto& [root, mult] : binform_roots(b)) {
        if (root.at_infinity()) {
            out.push_back({r0.embedded(common_field(s, root.s.spec())), mult});
        } else {
            const FieldSpec* rs = common_field(s, root.s.spec());
            const ProjPoint pp = p0.embedded(rs);
            const ProjPoint rr = r0.embedded(rs);
            const FieldElement u = ff_embed_to(root.s, rs);
            out.push_back(
                {ProjPoint::make(pp.x + u * rr.x, pp.y + u * rr.y, pp.z + u * rr.z), mult});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CurveLinePoint& a, const CurveLinePoint& b2) {
                  return point_less(a.point, b2.point);
              });
    int total = 0;
    for (const auto& e : out) total += e.multiplicity;
    if (total != c.degree())
        throw InternalConsistencyError("line intersection multiplicities do not sum to d");
    return out;
}

namespace {

FieldElement element_by_encoding(const FieldSpec* s, std::uint64_t enc) {
    std::vector<std::uint32_t> c(s->e);
    for (std::uint32_t i = 0; i < s->e; ++i) {
        c[i] = static_cast<std::uint32_t>(enc % s->p);
        enc /= s->p;
    }
    return FieldElement(s, std::move(c));
}

bool new_at_level(const ProjPoint& p, std::uint32_t e_base, std::uint32_t m) {
    const std::uint32_t lvl = p.minimal_level();
    const std::uint32_t g = std::gcd(e_base, lvl);
    return lvl / g == m;  // smallest m' with lvl | e*m'
}

}  // namespace

std::vector<ProjPoint> curve_points_at_level(const PlaneCurve& c, std::uint32_t m) {
    const FieldSpec* base = c.spec();
    const FieldSpec* field = FieldTable::get(base->p, base->e * m);
    const HomForm f = (field == base) ? c.form() : c.form().embedded(field);
    const BiPoly fa = f.dehomogenized(2);
    std::vector<ProjPoint> out;
    const FieldElement one = FieldElement::one(field);
    const FieldElement zero = FieldElement::zero(field);
    for (std::uint64_t enc = 0; enc < field->order(); ++enc) {
        const FieldElement x0 = element_by_encoding(field, enc);
        const UniPoly uy = bp_eval_x(fa, x0);
        if (uy.zero()) throw InternalConsistencyError("curve contains a vertical line");
        if (uy.degree() < 1) continue;
        for (const auto& y0 : up_roots(uy)) out.push_back(ProjPoint::make(x0, y0, one));
    }
    // the line z = 0
    const BinForm boundary = f.boundary(2);
    if (boundary.is_zero()) throw InternalConsistencyError("Z divides an irreducible form");
    const UniPoly bd = boundary.dehomogenize();
    if (boundary.order_at_infinity() > 0) out.push_back(ProjPoint::make(one, zero, zero));
    if (bd.degree() >= 1)
        for (const auto& x0 : up_roots(bd)) out.push_back(ProjPoint::make(x0, one, zero));
    std::vector<ProjPoint> fresh;
    for (auto& p : out)
        if (new_at_level(p, base->e, m)) fresh.push_back(std::move(p));
    std::sort(fresh.begin(), fresh.end(), point_less);
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    return fresh;
}

std::vector<ProjPoint> singular_points(const PlaneCurve& c, std::uint32_t ext_max) {
    std::vector<ProjPoint> out;
    for (std::uint32_t m = 1; m <= ext_max; ++m) {
        for (const auto& p : curve_points_at_level(c, m))
            if (!smooth_at(c, p)) out.push_back(p);
    }
    return out;
}

namespace {

// all common zeros of A(x,y) and B(x,y) over the closure; A, B coprime, B
// preferred to have y-degree >= 1
void collect_common_zeros(const BiPoly& A, const BiPoly& B, std::vector<std::pair<FieldElement, FieldElement>>& out) {
    const BiPoly* a = &A;
    const BiPoly* b = &B;
    if (a->degree() < 1) std::swap(a, b);
    if (a->degree() < 1) {
        // both y-free: finite zero set only if no common x-root; coprimality
        // makes the common zero set empty
        return;
    }
    if (b->degree() < 1) {
        // b depends only on x: its roots give candidate fibers of a
        const UniPoly bx = b->coeff(0);
        if (bx.degree() < 1) return;
        for (const auto& [x0, mult] : up_all_roots(bx)) {
            (void)mult;
            const FieldSpec* fs = x0.spec();
            const UniPoly ay = bp_eval_x(bp_embed(*a, fs), x0);
            if (ay.zero()) continue;  // excluded by coprimality
            for (const auto& [y0, m2] : up_all_roots(ay)) {
                (void)m2;
                const FieldSpec* cs = common_field(fs, y0.spec());
                out.emplace_back(ff_embed_to(x0, cs), ff_embed_to(y0, cs));
            }
        }
        return;
    }
    const UniPoly res = sylvester_resultant(*a, *b);
    if (res.zero()) throw InternalConsistencyError("resultant of coprime polynomials vanished");
    if (res.degree() < 1) return;
    for (const auto& [x0, mult] : up_all_roots(res)) {
        (void)mult;
        const FieldSpec* fs = x0.spec();
        const UniPoly ay = bp_eval_x(bp_embed(*a, fs), x0);
        const UniPoly by = bp_eval_x(bp_embed(*b, fs), x0);
        UniPoly g;
        if (ay.zero())
            g = by;
        else if (by.zero())
            g = ay;
        else
            g = up_gcd(ay, by);
        if (g.zero() || g.degree() < 1) continue;
        for (const auto& [y0, m2] : up_all_roots(g)) {
            (void)m2;
            const FieldSpec* cs = common_field(fs, y0.spec());
            out.emplace_back(ff_embed_to(x0, cs), ff_embed_to(y0, cs));
        }
    }
}

// candidate affine singular points from a pair of polynomials that both
// vanish on the singular locus; recurses through common factors
void candidates_from_pair(BiPoly A, BiPoly B, const BiPoly& curve,
                          std::vector<std::pair<FieldElement, FieldElement>>& out, int depth = 0) {
    if (depth > 8) throw InternalConsistencyError("singular locus elimination recursion overflow");
    if (A.zero() || B.zero()) return;
    const BiPoly g = gcd_generic(A, B);
    if (g.degree() >= 1 || bp_degree_x(g) >= 1) {
        // points on the common component that lie on the curve
        collect_common_zeros(g, curve, out);
        candidates_from_pair(exact_div(A, g), exact_div(B, g), curve, out, depth + 1);
        return;
    }
    collect_common_zeros(A, B, out);
}

}  // namespace

std::vector<ProjPoint> singular_points_closure(const PlaneCurve& c) {
    const FieldSpec* base = c.spec();
    std::vector<ProjPoint> result;
    // the line z = 0: all curve points there are computable directly
    for (const auto& [root, mult] : binform_roots(c.form().boundary(2))) {
        (void)mult;
        // root (s:u) of the form in (X, Y) is the point (s:u:0)
        const FieldSpec* rs = common_field(base, root.s.spec());
        const ProjPoint p =
            ProjPoint::make(ff_embed_to(root.s, rs), ff_embed_to(root.u, rs), FieldElement::zero(rs));
        if (!smooth_at(c, p)) result.push_back(p);
    }
    // affine chart: eliminate from a pair of vanishing polynomials
    const BiPoly f = c.affine();
    const BiPoly fx = c.partial(0).dehomogenized(2);
    const BiPoly fy = c.partial(1).dehomogenized(2);
    const BiPoly fz = c.partial(2).dehomogenized(2);
    std::vector<std::pair<FieldElement, FieldElement>> cand;
    const BiPoly* first = nullptr;
    for (const BiPoly* g : {&fx, &fy, &fz})
        if (!g->zero()) {
            first = g;
            break;
        }
    if (!first) throw InternalConsistencyError("all partials vanish on an irreducible curve");
    const BiPoly* second = nullptr;
    for (const BiPoly* g : {&fy, &fz})
        if (g != first && !g->zero()) {
            second = g;
            break;
        }
    if (second)
        candidates_from_pair(*first, *second, f, cand);
    else
        candidates_from_pair(*first, f, f, cand);
    for (const auto& [x0, y0] : cand) {
        const FieldSpec* fs = common_field(common_field(x0.spec(), y0.spec()), base);
        const ProjPoint p = ProjPoint::make(ff_embed_to(x0, fs), ff_embed_to(y0, fs),
                                            FieldElement::one(fs));
        if (on_curve(c, p) && !smooth_at(c, p)) result.push_back(p);
    }
    std::sort(result.begin(), result.end(), point_less);
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

}  // namespace gscope
