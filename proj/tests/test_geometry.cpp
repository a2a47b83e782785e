#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gscope/curve.hpp"
#include "gscope/factor_univariate.hpp"
#include "gscope/rng.hpp"

using namespace gscope;

namespace {

struct Mono {
    int i, j;
    std::int64_t c;
};

HomForm make_form(const FieldSpec* s, int d, std::initializer_list<Mono> monos) {
    HomForm f(s, d);
    for (const auto& m : monos) f.set_coeff(m.i, m.j, FieldElement::scalar(s, m.c));
    return f;
}

HomForm fermat_quartic(const FieldSpec* s) {
    return make_form(s, 4, {{4, 0, 1}, {0, 4, 1}, {0, 0, 1}});
}

// a y-coordinate b with b^4 = -1 in GF(9)
FieldElement fourth_root_of_minus_one(const FieldSpec* f9) {
    const FieldElement minus_one = -FieldElement::one(f9);
    for (std::uint64_t enc = 1; enc < f9->order(); ++enc) {
        std::vector<std::uint32_t> c(f9->e);
        std::uint64_t v = enc;
        for (std::uint32_t i = 0; i < f9->e; ++i) {
            c[i] = static_cast<std::uint32_t>(v % f9->p);
            v /= f9->p;
        }
        FieldElement b(f9, std::move(c));
        if (b.pow(4) == minus_one) return b;
    }
    throw std::logic_error("no fourth root of -1 in GF(9)");
}

}  // namespace

TEST_CASE("absolute irreducibility of forms") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    CHECK(is_absolutely_irreducible(fermat_quartic(f3)));
    // X^4 - Y^4 splits
    CHECK(!is_absolutely_irreducible(make_form(f3, 4, {{4, 0, 1}, {0, 4, -1}})));
    // X^4 + Y^4 = (X^2+XY-Y^2)(X^2-XY-Y^2) in characteristic 3
    std::string witness;
    CHECK(!is_absolutely_irreducible(make_form(f3, 4, {{4, 0, 1}, {0, 4, 1}}), &witness));
    CHECK(!witness.empty());
    CHECK_THROWS_AS(PlaneCurve(make_form(f3, 4, {{4, 0, 1}, {0, 4, 1}})), ReducibleCurveError);
}

TEST_CASE("multiplicity at points") {
    const FieldSpec* f7 = FieldTable::get(7, 1);
    // X Y Z^2 + X^4 + Y^4
    const PlaneCurve c(make_form(f7, 4, {{1, 1, 1}, {4, 0, 1}, {0, 4, 1}}));
    const FieldElement z = FieldElement::zero(f7), o = FieldElement::one(f7);
    CHECK(multiplicity_at(c, ProjPoint::make(z, z, o)) == 2);
    // off the curve
    CHECK(multiplicity_at(c, ProjPoint::make(o, o, o)) == 0);

    const FieldSpec* f3 = FieldTable::get(3, 1);
    const PlaneCurve fermat(fermat_quartic(f3));
    const FieldSpec* f9 = FieldTable::get(3, 2);
    const FieldElement beta = fourth_root_of_minus_one(f9);
    const ProjPoint p = ProjPoint::make(FieldElement::zero(f9), beta, FieldElement::one(f9));
    CHECK(multiplicity_at(fermat, p) == 1);
    CHECK(smooth_at(fermat, p));
}

TEST_CASE("tangent cones") {
    const FieldSpec* f7 = FieldTable::get(7, 1);
    const PlaneCurve c(make_form(f7, 4, {{1, 1, 1}, {4, 0, 1}, {0, 4, 1}}));
    const FieldElement z = FieldElement::zero(f7), o = FieldElement::one(f7);
    const ProjPoint origin = ProjPoint::make(z, z, o);
    const TangentCone cone = tangent_cone(c, origin);
    CHECK(cone.multiplicity == 2);
    REQUIRE(cone.lines.size() == 2);
    // lines {X=0} and {Y=0}
    const ProjLine lx = ProjLine::make(o, z, z), ly = ProjLine::make(z, o, z);
    bool saw_x = false, saw_y = false;
    for (const auto& [line, mult] : cone.lines) {
        CHECK(mult == 1);
        if (line == lx) saw_x = true;
        if (line == ly) saw_y = true;
        CHECK(intersection_multiplicity(c, line, origin) > cone.multiplicity);
    }
    CHECK(saw_x);
    CHECK(saw_y);

    // cuspidal cubic Y^2 Z - X^3: double cone line {Y=0}
    const FieldSpec* f3 = FieldTable::get(3, 1);
    const PlaneCurve cusp(make_form(f3, 3, {{0, 2, 1}, {3, 0, -1}}));
    const ProjPoint o3 = ProjPoint::make(FieldElement::zero(f3), FieldElement::zero(f3),
                                         FieldElement::one(f3));
    const TangentCone cone2 = tangent_cone(cusp, o3);
    CHECK(cone2.multiplicity == 2);
    REQUIRE(cone2.lines.size() == 1);
    CHECK(cone2.lines[0].second == 2);
    CHECK(cone2.lines[0].first == ProjLine::make(FieldElement::zero(f3), FieldElement::one(f3),
                                                 FieldElement::zero(f3)));

    // smooth point: single cone line equal to the tangent
    const PlaneCurve fermat(fermat_quartic(f3));
    const FieldSpec* f9 = FieldTable::get(3, 2);
    const FieldElement beta = fourth_root_of_minus_one(f9);
    const ProjPoint p = ProjPoint::make(FieldElement::zero(f9), beta, FieldElement::one(f9));
    const TangentCone cone3 = tangent_cone(fermat, p);
    CHECK(cone3.multiplicity == 1);
    REQUIRE(cone3.lines.size() == 1);
    CHECK(cone3.lines[0].first == tangent_line_smooth(fermat, p));
}

TEST_CASE("tangent lines at smooth points") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    const PlaneCurve fermat(fermat_quartic(f3));
    const FieldSpec* f9 = FieldTable::get(3, 2);
    const FieldElement beta = fourth_root_of_minus_one(f9);
    const FieldElement z9 = FieldElement::zero(f9), o9 = FieldElement::one(f9);
    // tangent at (0:b:1) is b^3 Y + Z = 0
    CHECK(tangent_line_smooth(fermat, ProjPoint::make(z9, beta, o9)) ==
          ProjLine::make(z9, beta.pow(3), o9));
    CHECK(tangent_line_smooth(fermat, ProjPoint::make(beta, z9, o9)) ==
          ProjLine::make(beta.pow(3), z9, o9));

    // Y Z^3 - X^4 at (0:0:1): tangent {Y = 0}
    const PlaneCurve quart(make_form(f3, 4, {{0, 1, 1}, {4, 0, -1}}));
    const FieldElement z = FieldElement::zero(f3), o = FieldElement::one(f3);
    CHECK(tangent_line_smooth(quart, ProjPoint::make(z, z, o)) == ProjLine::make(z, o, z));
    // singular point refused
    CHECK_THROWS_AS(tangent_line_smooth(quart, ProjPoint::make(z, o, z)),
                    std::invalid_argument);
}

TEST_CASE("intersection multiplicities") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    const PlaneCurve quart(make_form(f3, 4, {{0, 1, 1}, {4, 0, -1}}));  // Y Z^3 - X^4
    const FieldElement z = FieldElement::zero(f3), o = FieldElement::one(f3);
    const ProjPoint origin = ProjPoint::make(z, z, o);
    CHECK(intersection_multiplicity(quart, ProjLine::make(z, o, z), origin) == 4);

    const PlaneCurve fermat(fermat_quartic(f3));
    const FieldSpec* f9 = FieldTable::get(3, 2);
    const FieldElement beta = fourth_root_of_minus_one(f9);
    const ProjPoint p = ProjPoint::make(FieldElement::zero(f9), beta, FieldElement::one(f9));
    CHECK(intersection_multiplicity(fermat, tangent_line_smooth(fermat, p), p) == 4);
    // the line {X=0} meets the curve in 4 distinct points, so transversally at p
    const ProjPoint q = ProjPoint::make(FieldElement::zero(f9), FieldElement::one(f9),
                                        FieldElement::zero(f9));
    const ProjLine thru = line_through(p, q);
    CHECK(intersection_multiplicity(fermat, thru, p) == 1);
    // point not on the line {Z=0}
    CHECK(intersection_multiplicity(fermat, ProjLine::make(z, z, o), p) == 0);
}

TEST_CASE("line intersections satisfy Bezout") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    const PlaneCurve fermat(fermat_quartic(f3));
    Rng rng(314159);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
        FieldElement a = FieldElement::scalar(f3, static_cast<std::int64_t>(rng.below(3)));
        FieldElement b = FieldElement::scalar(f3, static_cast<std::int64_t>(rng.below(3)));
        FieldElement c = FieldElement::scalar(f3, static_cast<std::int64_t>(rng.below(3)));
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        const ProjLine l = ProjLine::make(a, b, c);
        auto pts = line_intersections(fermat, l);  // throws if sum != d
        int sum = 0;
        for (const auto& e : pts) {
            sum += e.multiplicity;
            CHECK(on_curve(fermat, e.point));
            CHECK(l.contains(e.point));
            CHECK(intersection_multiplicity(fermat, l, e.point) == e.multiplicity);
        }
        CHECK(sum == 4);
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("restriction and resultant routes agree") {
    const FieldSpec* f7 = FieldTable::get(7, 1);
    Rng rng(2718281);
    // random irreducible quartics; lines through a known curve point
    int done = 0;
    while (done < 50) {
        HomForm f(f7, 4);
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j)
                f.set_coeff(i, j, FieldElement::scalar(f7, static_cast<std::int64_t>(rng.below(7))));
        if (f.is_zero()) continue;
        std::unique_ptr<PlaneCurve> c;
        try {
            c = std::make_unique<PlaneCurve>(f);
        } catch (const ReducibleCurveError&) {
            continue;
        }
        // find a curve point over GF(7) or GF(49)
        std::vector<ProjPoint> pts = curve_points_at_level(*c, 1);
        if (pts.empty()) pts = curve_points_at_level(*c, 2);
        if (pts.empty()) continue;
        const ProjPoint& p = pts[rng.below(pts.size())];
        // a random second point determining the line
        const FieldSpec* ps = p.spec();
        std::vector<std::uint32_t> cc(ps->e);
        for (auto& v : cc) v = static_cast<std::uint32_t>(rng.below(7));
        FieldElement rx(ps, std::move(cc));
        const ProjPoint q = ProjPoint::make(rx, FieldElement::one(ps), FieldElement::zero(ps));
        if (q == p) continue;
        const ProjLine l = line_through(p, q);
        const int via_restriction = intersection_multiplicity(*c, l, p);
        const int via_resultant = intersection_multiplicity_resultant(*c, l, p, rng.next());
        CHECK(via_restriction == via_resultant);
        ++done;
    }
}

TEST_CASE("singular point search") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    const PlaneCurve fermat(fermat_quartic(f3));
    CHECK(singular_points(fermat, 2).empty());
    CHECK(singular_points_closure(fermat).empty());

    const PlaneCurve quart(make_form(f3, 4, {{0, 1, 1}, {4, 0, -1}}));  // Y Z^3 - X^4
    auto sing = singular_points(quart, 1);
    REQUIRE(sing.size() == 1);
    CHECK(sing[0] == ProjPoint::make(FieldElement::zero(f3), FieldElement::one(f3),
                                     FieldElement::zero(f3)));
    auto sing_cl = singular_points_closure(quart);
    REQUIRE(sing_cl.size() == 1);
    CHECK(sing_cl[0] == sing[0]);

    const FieldSpec* f7 = FieldTable::get(7, 1);
    const PlaneCurve nodal(make_form(f7, 4, {{1, 1, 1}, {4, 0, 1}, {0, 4, 1}}));
    auto sing2 = singular_points_closure(nodal);
    REQUIRE(sing2.size() >= 1);
    bool found_origin = false;
    for (const auto& p : sing2)
        if (p == ProjPoint::make(FieldElement::zero(f7), FieldElement::zero(f7),
                                 FieldElement::one(f7)))
            found_origin = true;
    CHECK(found_origin);
}

TEST_CASE("curve point enumeration per level") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    const PlaneCurve fermat(fermat_quartic(f3));
    CHECK(curve_points_at_level(fermat, 1).empty());
    auto lvl2 = curve_points_at_level(fermat, 2);
    CHECK(lvl2.size() == 28);
    // all of GF(81)'s curve points already live in GF(9)
    CHECK(curve_points_at_level(fermat, 4).empty());
    auto lvl5 = curve_points_at_level(fermat, 5);
    CHECK(lvl5.size() == 244 - 28);
    for (const auto& p : lvl2) CHECK(smooth_at(fermat, p));
}
