#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gscope/factor_bivariate.hpp"
#include "gscope/funfield.hpp"
#include "gscope/rng.hpp"

using namespace gscope;

namespace {

BiPoly bp_from_grid(const FieldSpec* s, std::vector<std::vector<std::int64_t>> rows) {
    // rows[j][i]: coefficient of y^j x^i
    std::vector<UniPoly> cs;
    for (auto& row : rows) {
        std::vector<FieldElement> cc;
        for (auto v : row) cc.push_back(FieldElement::scalar(s, v));
        cs.push_back(UniPoly::from_coeffs(std::move(cc)));
    }
    return BiPoly::from_coeffs(std::move(cs));
}

// product of factors must reproduce the input up to a nonzero scalar
void check_factorization(const BiPoly& f, const std::vector<BiFactor>& fs) {
    BiPoly prod(UniPoly(FieldElement::one(base_spec(f))));
    for (const auto& fac : fs)
        for (int i = 0; i < fac.multiplicity; ++i) prod = prod * fac.factor;
    auto unit = try_exact_div(f, prod);
    REQUIRE(unit.has_value());
    CHECK(unit->degree() == 0);
    CHECK(bp_degree_x(*unit) == 0);
}

}  // namespace

TEST_CASE("bivariate: x^4 + y^4 factors over GF(3) into two quadratics") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    BiPoly f = bp_from_grid(f3, {{0, 0, 0, 0, 1}, {}, {}, {}, {1}});  // y^4 + x^4
    auto fs = factor_bivariate(f);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor.degree() == 2);
    CHECK(fs[1].factor.degree() == 2);
    check_factorization(f, fs);
}

TEST_CASE("bivariate: fermat quartic chart is absolutely irreducible over GF(3)") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    BiPoly f = bp_from_grid(f3, {{1, 0, 0, 0, 1}, {}, {}, {}, {1}});  // y^4 + x^4 + 1
    CHECK(bp_absolutely_irreducible(f));
}

TEST_CASE("bivariate: x^4 - y^4 is reducible with witness") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    BiPoly f = bp_from_grid(f3, {{0, 0, 0, 0, -1}, {}, {}, {}, {1}});  // y^4 - x^4
    std::string witness;
    CHECK(!bp_absolutely_irreducible(f, &witness));
    CHECK(witness.find("GF(3^1)") != std::string::npos);
}

TEST_CASE("bivariate: irreducible over GF(3) but split over GF(9)") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    BiPoly f = bp_from_grid(f3, {{0, 0, 1}, {}, {1}});  // y^2 + x^2
    auto fs = factor_bivariate(f);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].multiplicity == 1);
    std::string witness;
    CHECK(!bp_absolutely_irreducible(f, &witness));
    CHECK(witness.find("GF(3^2)") != std::string::npos);
    // and over GF(9) it indeed splits into two linear-in-y factors
    const FieldSpec* f9 = FieldTable::get(3, 2);
    auto fs9 = factor_bivariate(bp_embed(f, f9));
    REQUIRE(fs9.size() == 2);
    check_factorization(bp_embed(f, f9), fs9);
}

TEST_CASE("bivariate: evaluation point forced into an extension") {
    const FieldSpec* f2 = FieldTable::get(2, 1);
    // y^2 + (x^2+x) y + 1: both GF(2) evaluations give (y+1)^2
    BiPoly f = bp_from_grid(f2, {{1}, {0, 1, 1}, {1}});
    auto fs = factor_bivariate(f);
    check_factorization(f, fs);
    for (const auto& fac : fs) CHECK(base_spec(fac.factor)->e == 1);
}

TEST_CASE("bivariate: wild multiplicities and inseparable pieces") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    // (y - x)^3 * (y^3 - x)  : cube is wild, second factor is y-inseparable
    BiPoly a = bp_from_grid(f3, {{0, -1}, {1}});        // y - x
    BiPoly b = bp_from_grid(f3, {{0, -1}, {}, {}, {1}});  // y^3 - x
    BiPoly f = a * a * a * b;
    auto fs = factor_bivariate(f);
    REQUIRE(fs.size() == 2);
    check_factorization(f, fs);
    bool saw_cube = false, saw_as = false;
    for (const auto& fac : fs) {
        if (fac.multiplicity == 3) {
            saw_cube = true;
            CHECK(fac.factor.degree() == 1);
        }
        if (fac.multiplicity == 1) {
            saw_as = true;
            CHECK(fac.factor.degree() == 3);
        }
    }
    CHECK(saw_cube);
    CHECK(saw_as);
}

TEST_CASE("bivariate: seeded random re-multiplication") {
    Rng rng(987654321);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{3, 1}, {3, 2}, {7, 1}, {2, 1}, {5, 1}};
    for (int t = 0; t < 60; ++t) {
        auto [p, e] = fields[t % fields.size()];
        const FieldSpec* s = FieldTable::get(p, e);
        auto random_bp = [&](int dy, int dx) {
            std::vector<UniPoly> cs;
            for (int j = 0; j <= dy; ++j) {
                std::vector<FieldElement> cc;
                for (int i = 0; i <= dx; ++i)
                    cc.push_back(FieldElement::scalar(s, static_cast<std::int64_t>(rng.below(p))));
                cs.push_back(UniPoly::from_coeffs(std::move(cc)));
            }
            return BiPoly::from_coeffs(std::move(cs));
        };
        BiPoly f = random_bp(2, 2) * random_bp(2, 1);
        if (f.zero() || f.degree() < 1) continue;
        auto fs = factor_bivariate(f, t);
        check_factorization(f, fs);
    }
}

TEST_CASE("function field factorization: pinned examples over GF(3)(x)") {
    const FieldSpec* f3 = FieldTable::get(3, 1);
    const UniPoly x = up_make(f3, {0, 1});
    const RatFun rx{UniPoly(x)};
    const RatFun one{up_make(f3, {1})};
    SUBCASE("Y^2 - x^2 = (Y-x)(Y+x)") {
        FunFieldPoly F = FunFieldPoly::from_coeffs({-(rx * rx), RatFun(), one});
        auto fs = function_field_factor(F);
        REQUIRE(fs.size() == 2);
        for (const auto& fac : fs) {
            CHECK(fac.factor.degree() == 1);
            CHECK(fac.multiplicity == 1);
        }
        // re-multiplication over the function field
        FunFieldPoly prod(one);
        for (const auto& fac : fs) prod = prod * fac.factor;
        CHECK(prod == ffp_monic(F));
    }
    SUBCASE("Y^2 - x is irreducible") {
        FunFieldPoly F = FunFieldPoly::from_coeffs({-rx, RatFun(), one});
        auto fs = function_field_factor(F);
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].factor.degree() == 2);
        CHECK(!ffp_bounded_root(F, 2 * 1).has_value());
    }
    SUBCASE("Artin-Schreier Y^3 - Y - x is irreducible") {
        FunFieldPoly F = FunFieldPoly::from_coeffs({-rx, -one, RatFun(), one});
        auto fs = function_field_factor(F);
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].factor.degree() == 3);
        CHECK(!ffp_bounded_root(F, 2).has_value());
    }
    SUBCASE("zero input refused") {
        CHECK_THROWS_AS(function_field_factor(FunFieldPoly()), std::invalid_argument);
    }
    SUBCASE("denominators cleared correctly") {
        // (Y - 1/x)(Y - x) = Y^2 - (x + 1/x) Y + 1
        const RatFun inv_x(up_make(f3, {1}), x);
        FunFieldPoly F = FunFieldPoly::from_coeffs({one, -(rx + inv_x), one});
        auto fs = function_field_factor(F);
        REQUIRE(fs.size() == 2);
        FunFieldPoly prod(one);
        for (const auto& fac : fs) {
            CHECK(fac.factor.degree() == 1);
            prod = prod * fac.factor;
        }
        CHECK(prod == ffp_monic(F));
    }
}
