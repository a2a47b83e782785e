#pragma once

#include "gscope/homform.hpp"

namespace gscope {

// Irreducible plane curve of degree >= 2. Absolute irreducibility is checked
// on construction; the witness extension is part of the error message.
class PlaneCurve {
  public:
    explicit PlaneCurve(HomForm form);

    const HomForm& form() const { return form_; }
    const HomForm& partial(int var) const { return partials_[var]; }
    int degree() const { return form_.degree(); }
    const FieldSpec* spec() const { return form_.spec(); }

    // dehomogenized z-chart, cached: the affine model f(x, y)
    const BiPoly& affine() const { return affine_; }

  private:
    HomForm form_;
    std::array<HomForm, 3> partials_;
    BiPoly affine_;
};

bool is_absolutely_irreducible(const HomForm& form, std::string* witness = nullptr);

// Multiplicity of the point on the curve; 0 when the point is off the curve.
int multiplicity_at(const PlaneCurve& c, const ProjPoint& p);

bool on_curve(const PlaneCurve& c, const ProjPoint& p);
// multiplicity 1: on the curve with nonvanishing gradient
bool smooth_at(const PlaneCurve& c, const ProjPoint& p);

struct TangentCone {
    int multiplicity = 0;
    std::vector<std::pair<ProjLine, int>> lines;  // cone lines with multiplicities
};

TangentCone tangent_cone(const PlaneCurve& c, const ProjPoint& p);

ProjLine tangent_line_smooth(const PlaneCurve& c, const ProjPoint& p);

// I_P(C, l): order of vanishing of the form restricted to the line at P.
int intersection_multiplicity(const PlaneCurve& c, const ProjLine& l, const ProjPoint& p);

// Independent route: Sylvester resultant elimination after a coordinate
// change; used as the cross-checking oracle for the restriction route.
int intersection_multiplicity_resultant(const PlaneCurve& c, const ProjLine& l,
                                        const ProjPoint& p, std::uint64_t seed = 7);

struct CurveLinePoint {
    ProjPoint point;
    int multiplicity;
};

// All points of C on l over the algebraic closure, with intersection
// multiplicities. Multiplicities sum to deg C.
std::vector<CurveLinePoint> line_intersections(const PlaneCurve& c, const ProjLine& l);

// Points of the curve whose minimal field of definition is exactly
// GF(p^(e*m)) among the searched tower levels, canonically ordered.
std::vector<ProjPoint> curve_points_at_level(const PlaneCurve& c, std::uint32_t m);

// Singular points within GF(p^(e*m')), m' <= ext_max.
std::vector<ProjPoint> singular_points(const PlaneCurve& c, std::uint32_t ext_max);

// The full singular locus over the algebraic closure, found by resultant
// elimination; complete regardless of extension bounds.
std::vector<ProjPoint> singular_points_closure(const PlaneCurve& c);

}  // namespace gscope
