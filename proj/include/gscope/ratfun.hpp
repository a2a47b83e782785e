#pragma once

#include "gscope/unipoly.hpp"

namespace gscope {

// Element of GF(p^e)(x): reduced fraction with monic denominator. An empty
// denominator stands for 1 so the default-constructed value is a universal
// zero, matching the FieldElement convention.
class RatFun {
  public:
    RatFun() = default;
    explicit RatFun(UniPoly num) : num_(std::move(num)) { normalize(); }
    RatFun(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    UniPoly den() const;  // materializes 1 when empty
    bool den_is_one() const { return den_.degree() <= 0; }

    bool is_zero() const { return num_.zero(); }
    bool is_one() const;

    RatFun operator-() const;
    RatFun inverse() const;

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
    friend bool operator==(const RatFun& a, const RatFun& b);
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string str(const std::string& var) const;

  private:
    UniPoly num_;
    UniPoly den_;  // monic when nontrivial; empty encodes 1

    void normalize();
};

inline bool is_zero(const RatFun& a) { return a.is_zero(); }
RatFun unit_of(const RatFun& a);
std::optional<RatFun> try_exact_div(const RatFun& a, const RatFun& b);

}  // namespace gscope
