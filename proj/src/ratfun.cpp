#include "gscope/ratfun.hpp"

#include <sstream>

namespace gscope {

RatFun::RatFun(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.zero()) throw std::invalid_argument("zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.zero()) {
        den_ = UniPoly();
        return;
    }
    if (den_.zero() || den_.degree() == 0) {
        if (!den_.zero() && !den_.coeff(0).is_one()) num_ = scale(num_, den_.coeff(0).inverse());
        den_ = UniPoly();
        return;
    }
    const UniPoly g = up_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const FieldElement lead = den_.lead();
    if (!lead.is_one()) {
        const FieldElement inv = lead.inverse();
        num_ = scale(num_, inv);
        den_ = scale(den_, inv);
    }
    if (den_.degree() == 0) den_ = UniPoly();
}

UniPoly RatFun::den() const {
    if (!den_.zero()) return den_;
    const FieldSpec* s = base_spec(num_);
    if (!s) throw std::invalid_argument("denominator of the universal zero has no field");
    return UniPoly(FieldElement::one(s));
}

bool RatFun::is_one() const {
    return den_.zero() && num_.degree() == 0 && num_.coeff(0).is_one();
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero rational function");
    RatFun r;
    r.num_ = den_.zero() ? UniPoly(FieldElement::one(base_spec(num_))) : den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFun r;
    if (a.den_.zero() && b.den_.zero()) {
        r.num_ = a.num_ + b.num_;
    } else if (a.den_.zero()) {
        r.num_ = a.num_ * b.den_ + b.num_;
        r.den_ = b.den_;
    } else if (b.den_.zero()) {
        r.num_ = b.num_ * a.den_ + a.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    RatFun r;
    r.num_ = a.num_ * b.num_;
    if (a.den_.zero()) {
        r.den_ = b.den_;
    } else if (b.den_.zero()) {
        r.den_ = a.den_;
    } else {
        r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
}

bool operator==(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    // both reduced with monic denominators: equality is componentwise
    const bool da = a.den_.zero(), db = b.den_.zero();
    if (da != db) return false;
    if (!da && !(a.den_ == b.den_)) return false;
    return a.num_ == b.num_;
}

std::string RatFun::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (den_.zero()) {
        os << poly_str(num_, var);
    } else {
        os << "(" << poly_str(num_, var) << ")/(" << poly_str(den_, var) << ")";
    }
    return os.str();
}

RatFun unit_of(const RatFun& a) {
    const FieldSpec* s = base_spec(a.num());
    if (!s) throw std::invalid_argument("unit of the universal zero");
    return RatFun(UniPoly(FieldElement::one(s)));
}

std::optional<RatFun> try_exact_div(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
}

}  // namespace gscope
