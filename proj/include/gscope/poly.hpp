#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gscope/field.hpp"

namespace gscope {

// Dense polynomial in one variable over a coefficient ring T. T is either
// FieldElement or another Poly, so the same template carries GF(q)[x],
// GF(q)[x][y] and GF(q)[x][Y][y]. The zero polynomial has an empty
// coefficient vector and degree() == -1.
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(T constant) {
        if (!is_zero(constant)) c_.push_back(std::move(constant));
    }
    static Poly from_coeffs(std::vector<T> coeffs) {
        Poly f;
        f.c_ = std::move(coeffs);
        f.trim();
        return f;
    }
    // c * x^k
    static Poly monomial(T c, std::size_t k) {
        Poly f;
        if (!is_zero(c)) {
            f.c_.assign(k, T());
            f.c_.push_back(std::move(c));
        }
        return f;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(); }
    const T& lead() const {
        if (c_.empty()) throw std::invalid_argument("lead of zero polynomial");
        return c_.back();
    }
    void set_coeff(std::size_t i, T v) {
        if (i >= c_.size()) {
            if (is_zero(v)) return;
            c_.resize(i + 1, T());
        }
        c_[i] = std::move(v);
        trim();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), T());
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                r.c_[i] = a.c_[i] + b.c_[i];
            else if (i < a.c_.size())
                r.c_[i] = a.c_[i];
            else
                r.c_[i] = b.c_[i];
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return Poly();
        Poly r;
        r.c_.resize(a.c_.size() + b.c_.size() - 1, T());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const T& s) { return a * Poly(s); }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(std::uint64_t n) const {
        Poly r = unit_poly(*this);
        Poly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    // multiply by x^k
    Poly shifted(std::size_t k) const {
        if (zero()) return Poly();
        Poly r;
        r.c_.assign(k, T());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    template <class U>
    U eval(const U& x) const;

    Poly derivative(std::uint32_t p) const {
        Poly r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1, T());
        for (std::size_t i = 1; i < c_.size(); ++i) {
            const std::uint64_t k = i % p;
            if (k == 0) continue;
            T term = c_[i];
            T acc = T();
            for (std::uint64_t j = 0; j < k; ++j) acc = acc + term;
            r.c_[i - 1] = acc;
        }
        r.trim();
        return r;
    }

    // substitute x -> x + a
    Poly taylor_shift(const T& a) const {
        Poly r;
        for (std::size_t i = c_.size(); i > 0; --i) {
            r = r * (Poly::monomial(unit_like(a), 1) + Poly(a)) + Poly(c_[i - 1]);
        }
        return r;
    }

    // coefficient vector reversed: x^deg * f(1/x)
    Poly reversed() const {
        Poly r;
        r.c_.assign(c_.rbegin(), c_.rend());
        r.trim();
        return r;
    }

    Poly truncated(std::size_t k) const {  // mod x^k
        Poly r;
        r.c_.assign(c_.begin(), c_.begin() + std::min(k, c_.size()));
        r.trim();
        return r;
    }

  private:
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    static T unit_like(const T&);
    static Poly unit_poly(const Poly&);

    template <class U>
    friend bool is_zero(const Poly<U>& f);
    template <class U>
    friend Poly<U> unit_of(const Poly<U>&);
};

template <class T>
bool is_zero(const Poly<T>& f) {
    return f.zero();
}

// --- multiplicative unit carrying the right field context ------------------

inline FieldElement unit_of(const FieldElement& x) {
    if (!x.spec()) throw std::invalid_argument("unit of the universal zero");
    return FieldElement::one(x.spec());
}

template <class T>
Poly<T> unit_of(const Poly<T>& f) {
    if (f.zero()) throw std::invalid_argument("unit of zero polynomial");
    return Poly<T>(unit_of(f.lead()));
}

template <class T>
T Poly<T>::unit_like(const T& a) {
    return unit_of(a);
}

template <class T>
Poly<T> Poly<T>::unit_poly(const Poly& f) {
    if (f.zero()) return Poly(); // 0^n only sensible for n>0; pow(0) of zero poly unused
    return unit_of(f);
}

// --- scalar context helpers -------------------------------------------------

inline FieldElement lead_scalar(const FieldElement& x) { return x; }
template <class T>
FieldElement lead_scalar(const Poly<T>& f) {
    return lead_scalar(f.lead());
}

inline FieldElement scale(const FieldElement& x, const FieldElement& s) { return x * s; }
template <class T>
Poly<T> scale(const Poly<T>& f, const FieldElement& s) {
    std::vector<T> c = f.coeffs();
    for (auto& v : c) v = scale(v, s);
    return Poly<T>::from_coeffs(std::move(c));
}

// The field spec reachable at the bottom of a (possibly nested) polynomial.
inline const FieldSpec* base_spec(const FieldElement& x) { return x.spec(); }
template <class T>
const FieldSpec* base_spec(const Poly<T>& f) {
    for (const auto& c : f.coeffs()) {
        const FieldSpec* s = base_spec(c);
        if (s) return s;
    }
    return nullptr;
}

template <class T>
template <class U>
U Poly<T>::eval(const U& x) const {
    U acc{};
    for (std::size_t i = c_.size(); i > 0; --i) {
        acc = acc * x + U(c_[i - 1]);
    }
    return acc;
}

// Specialized Horner when argument and coefficients are plain field elements.
template <>
template <>
inline FieldElement Poly<FieldElement>::eval(const FieldElement& x) const {
    FieldElement acc;
    for (std::size_t i = c_.size(); i > 0; --i) acc = acc * x + c_[i - 1];
    return acc;
}

// --- checked exact division -------------------------------------------------

inline std::optional<FieldElement> try_exact_div(const FieldElement& a, const FieldElement& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
}

template <class T>
std::optional<Poly<T>> try_exact_div(const Poly<T>& a, const Poly<T>& b) {
    if (b.zero()) return std::nullopt;
    if (a.zero()) return Poly<T>();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<T> rem = a.coeffs();
    std::vector<T> quot(a.degree() - b.degree() + 1, T());
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const T& top = rem[k + b.degree()];
        if (is_zero(top)) continue;
        auto q = try_exact_div(top, b.lead());
        if (!q) return std::nullopt;
        quot[k] = *q;
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] = rem[k + i] - *q * b.coeff(i);
    }
    for (const auto& r : rem)
        if (!is_zero(r)) return std::nullopt;
    return Poly<T>::from_coeffs(std::move(quot));
}

template <class T>
T exact_div_checked(const T& a, const T& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw InternalConsistencyError("exact division failed");
    return *q;
}

template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
    return exact_div_checked(a, b);
}

// --- pseudo-division: lc(g)^(deg f - deg g + 1) * f = q*g + r ---------------

template <class T>
void pseudo_divmod(const Poly<T>& f, const Poly<T>& g, Poly<T>& q, Poly<T>& r) {
    if (g.zero()) throw std::invalid_argument("pseudo-division by zero");
    q = Poly<T>();
    r = f;
    const int dg = g.degree();
    int steps = f.degree() - dg + 1;
    if (steps <= 0) return;
    const Poly<T> lg(g.lead());
    while (!r.zero() && r.degree() >= dg && steps > 0) {
        Poly<T> t = Poly<T>::monomial(r.lead(), r.degree() - dg);
        q = q * lg + t;
        r = r * lg - t * g;
        --steps;
    }
    // pad remaining steps so the lc power is exactly deg f - deg g + 1
    while (steps-- > 0) {
        q = q * lg;
        r = r * lg;
    }
}

template <class T>
Poly<T> pseudo_rem(const Poly<T>& f, const Poly<T>& g) {
    Poly<T> q, r;
    pseudo_divmod(f, g, q, r);
    return r;
}

// --- gcd --------------------------------------------------------------------

inline FieldElement gcd_generic(const FieldElement& a, const FieldElement& b) {
    if (a.is_zero() && b.is_zero()) return FieldElement();
    const FieldSpec* s = a.spec() ? a.spec() : b.spec();
    return FieldElement::one(s);
}

template <class T>
T poly_content(const Poly<T>& f) {
    T c{};
    for (const auto& v : f.coeffs()) c = gcd_generic(c, v);
    return c;
}

template <class T>
Poly<T> primitive_part(const Poly<T>& f) {
    if (f.zero()) return f;
    T c = poly_content(f);
    Poly<T> g = exact_div_checked(f, Poly<T>(c));
    // unit-normalize: leading scalar 1
    const FieldElement u = lead_scalar(g);
    return scale(g, u.inverse());
}

// gcd of polynomials whose coefficients are field elements: monic Euclid.
Poly<FieldElement> gcd_generic(const Poly<FieldElement>& a, const Poly<FieldElement>& b);

// gcd over a polynomial coefficient ring: primitive PRS.
template <class T>
Poly<Poly<T>> gcd_generic(const Poly<Poly<T>>& a, const Poly<Poly<T>>& b) {
    if (a.zero()) return b.zero() ? b : primitive_scaled(b);
    if (b.zero()) return primitive_scaled(a);
    Poly<T> ca = poly_content(a), cb = poly_content(b);
    Poly<T> cg = gcd_generic(ca, cb);
    Poly<Poly<T>> f = exact_div_checked(a, Poly<Poly<T>>(ca));
    Poly<Poly<T>> g = exact_div_checked(b, Poly<Poly<T>>(cb));
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.zero()) {
        Poly<Poly<T>> r = pseudo_rem(f, g);
        f = std::move(g);
        if (r.zero()) {
            g = Poly<Poly<T>>();
        } else {
            g = primitive_part(r);
        }
    }
    Poly<Poly<T>> result = primitive_part(f) * Poly<Poly<T>>(cg);
    const FieldElement u = lead_scalar(result);
    return scale(result, u.inverse());
}

template <class T>
Poly<T> primitive_scaled(const Poly<T>& f) {
    if (f.zero()) return f;
    const FieldElement u = lead_scalar(f);
    return scale(f, u.inverse());
}

// --- resultant via fraction-free (Bareiss) elimination ----------------------
//
// Sylvester matrix with the rows of `f` first, then the rows of `g`;
// Res(f, g) eliminating the main variable. Entries live in the coefficient
// ring T, divisions are exact by Bareiss' identity.
template <class T>
T sylvester_resultant(const Poly<T>& f, const Poly<T>& g) {
    if (f.zero() || g.zero()) throw std::invalid_argument("resultant of zero polynomial");
    const int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) {
        // Res of two constants is the empty determinant
        return unit_of(f.lead());
    }
    if (m == 0) return f.lead().pow(static_cast<std::uint64_t>(n));
    if (n == 0) return g.lead().pow(static_cast<std::uint64_t>(m));
    const int size = m + n;
    std::vector<std::vector<T>> a(size, std::vector<T>(size, T()));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + m - i] = f.coeff(i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + n - i] = g.coeff(i);
    bool negate = false;
    T prev;  // previous pivot; unset on first step
    bool have_prev = false;
    for (int k = 0; k < size - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < size; ++r)
            if (!is_zero(a[r][k])) {
                pivot = r;
                break;
            }
        if (pivot < 0) return T();  // singular: resultant is zero
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            negate = !negate;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                T v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = have_prev ? exact_div_checked(v, prev) : std::move(v);
            }
            a[i][k] = T();
        }
        prev = a[k][k];
        have_prev = true;
    }
    T det = a[size - 1][size - 1];
    return negate ? -det : det;
}

// pow for FieldElement already exists; adapter so the template above compiles
// uniformly via member pow on Poly as well.

}  // namespace gscope
