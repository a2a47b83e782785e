#include "gscope/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gscope {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- raw dense polynomials over GF(p); used for the modulus search and for
// --- element arithmetic below the FieldElement abstraction.

using ZpPoly = std::vector<std::uint32_t>;

void zp_trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t zp_inv_scalar(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        const std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("not invertible mod p");
    t %= static_cast<std::int64_t>(p);
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    zp_trim(r);
    return r;
}

void zp_divmod(const ZpPoly& f, const ZpPoly& g, std::uint32_t p, ZpPoly& quot, ZpPoly& rem) {
    rem = f;
    zp_trim(rem);
    quot.clear();
    if (rem.size() < g.size()) return;
    quot.assign(rem.size() - g.size() + 1, 0);
    const std::uint32_t lg_inv = zp_inv_scalar(g.back(), p);
    while (rem.size() >= g.size()) {
        const std::uint64_t q = static_cast<std::uint64_t>(rem.back()) * lg_inv % p;
        const std::size_t shift = rem.size() - g.size();
        quot[shift] = static_cast<std::uint32_t>(q);
        if (q != 0) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                std::uint64_t v =
                    rem[shift + i] + static_cast<std::uint64_t>(p) * p - q * g[i] % p;
                rem[shift + i] = static_cast<std::uint32_t>(v % p);
            }
        }
        rem.pop_back();
        zp_trim(rem);
        if (rem.empty()) break;
    }
    zp_trim(quot);
}

ZpPoly zp_mod(const ZpPoly& f, const ZpPoly& g, std::uint32_t p) {
    ZpPoly q, r;
    zp_divmod(f, g, p, q, r);
    return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint32_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint32_t inv = zp_inv_scalar(a.back(), p);
        for (auto& c : a)
            c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
    }
    return a;
}

// x^(p^k) mod f
ZpPoly zp_pow_px(const ZpPoly& f, std::uint32_t p, std::uint32_t k) {
    ZpPoly acc = zp_mod(ZpPoly{0, 1}, f, p);
    for (std::uint32_t step = 0; step < k; ++step) {
        ZpPoly result{1};
        ZpPoly base = acc;
        std::uint32_t n = p;
        while (n) {
            if (n & 1) result = zp_mod(zp_mul(result, base, p), f, p);
            base = zp_mod(zp_mul(base, base, p), f, p);
            n >>= 1;
        }
        acc = std::move(result);
    }
    return acc;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool zp_irreducible(const ZpPoly& f, std::uint32_t p) {
    // Monic degree-e input. Rabin test.
    const std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
    if (e == 0) return false;
    if (e == 1) return true;
    ZpPoly xe = zp_pow_px(f, p, e);
    if (!(xe.size() == 2 && xe[0] == 0 && xe[1] == 1)) return false;
    for (std::uint32_t l : prime_factors(e)) {
        ZpPoly d = zp_pow_px(f, p, e / l);
        if (d.size() < 2) d.resize(2, 0);
        d[1] = static_cast<std::uint32_t>((d[1] + p - 1) % p);
        zp_trim(d);
        if (zp_gcd(d, f, p).size() != 1) return false;
    }
    return true;
}

ZpPoly find_modulus(std::uint32_t p, std::uint32_t e) {
    if (e == 1) return {0, 1};  // the residue g is 0: GF(p) itself
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        ZpPoly f(e + 1, 0);
        std::uint64_t v = enc;
        for (std::uint32_t i = 0; i < e; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        f[e] = 1;
        if (zp_irreducible(f, p)) return f;
    }
    throw InternalConsistencyError("no irreducible modulus found");  // unreachable
}

struct TableKey {
    std::uint32_t p, e;
    bool operator<(const TableKey& o) const { return p < o.p || (p == o.p && e < o.e); }
};

std::map<TableKey, std::unique_ptr<FieldSpec>>& table() {
    static std::map<TableKey, std::unique_ptr<FieldSpec>> t;
    return t;
}

std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::uint64_t FieldSpec::order() const {
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (n > (1ull << 62) / p) throw std::invalid_argument("field order exceeds 2^62");
        n *= p;
    }
    return n;
}

const FieldSpec* FieldTable::get(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::lock_guard<std::mutex> lock(table_mutex());
    auto& t = table();
    auto it = t.find({p, e});
    if (it != t.end()) return it->second.get();
    auto spec = std::make_unique<FieldSpec>();
    spec->p = p;
    spec->e = e;
    spec->order();  // overflow guard
    ZpPoly mod = find_modulus(p, e);
    spec->modulus.assign(mod.begin(), mod.end() - 1);
    const FieldSpec* ptr = spec.get();
    t.emplace(TableKey{p, e}, std::move(spec));
    return ptr;
}

void FieldTable::warm(std::uint32_t p, std::uint32_t e, std::uint32_t max_m) {
    std::vector<std::uint32_t> levels;
    for (std::uint32_t m = 1; m <= max_m; ++m) levels.push_back(e * m);
    std::vector<std::uint32_t> all = levels;
    for (auto a : levels)
        for (auto b : levels) {
            const std::uint32_t l = std::lcm(a, b);
            if (l <= 64) all.push_back(l);
        }
    for (auto l : all) {
        const double bits = l * std::log2(static_cast<double>(p));
        if (bits <= 62) (void)get(p, l);
    }
}

FieldElement::FieldElement(const FieldSpec* spec, std::vector<std::uint32_t> coeffs)
    : spec_(spec), c_(std::move(coeffs)) {
    if (!spec_) throw std::invalid_argument("null field spec");
    c_.resize(spec_->e, 0);
    for (auto& v : c_) v %= spec_->p;
}

FieldElement FieldElement::scalar(const FieldSpec* spec, std::int64_t c) {
    if (!spec) throw std::invalid_argument("null field spec");
    std::int64_t r = c % static_cast<std::int64_t>(spec->p);
    if (r < 0) r += spec->p;
    std::vector<std::uint32_t> v(spec->e, 0);
    v[0] = static_cast<std::uint32_t>(r);
    return FieldElement(spec, std::move(v));
}

FieldElement FieldElement::generator(const FieldSpec* spec) {
    if (!spec) throw std::invalid_argument("null field spec");
    if (spec->e == 1) return zero(spec);  // g == 0 in the prime field
    std::vector<std::uint32_t> v(spec->e, 0);
    v[1] = 1;
    return FieldElement(spec, std::move(v));
}

bool FieldElement::is_zero() const {
    if (!spec_) return true;
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool FieldElement::is_one() const {
    if (!spec_) return false;
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

namespace {

// Resolve the spec of a binary operation, allowing the universal zero.
const FieldSpec* join_spec(const FieldElement& a, const FieldElement& b) {
    if (a.spec() && b.spec()) {
        if (a.spec() != b.spec())
            throw std::invalid_argument("field mismatch: embed elements explicitly");
        return a.spec();
    }
    return a.spec() ? a.spec() : b.spec();
}

}  // namespace

FieldElement FieldElement::operator-() const {
    if (!spec_) return FieldElement();
    std::vector<std::uint32_t> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = (spec_->p - c_[i]) % spec_->p;
    return FieldElement(spec_, std::move(v));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const FieldSpec* s = join_spec(a, b);
    if (!s) return FieldElement();
    if (!a.spec_) return b;
    if (!b.spec_) return a;
    std::vector<std::uint32_t> v(s->e);
    for (std::uint32_t i = 0; i < s->e; ++i) v[i] = (a.c_[i] + b.c_[i]) % s->p;
    return FieldElement(s, std::move(v));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const FieldSpec* s = join_spec(a, b);
    if (!s || !a.spec_ || !b.spec_) return FieldElement();
    const std::uint32_t p = s->p, e = s->e;
    if (e == 1) {
        std::vector<std::uint32_t> v{
            static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.c_[0]) * b.c_[0] % p)};
        return FieldElement(s, std::move(v));
    }
    std::vector<std::uint64_t> acc(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::uint32_t j = 0; j < e; ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % p;
    }
    for (std::uint32_t k = 2 * e - 2; k >= e; --k) {
        const std::uint64_t c = acc[k] % p;
        if (c) {
            acc[k] = 0;
            for (std::uint32_t i = 0; i < e; ++i) {
                const std::uint64_t sub = c * s->modulus[i] % p;
                acc[k - e + i] = (acc[k - e + i] + p - sub) % p;
            }
        }
        if (k == e) break;
    }
    std::vector<std::uint32_t> v(e);
    for (std::uint32_t i = 0; i < e; ++i) v[i] = static_cast<std::uint32_t>(acc[i] % p);
    return FieldElement(s, std::move(v));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    const std::uint32_t p = spec_->p;
    if (spec_->e == 1) return FieldElement(spec_, {zp_inv_scalar(c_[0], p)});
    ZpPoly mod(spec_->modulus.begin(), spec_->modulus.end());
    mod.push_back(1);
    ZpPoly r0 = mod, r1(c_.begin(), c_.end());
    zp_trim(r1);
    ZpPoly t0{}, t1{1};
    while (r1.size() > 1) {
        ZpPoly q, rem;
        zp_divmod(r0, r1, p, q, rem);
        ZpPoly qt = zp_mul(q, t1, p);
        ZpPoly nt = t0;
        if (nt.size() < qt.size()) nt.resize(qt.size(), 0);
        for (std::size_t i = 0; i < qt.size(); ++i)
            nt[i] = static_cast<std::uint32_t>((nt[i] + p - qt[i]) % p);
        zp_trim(nt);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r1.empty()) throw InternalConsistencyError("modulus not irreducible");
    const std::uint32_t scale = zp_inv_scalar(r1[0], p);
    std::vector<std::uint32_t> v(spec_->e, 0);
    for (std::size_t i = 0; i < t1.size() && i < v.size(); ++i)
        v[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t1[i]) * scale % p);
    return FieldElement(spec_, std::move(v));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement exact_div(const FieldElement& a, const FieldElement& b) { return a / b; }

FieldElement FieldElement::pow(std::uint64_t n) const {
    if (!spec_) {
        if (n == 0) throw std::invalid_argument("0^0 of the universal zero");
        return FieldElement();
    }
    FieldElement result = one(spec_);
    FieldElement base = *this;
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

FieldElement FieldElement::pow_p(std::uint32_t k) const {
    if (!spec_) return FieldElement();
    FieldElement r = *this;
    for (std::uint32_t i = 0; i < k; ++i) r = r.pow(spec_->p);
    return r;
}

FieldElement FieldElement::pth_root() const {
    if (!spec_) return FieldElement();
    return pow_p(spec_->e == 1 ? 0 : spec_->e - 1);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.spec_ || !b.spec_) return a.is_zero() && b.is_zero();
    if (a.spec_ != b.spec_) return false;
    return a.c_ == b.c_;
}

std::uint64_t FieldElement::encoding() const {
    if (!spec_) return 0;
    std::uint64_t v = 0;
    for (std::size_t i = c_.size(); i > 0; --i) v = v * spec_->p + c_[i - 1];
    return v;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
    const std::uint32_t la = a.spec_ ? a.spec_->e : 0;
    const std::uint32_t lb = b.spec_ ? b.spec_->e : 0;
    if (la != lb) return la < lb;
    return a.encoding() < b.encoding();
}

bool FieldElement::in_subfield(std::uint32_t k) const {
    if (!spec_) return true;
    return pow_p(k) == *this;
}

std::uint32_t FieldElement::minimal_level() const {
    if (!spec_) return 1;
    for (std::uint32_t k = 1; k < spec_->e; ++k)
        if (spec_->e % k == 0 && in_subfield(k)) return k;
    return spec_->e;
}

std::string FieldElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c_[i];
        } else {
            if (c_[i] != 1) os << c_[i] << "*";
            os << "g";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

const FieldSpec* common_field(const FieldSpec* a, const FieldSpec* b) {
    if (!a) return b;
    if (!b) return a;
    if (a->p != b->p) throw std::invalid_argument("mixed characteristics");
    return FieldTable::get(a->p, std::lcm(a->e, b->e));
}

void coerce_pair(FieldElement& a, FieldElement& b) {
    if (!a.spec() || !b.spec() || a.spec() == b.spec()) return;
    const FieldSpec* c = common_field(a.spec(), b.spec());
    a = ff_embed_to(a, c);
    b = ff_embed_to(b, c);
}

}  // namespace gscope
