#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gscope/errors.hpp"

namespace gscope {

// GF(p^e) presented as GF(p)[g]/(modulus). The modulus is the monic
// irreducible of degree e over GF(p) that is smallest in the integer
// encoding sum(c_i p^i) of its non-leading coefficients, so a given (p, e)
// names the same field in every run.
struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    // Non-leading coefficients c_0..c_{e-1} of the monic modulus g^e + sum c_i g^i.
    std::vector<std::uint32_t> modulus;

    std::uint64_t order() const;  // p^e; throws if it would overflow 2^62
    bool operator==(const FieldSpec& o) const { return p == o.p && e == o.e; }
};

class FieldElement;

// Process-wide registry of field specs. Specs are interned: a (p, e) pair
// always yields the same pointer, so elements can compare specs by address.
// Creation is mutex-guarded; lookups of existing specs are lock-free reads
// once `warm` has been called, which scan drivers do before going parallel.
class FieldTable {
  public:
    static const FieldSpec* get(std::uint32_t p, std::uint32_t e);
    // Pre-create GF(p^(e*m)) for all m in [1, max_m] plus their pairwise
    // compositum levels, so parallel sections never allocate specs.
    static void warm(std::uint32_t p, std::uint32_t e, std::uint32_t max_m);
};

// One element of a GF(p^e). A default-constructed element is the canonical
// zero of every field: binary operations adopt the other operand's spec.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(const FieldSpec* spec, std::vector<std::uint32_t> coeffs);
    // The residue c mod p in GF(p^e).
    static FieldElement scalar(const FieldSpec* spec, std::int64_t c);
    static FieldElement zero(const FieldSpec* spec) { return scalar(spec, 0); }
    static FieldElement one(const FieldSpec* spec) { return scalar(spec, 1); }
    // The class of g, the residue of the modulus variable.
    static FieldElement generator(const FieldSpec* spec);

    const FieldSpec* spec() const { return spec_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement inverse() const;  // throws InvalidArgument on zero
    FieldElement pow(std::uint64_t n) const;
    FieldElement frobenius() const { return pow_p(1); }
    FieldElement pow_p(std::uint32_t k) const;  // x -> x^(p^k)
    FieldElement pth_root() const;              // inverse of frobenius

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    // Integer encoding sum(c_i p^i); total order used for canonical output.
    std::uint64_t encoding() const;
    friend bool operator<(const FieldElement& a, const FieldElement& b);

    // True when the element is fixed by Frobenius^k, i.e. lies in GF(p^k).
    bool in_subfield(std::uint32_t k) const;
    // Smallest k dividing e with the element in GF(p^k).
    std::uint32_t minimal_level() const;

    std::string str() const;  // "c0+c1*g+..." grammar

  private:
    const FieldSpec* spec_ = nullptr;  // nullptr encodes the universal zero
    std::vector<std::uint32_t> c_;     // residues mod p, length e

    void reduce_check() const;
};

inline bool is_zero(const FieldElement& a) { return a.is_zero(); }
FieldElement exact_div(const FieldElement& a, const FieldElement& b);

// Ring embedding GF(p^e) -> GF(p^(e*m)), sending g to the smallest root of
// the source modulus in the target (smallest in element encoding). Embeddings
// are cached and compose consistently because the root choice is canonical.
FieldElement ff_embed(const FieldElement& x, std::uint32_t m);
FieldElement ff_embed_to(const FieldElement& x, const FieldSpec* target);

// Partial inverse of ff_embed_to: succeeds exactly when x is in the image.
std::optional<FieldElement> ff_project(const FieldElement& x, const FieldSpec* sub);

// Spec of the compositum GF(p^lcm(a.e, b.e)).
const FieldSpec* common_field(const FieldSpec* a, const FieldSpec* b);
// Coerce both elements into their common field.
void coerce_pair(FieldElement& a, FieldElement& b);

}  // namespace gscope
