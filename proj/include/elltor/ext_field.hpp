#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "elltor/polynomial.hpp"
#include "elltor/prime_field.hpp"

namespace elltor::algebra {

// F_{p^k} presented as F_p[x] / (m(x)) for the canonical modulus: the first
// monic irreducible of degree k when non-leading coefficient vectors
// (c_0, ..., c_{k-1}) are enumerated in ascending lexicographic order,
// comparing from the constant coefficient up, each coefficient as an
// integer in 0..p-1.
//
// Elements are reduced coefficient vectors of fixed length k (low-to-high).
class ExtField {
  public:
    using Element = std::vector<int64_t>;

    // Canonical modulus of degree k.
    ExtField(int64_t p, int k);
    // Explicit monic irreducible modulus (checked).
    ExtField(const PrimeField& base, Polynomial<PrimeField> modulus);

    const PrimeField& base() const { return impl_->base; }
    const Polynomial<PrimeField>& modulus_poly() const { return impl_->modulus; }
    int extension_degree() const { return impl_->k; }

    int64_t characteristic() const { return impl_->base.modulus(); }
    int64_t order() const { return impl_->q; }

    Element zero() const { return Element(static_cast<size_t>(impl_->k), 0); }
    Element one() const { return from_int(1); }
    Element from_int(int64_t v) const;
    // Reduced coefficient vector (length <= k) into a field element.
    Element from_coeffs(const std::vector<int64_t>& c) const;
    // Mixed-radix index (base-p digits low-to-high) into an element.
    Element element_at(int64_t i) const;
    int64_t index_of(const Element& a) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    Element pow(const Element& a, uint64_t e) const;

    bool eq(const Element& a, const Element& b) const { return a == b; }
    bool is_zero(const Element& a) const;

    std::string to_string(const Element& a) const;
    bool same_field(const ExtField& other) const;
    bool operator==(const ExtField& other) const { return same_field(other); }

    // True iff m is irreducible over F_p (Rabin's test).
    static bool is_irreducible(const Polynomial<PrimeField>& m);
    static Polynomial<PrimeField> canonical_modulus(const PrimeField& base, int k);

  private:
    struct Impl {
        PrimeField base;
        Polynomial<PrimeField> modulus;
        int k;
        int64_t q;
    };
    std::shared_ptr<const Impl> impl_;

    Polynomial<PrimeField> to_poly(const Element& a) const;
    Element from_poly(const Polynomial<PrimeField>& f) const;
};

} // namespace elltor::algebra
