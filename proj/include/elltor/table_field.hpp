#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "elltor/ext_field.hpp"
#include "elltor/prime_field.hpp"

namespace elltor::curves {

using algebra::ExtField;
using algebra::PrimeField;

// Discrete-log (Zech logarithm) presentation of a finite field with
// q <= 10^6 elements.  Elements are stored as exponents of a fixed
// generator g, with q-1 marking zero, so multiplication and inversion are
// index arithmetic and addition is a single Zech-table lookup.  This is
// the representation every enumeration kernel runs on; the coefficient
// ("packed") form indexes elements by base-p digit vectors, matching
// ExtField::index_of.
class TableField {
  public:
    using Element = uint32_t;

    static constexpr int64_t kMaxOrder = 1000000;

    explicit TableField(const PrimeField& f);
    explicit TableField(const ExtField& f);
    // F_{p^k} with the canonical modulus.
    TableField(int64_t p, int k);

    int64_t order() const { return q_; }
    int64_t characteristic() const { return p_; }
    int extension_degree() const { return k_; }
    // Non-leading coefficients of the modulus (empty when k == 1).
    const std::vector<int64_t>& modulus_coeffs() const { return modulus_; }

    Element zero() const { return zero_mark_; }
    Element one() const { return 0; }
    Element from_int(int64_t v) const;
    Element from_packed(int64_t packed) const {
        return log_[static_cast<size_t>(packed)];
    }
    int64_t to_packed(Element a) const {
        return a == zero_mark_ ? 0 : exp_[a];
    }
    Element element_at(int64_t packed) const { return from_packed(packed); }
    // The class of the defining variable (for k >= 2).
    Element generator_of_base() const { return from_packed(p_); }

    Element add(Element a, Element b) const {
        if (a == zero_mark_) return b;
        if (b == zero_mark_) return a;
        uint32_t d = b >= a ? b - a : b + qm1_ - a;
        uint32_t z = zech_[d];
        if (z == zero_mark_) return zero_mark_;
        uint32_t r = a + z;
        return r >= qm1_ ? r - qm1_ : r;
    }
    Element neg(Element a) const {
        if (a == zero_mark_ || p_ == 2) return a;
        uint32_t r = a + log_neg1_;
        return r >= qm1_ ? r - qm1_ : r;
    }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element mul(Element a, Element b) const {
        if (a == zero_mark_ || b == zero_mark_) return zero_mark_;
        uint32_t r = a + b;
        return r >= qm1_ ? r - qm1_ : r;
    }
    Element inv(Element a) const {
        if (a == zero_mark_)
            fail(ErrorCode::DivisionByZero, "inverse of 0 in table field");
        return a == 0 ? 0 : qm1_ - a;
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, uint64_t e) const {
        if (a == zero_mark_) return e == 0 ? one() : zero_mark_;
        return static_cast<Element>(
            static_cast<uint64_t>(a) % qm1_ * (e % qm1_) % qm1_);
    }

    bool eq(Element a, Element b) const { return a == b; }
    bool is_zero(Element a) const { return a == zero_mark_; }

    // Quadratic character; zero counts as a square.
    bool is_square(Element a) const {
        if (a == zero_mark_ || p_ == 2) return true;
        return (a & 1u) == 0;
    }
    std::optional<Element> sqrt(Element a) const;

    // Absolute trace to F_2 (char 2 only).
    int trace2(Element a) const {
        return __builtin_popcountll(static_cast<uint64_t>(to_packed(a)) & tr_mask_) & 1;
    }
    // Solve z^2 + z = w (char 2); nullopt when the trace obstruction fails.
    std::optional<Element> solve_artin_schreier(Element w) const;

    std::string to_string(Element a) const;
    bool same_field(const TableField& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

  private:
    void build(int64_t p, int k, const std::vector<int64_t>& modulus_nonlead,
               const ExtField* src);
    int64_t packed_add(int64_t a, int64_t b) const;

    int64_t q_ = 0;
    int64_t p_ = 0;
    int k_ = 1;
    uint32_t qm1_ = 0;
    uint32_t zero_mark_ = 0;
    uint32_t log_neg1_ = 0;
    uint64_t tr_mask_ = 0;
    std::vector<int64_t> modulus_;           // non-leading coefficients, size k
    std::vector<uint32_t> exp_;              // index -> packed
    std::vector<uint32_t> log_;              // packed -> index
    std::vector<uint32_t> zech_;             // zech_[d] = log(1 + g^d)
    // char-2 Artin-Schreier solver: pivot rows of the column space of
    // z -> z^2 + z with the column combinations that produce them.
    std::vector<std::pair<uint64_t, uint64_t>> as_pivots_;
};

// Cheap-to-copy view of a TableField satisfying the field concept, so
// curves and polynomials can be parameterized by table fields without
// copying the tables.  The referenced field must outlive the view.
class TableFieldRef {
  public:
    using Element = TableField::Element;

    TableFieldRef(const TableField& f) : f_(&f) {}

    const TableField& table() const { return *f_; }

    int64_t order() const { return f_->order(); }
    int64_t characteristic() const { return f_->characteristic(); }

    Element zero() const { return f_->zero(); }
    Element one() const { return f_->one(); }
    Element from_int(int64_t v) const { return f_->from_int(v); }
    Element element_at(int64_t i) const { return f_->element_at(i); }
    Element add(Element a, Element b) const { return f_->add(a, b); }
    Element sub(Element a, Element b) const { return f_->sub(a, b); }
    Element mul(Element a, Element b) const { return f_->mul(a, b); }
    Element neg(Element a) const { return f_->neg(a); }
    Element inv(Element a) const { return f_->inv(a); }
    Element div(Element a, Element b) const { return f_->div(a, b); }
    Element pow(Element a, uint64_t e) const { return f_->pow(a, e); }
    bool eq(Element a, Element b) const { return a == b; }
    bool is_zero(Element a) const { return f_->is_zero(a); }
    std::string to_string(Element a) const { return f_->to_string(a); }
    bool same_field(const TableFieldRef& other) const {
        return f_->same_field(*other.f_);
    }

  private:
    const TableField* f_;
};

// Shared cache of table fields keyed by (p, k); evicts oldest entries when
// the total table volume passes a fixed budget.
class TableFieldCache {
  public:
    std::shared_ptr<const TableField> get(int64_t p, int k);
    static TableFieldCache& global();

  private:
    struct Entry {
        int64_t p;
        int k;
        std::shared_ptr<const TableField> field;
    };
    std::vector<Entry> entries_;
};

} // namespace elltor::curves
