#pragma once

#include <cstdint>
#include <string>

#include "elltor/errors.hpp"
#include "elltor/numutil.hpp"

namespace elltor::algebra {

// F_p for a machine-width prime p (p < 2^31 so products fit in int64).
class PrimeField {
  public:
    using Element = int64_t;

    explicit PrimeField(int64_t p);

    int64_t modulus() const { return p_; }
    int64_t characteristic() const { return p_; }
    int64_t order() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(int64_t v) const { return mod_reduce(v, p_); }
    Element element_at(int64_t i) const { return i; }

    Element add(Element a, Element b) const {
        int64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const {
        int64_t s = a - b;
        return s < 0 ? s + p_ : s;
    }
    Element mul(Element a, Element b) const { return a * b % p_; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const {
        if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 in F_p");
        return inv_mod(a, p_);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, uint64_t e) const { return pow_mod(a, e, p_); }

    bool eq(Element a, Element b) const { return a == b; }
    bool is_zero(Element a) const { return a == 0; }

    std::string to_string(Element a) const { return std::to_string(a); }
    bool same_field(const PrimeField& other) const { return p_ == other.p_; }
    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

  private:
    int64_t p_;
};

} // namespace elltor::algebra
