#pragma once

#include <string>
#include <utility>

#include "elltor/polynomial.hpp"

namespace elltor::algebra {

// Elements of k(t): fractions of polynomials kept in the unique canonical
// form gcd(num, den) = 1 with monic den, so equality is componentwise.
// Normalization happens in every constructor, never lazily.
template <FieldLike F>
struct RationalFunction {
    Polynomial<F> num;
    Polynomial<F> den;

    RationalFunction(Polynomial<F> n, Polynomial<F> d)
        : num(std::move(n)), den(std::move(d)) {
        normalize();
    }

    explicit RationalFunction(Polynomial<F> n)
        : num(std::move(n)), den(Polynomial<F>::from_int(num.field(), 1)) {}

    const F& coeff_field() const { return num.field(); }

    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.is_constant() && den.is_constant(); }

    std::string to_string(const std::string& var = "t") const {
        if (den.degree() == 0) return num.to_string(var);
        return "(" + num.to_string(var) + ")/(" + den.to_string(var) + ")";
    }

  private:
    void normalize() {
        if (den.is_zero())
            fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
        if (num.is_zero()) {
            den = Polynomial<F>::from_int(num.field(), 1);
            return;
        }
        Polynomial<F> g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num.divrem(g).first;
            den = den.divrem(g).first;
        }
        auto lead_inv = num.field().inv(den.lead());
        num = num.scale(lead_inv);
        den = den.scale(lead_inv);
    }
};

// The field k(t) itself, in the common field-object shape.
template <FieldLike F>
class RationalFunctionField {
  public:
    using Element = RationalFunction<F>;

    explicit RationalFunctionField(F coeff_field) : cf_(std::move(coeff_field)) {}

    const F& coeff_field() const { return cf_; }
    int64_t characteristic() const { return cf_.characteristic(); }

    Element zero() const { return Element(Polynomial<F>(cf_)); }
    Element one() const { return from_int(1); }
    Element from_int(int64_t v) const {
        return Element(Polynomial<F>::from_int(cf_, v));
    }
    Element from_poly(Polynomial<F> p) const { return Element(std::move(p)); }
    Element variable() const { return Element(Polynomial<F>::variable(cf_)); }

    Element add(const Element& a, const Element& b) const {
        return Element(a.num.mul(b.den).add(b.num.mul(a.den)), a.den.mul(b.den));
    }
    Element sub(const Element& a, const Element& b) const {
        return Element(a.num.mul(b.den).sub(b.num.mul(a.den)), a.den.mul(b.den));
    }
    Element mul(const Element& a, const Element& b) const {
        return Element(a.num.mul(b.num), a.den.mul(b.den));
    }
    Element neg(const Element& a) const { return Element(a.num.neg(), a.den); }
    Element inv(const Element& a) const {
        if (a.is_zero())
            fail(ErrorCode::DivisionByZero, "inverse of 0 in rational function field");
        return Element(a.den, a.num);
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    Element pow(const Element& a, uint64_t e) const {
        Element acc = one();
        Element base = a;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    bool eq(const Element& a, const Element& b) const {
        return a.num.eq(b.num) && a.den.eq(b.den);
    }
    bool is_zero(const Element& a) const { return a.is_zero(); }

    std::string to_string(const Element& a) const { return a.to_string(); }
    bool same_field(const RationalFunctionField& other) const {
        return cf_.same_field(other.cf_);
    }

  private:
    F cf_;
};

} // namespace elltor::algebra
