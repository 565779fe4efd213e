#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "elltor/prime_field.hpp"
#include "elltor/rational_function.hpp"

namespace elltor::algebra {

// The function field of the curve u^2 + (t^2+1)u + t = 0 over F_p, i.e. the
// quadratic extension F_p(t)[u] with that fixed relation.  Elements are
// a + b*u with a, b in F_p(t); products reduce via
// u^2 = -(t^2+1)u - t, so the (a, b) representation is unique.
class QuadExtField {
  public:
    using RFField = RationalFunctionField<PrimeField>;
    using RF = RationalFunction<PrimeField>;

    struct Element {
        RF a;
        RF b;
    };

    explicit QuadExtField(int64_t p)
        : rf_(PrimeField(p)),
          rel_lin_(relation_linear(rf_)),
          rel_const_(relation_constant(rf_)) {}

    const RFField& base() const { return rf_; }
    int64_t characteristic() const { return rf_.characteristic(); }

    Element zero() const { return {rf_.zero(), rf_.zero()}; }
    Element one() const { return {rf_.one(), rf_.zero()}; }
    Element from_int(int64_t v) const { return {rf_.from_int(v), rf_.zero()}; }
    Element from_base(RF x) const { return {std::move(x), rf_.zero()}; }
    // The generator u and the rational variable t.
    Element u() const { return {rf_.zero(), rf_.one()}; }
    Element t() const { return {rf_.variable(), rf_.zero()}; }

    Element add(const Element& x, const Element& y) const {
        return {rf_.add(x.a, y.a), rf_.add(x.b, y.b)};
    }
    Element sub(const Element& x, const Element& y) const {
        return {rf_.sub(x.a, y.a), rf_.sub(x.b, y.b)};
    }
    Element neg(const Element& x) const { return {rf_.neg(x.a), rf_.neg(x.b)}; }

    Element mul(const Element& x, const Element& y) const {
        // (a1 + b1 u)(a2 + b2 u) with u^2 = -L u - C, L = t^2+1, C = t.
        RF a1a2 = rf_.mul(x.a, y.a);
        RF b1b2 = rf_.mul(x.b, y.b);
        RF cross = rf_.add(rf_.mul(x.a, y.b), rf_.mul(x.b, y.a));
        return {rf_.sub(a1a2, rf_.mul(b1b2, rel_const_)),
                rf_.sub(cross, rf_.mul(b1b2, rel_lin_))};
    }

    Element inv(const Element& x) const {
        if (is_zero(x)) fail(ErrorCode::DivisionByZero, "inverse of 0 in quadratic extension");
        // conjugate of a + b u is a + b(-L - u); norm = a^2 - a b L + b^2 C.
        RF norm = rf_.add(
            rf_.sub(rf_.mul(x.a, x.a), rf_.mul(rf_.mul(x.a, x.b), rel_lin_)),
            rf_.mul(rf_.mul(x.b, x.b), rel_const_));
        if (rf_.is_zero(norm))
            fail(ErrorCode::DivisionByZero, "zero norm in quadratic extension");
        RF ninv = rf_.inv(norm);
        return {rf_.mul(rf_.sub(x.a, rf_.mul(x.b, rel_lin_)), ninv),
                rf_.mul(rf_.neg(x.b), ninv)};
    }

    Element div(const Element& x, const Element& y) const { return mul(x, inv(y)); }

    Element pow(const Element& x, uint64_t e) const {
        Element acc = one();
        Element base = x;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    bool eq(const Element& x, const Element& y) const {
        return rf_.eq(x.a, y.a) && rf_.eq(x.b, y.b);
    }
    bool is_zero(const Element& x) const {
        return rf_.is_zero(x.a) && rf_.is_zero(x.b);
    }

    std::string to_string(const Element& x) const {
        if (rf_.is_zero(x.b)) return x.a.to_string();
        std::string s = "(" + x.b.to_string() + ")*u";
        if (!rf_.is_zero(x.a)) s = x.a.to_string() + "+" + s;
        return s;
    }

    bool same_field(const QuadExtField& other) const {
        return rf_.same_field(other.rf_);
    }

  private:
    static RF relation_linear(const RFField& rf) {
        // t^2 + 1
        auto t = rf.variable();
        return rf.add(rf.mul(t, t), rf.one());
    }
    static RF relation_constant(const RFField& rf) { return rf.variable(); }

    RFField rf_;
    RF rel_lin_;
    RF rel_const_;
};

// Isotriviality proxy: does the value lie in the constant field k?
inline bool is_constant(const RationalFunction<PrimeField>& x) {
    return x.is_constant();
}
inline bool is_constant(const QuadExtField& f, const QuadExtField::Element& x) {
    return f.base().is_zero(x.b) && x.a.is_constant();
}

} // namespace elltor::algebra
