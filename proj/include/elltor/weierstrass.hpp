#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "elltor/field_concepts.hpp"
#include "elltor/errors.hpp"

namespace elltor::curves {

using algebra::FieldLike;

// b-, c-, delta- and j-invariants of a long Weierstrass equation; all come
// from the universal integer-coefficient formulas, so they are valid in
// every characteristic.
template <FieldLike F>
struct CurveInvariants {
    typename F::Element b2, b4, b6, b8, c4, c6, delta, j;
};

template <FieldLike F>
struct CurvePoint {
    bool infinity;
    typename F::Element x;
    typename F::Element y;

    static CurvePoint at_infinity(const F& f) {
        return CurvePoint{true, f.zero(), f.zero()};
    }
    static CurvePoint affine(typename F::Element px, typename F::Element py) {
        return CurvePoint{false, std::move(px), std::move(py)};
    }
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over an arbitrary field.
// Construction rejects singular equations (delta = 0).
template <FieldLike F>
class WeierstrassCurve {
  public:
    using Elem = typename F::Element;
    using Point = CurvePoint<F>;

    WeierstrassCurve(F field, Elem a1, Elem a2, Elem a3, Elem a4, Elem a6)
        : f_(std::move(field)),
          a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)),
          a4_(std::move(a4)), a6_(std::move(a6)),
          inv_(make_invariants(f_, a1_, a2_, a3_, a4_, a6_)) {}

    const F& field() const { return f_; }
    const Elem& a1() const { return a1_; }
    const Elem& a2() const { return a2_; }
    const Elem& a3() const { return a3_; }
    const Elem& a4() const { return a4_; }
    const Elem& a6() const { return a6_; }
    const CurveInvariants<F>& invariants() const { return inv_; }

    Point infinity() const { return Point::at_infinity(f_); }

    bool on_curve(const Point& pt) const {
        if (pt.infinity) return true;
        const auto& x = pt.x;
        const auto& y = pt.y;
        Elem lhs = f_.add(f_.mul(y, y),
                          f_.add(f_.mul(a1_, f_.mul(x, y)), f_.mul(a3_, y)));
        Elem x2 = f_.mul(x, x);
        Elem rhs = f_.add(f_.mul(x2, x),
                          f_.add(f_.mul(a2_, x2), f_.add(f_.mul(a4_, x), a6_)));
        return f_.eq(lhs, rhs);
    }

    Point negate(const Point& pt) const {
        if (pt.infinity) return pt;
        // -(x, y) = (x, -y - a1 x - a3)
        Elem ny = f_.neg(f_.add(pt.y, f_.add(f_.mul(a1_, pt.x), a3_)));
        return Point::affine(pt.x, std::move(ny));
    }

    // Chord-tangent addition; inputs checked against the curve equation.
    Point add(const Point& p, const Point& q) const {
        require_on_curve(p);
        require_on_curve(q);
        return add_unchecked(p, q);
    }

    Point add_unchecked(const Point& p, const Point& q) const {
        if (p.infinity) return q;
        if (q.infinity) return p;
        if (f_.eq(p.x, q.x)) {
            // Same x: either inverse points or a doubling.
            Elem neg_y = f_.neg(f_.add(q.y, f_.add(f_.mul(a1_, q.x), a3_)));
            if (f_.eq(p.y, neg_y)) return infinity();
            return double_unchecked(p);
        }
        Elem dx = f_.sub(q.x, p.x);
        Elem lambda = f_.div(f_.sub(q.y, p.y), dx);
        Elem nu = f_.div(f_.sub(f_.mul(p.y, q.x), f_.mul(q.y, p.x)), dx);
        return chord_result(lambda, nu, p.x, q.x);
    }

    Point double_unchecked(const Point& p) const {
        if (p.infinity) return p;
        // lambda = (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3); a zero
        // denominator means a 2-torsion point.
        Elem den = f_.add(f_.add(p.y, p.y), f_.add(f_.mul(a1_, p.x), a3_));
        if (f_.is_zero(den)) return infinity();
        Elem x2 = f_.mul(p.x, p.x);
        Elem num = f_.sub(
            f_.add(f_.add(f_.add(x2, x2), f_.add(x2, f_.mul(f_.add(a2_, a2_), p.x))),
                   a4_),
            f_.mul(a1_, p.y));
        Elem lambda = f_.div(num, den);
        // nu = (-x^3 + a4 x + 2 a6 - a3 y) / den
        Elem nu_num = f_.sub(f_.add(f_.sub(f_.mul(a4_, p.x), f_.mul(x2, p.x)),
                                    f_.add(a6_, a6_)),
                             f_.mul(a3_, p.y));
        Elem nu = f_.div(nu_num, den);
        return chord_result(lambda, nu, p.x, p.x);
    }

    Point scalar_mul(uint64_t n, const Point& p) const {
        require_on_curve(p);
        return scalar_mul_unchecked(n, p);
    }

    Point scalar_mul_unchecked(uint64_t n, const Point& p) const {
        Point acc = infinity();
        Point base = p;
        while (n > 0) {
            if (n & 1) acc = add_unchecked(acc, base);
            base = add_unchecked(base, base);
            n >>= 1;
        }
        return acc;
    }

    // Least n >= 1 with [n]P = infinity, or nullopt if none up to `bound`.
    std::optional<int64_t> point_order(const Point& p, int64_t bound) const {
        if (bound > 10000)
            fail(ErrorCode::OutOfDeskScale, "point_order bound exceeds 10^4");
        require_on_curve(p);
        Point acc = p;
        for (int64_t n = 1; n <= bound; ++n) {
            if (acc.infinity) return n;
            acc = add_unchecked(acc, p);
        }
        return std::nullopt;
    }

  private:
    void require_on_curve(const Point& p) const {
        if (!on_curve(p)) fail(ErrorCode::PointNotOnCurve, "point not on curve");
    }

    Point chord_result(const Elem& lambda, const Elem& nu, const Elem& x1,
                       const Elem& x2) const {
        Elem x3 = f_.sub(f_.sub(f_.add(f_.mul(lambda, lambda), f_.mul(a1_, lambda)),
                                a2_),
                         f_.add(x1, x2));
        Elem y3 = f_.neg(f_.add(f_.add(f_.mul(f_.add(lambda, a1_), x3), nu), a3_));
        return Point::affine(std::move(x3), std::move(y3));
    }

    static CurveInvariants<F> make_invariants(const F& f, const Elem& a1,
                                              const Elem& a2, const Elem& a3,
                                              const Elem& a4, const Elem& a6) {
        auto i = [&](int64_t v) { return f.from_int(v); };
        Elem a1a3 = f.mul(a1, a3);
        Elem a1sq = f.mul(a1, a1);
        Elem a3sq = f.mul(a3, a3);
        Elem b2 = f.add(a1sq, f.mul(i(4), a2));
        Elem b4 = f.add(f.mul(i(2), a4), a1a3);
        Elem b6 = f.add(a3sq, f.mul(i(4), a6));
        Elem b8 = f.sub(
            f.add(f.add(f.mul(a1sq, a6), f.mul(i(4), f.mul(a2, a6))),
                  f.mul(a2, a3sq)),
            f.add(f.mul(a1a3, a4), f.mul(a4, a4)));
        Elem b2sq = f.mul(b2, b2);
        Elem c4 = f.sub(b2sq, f.mul(i(24), b4));
        Elem c6 = f.sub(f.mul(i(36), f.mul(b2, b4)),
                        f.add(f.mul(b2sq, b2), f.mul(i(216), b6)));
        // delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
        Elem b4cu = f.mul(b4, f.mul(b4, b4));
        Elem delta = f.sub(
            f.mul(i(9), f.mul(b2, f.mul(b4, b6))),
            f.add(f.add(f.mul(b2sq, b8), f.mul(i(8), b4cu)),
                  f.mul(i(27), f.mul(b6, b6))));
        if (f.is_zero(delta))
            fail(ErrorCode::SingularCurve, "curve has zero discriminant");
        Elem j = f.div(f.mul(c4, f.mul(c4, c4)), delta);
        return CurveInvariants<F>{std::move(b2), std::move(b4), std::move(b6),
                                  std::move(b8), std::move(c4), std::move(c6),
                                  std::move(delta), std::move(j)};
    }

    F f_;
    Elem a1_, a2_, a3_, a4_, a6_;
    CurveInvariants<F> inv_;
};

} // namespace elltor::curves
