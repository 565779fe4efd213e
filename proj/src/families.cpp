#include "elltor/families.hpp"

#include "elltor/numutil.hpp"

namespace elltor::families {

using namespace elltor::algebra;
using namespace elltor::curves;

SevenCurve build_seven(int64_t p, const RF& f) {
    if (p == 7) fail(ErrorCode::CharSeven, "the order-7 family needs characteristic != 7");
    RFField k{PrimeField(p)};
    if (!f.coeff_field().same_field(k.coeff_field()))
        fail(ErrorCode::FieldMismatch, "f defined over the wrong prime field");
    if (f.is_constant())
        fail(ErrorCode::PrecondViolation, "f must be a non-constant rational function");
    RF fm1 = k.sub(f, k.one());
    RF b = k.mul(k.mul(f, f), fm1);       // f^2 (f - 1)
    RF a1 = k.sub(k.one(), k.mul(f, fm1)); // 1 - f(f-1)
    try {
        return SevenCurve(k, a1, k.neg(b), k.neg(b), k.zero(), k.zero());
    } catch (const Error& err) {
        if (err.code() == ErrorCode::SingularCurve)
            fail(ErrorCode::SingularFamilyMember,
                 "f gives a singular member (delta_f = 0)");
        throw;
    }
}

SevenReport verify_seven(int64_t p, const RF& f) {
    SevenCurve e = build_seven(p, f);
    const RFField& k = e.field();
    const auto& iv = e.invariants();

    // Closed forms composed with f, evaluated by plain field arithmetic.
    auto ipow = [&](const RF& x, int n) {
        return k.pow(x, static_cast<uint64_t>(n));
    };
    auto i = [&](int64_t v) { return k.from_int(v); };
    RF fm1 = k.sub(f, k.one());
    RF cubic = k.add(
        k.add(k.sub(ipow(f, 3), k.mul(i(8), k.mul(f, f))), k.mul(i(5), f)),
        k.one()); // f^3 - 8f^2 + 5f + 1
    RF delta_closed = k.mul(k.mul(ipow(f, 7), ipow(fm1, 7)), cubic);

    RF quad = k.add(k.sub(k.mul(f, f), f), k.one()); // f^2 - f + 1
    RF sextic = k.add(
        k.add(k.sub(k.add(k.sub(ipow(f, 6), k.mul(i(11), ipow(f, 5))),
                          k.mul(i(30), ipow(f, 4))),
                    k.add(k.mul(i(15), ipow(f, 3)), k.mul(i(10), k.mul(f, f)))),
              k.mul(i(5), f)),
        k.one()); // f^6 - 11f^5 + 30f^4 - 15f^3 - 10f^2 + 5f + 1
    RF c4_closed = k.mul(quad, sextic);

    SevenReport r;
    r.delta_matches = k.eq(iv.delta, delta_closed);
    r.c4_matches = k.eq(iv.c4, c4_closed);
    r.j_nonconstant = !is_constant(iv.j);
    r.delta = iv.delta.to_string();
    r.c4 = iv.c4.to_string();
    auto origin = SevenCurve::Point::affine(k.zero(), k.zero());
    r.order = e.point_order(origin, 20);
    return r;
}

ElevenCurve build_eleven(int64_t p, int64_t n) {
    if (p == 11) fail(ErrorCode::CharEleven, "the order-11 family needs characteristic != 11");
    if (n < 0) fail(ErrorCode::PrecondViolation, "n must be >= 0");
    PrimeField check(p); // validates primality
    int64_t pn = 1;
    for (int64_t i = 0; i < n; ++i) {
        pn = checked_mul(pn, p);
        if (pn > kElevenExponentGuard)
            fail(ErrorCode::ExponentGuard, "p^n exceeds the Frobenius-twist guard");
    }
    QuadExtField k(p);
    auto t = k.t();
    auto u = k.u();
    auto r = k.add(k.mul(u, t), k.one());  // r = ut + 1
    auto s = k.sub(k.one(), t);            // s = -t + 1
    auto rs = k.mul(r, s);
    auto a1 = k.pow(k.add(k.sub(s, rs), k.one()), static_cast<uint64_t>(pn));
    auto b = k.pow(k.sub(rs, k.mul(r, rs)), static_cast<uint64_t>(pn)); // (rs - r^2 s)^(p^n)
    return ElevenCurve(k, a1, b, b, k.zero(), k.zero());
}

ElevenReport verify_eleven(int64_t p, int64_t n) {
    ElevenCurve e = build_eleven(p, n);
    const QuadExtField& k = e.field();
    ElevenReport r;
    auto origin = ElevenCurve::Point::affine(k.zero(), k.zero());
    r.order = e.point_order(origin, 20);
    r.order_is_11 = r.order.has_value() && *r.order == 11;
    r.j_nonconstant = !is_constant(k, e.invariants().j);
    return r;
}

} // namespace elltor::families
