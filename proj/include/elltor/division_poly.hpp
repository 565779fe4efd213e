#pragma once

#include <vector>

#include "elltor/polynomial.hpp"
#include "elltor/weierstrass.hpp"

namespace elltor::curves {

using algebra::Polynomial;

// psi_n in the standard split form: psi_n = psi_x(x) * psi_2^(n even).
// For odd n, psi_x is psi_n itself, with lead coefficient n mod char and
// degree (n^2-1)/2 when char does not divide n; its roots over the closure
// are exactly the x-coordinates of the nonzero n-torsion.
template <FieldLike F>
struct DivisionPolynomial {
    int n = 0;
    Polynomial<F> psi_x;
    bool has_even_factor = false;
    bool char_divides_n = false;
};

inline constexpr int kMaxDivisionPolyIndex = 13;

// x-parts e_n of the division polynomials, e_0..e_max, via the standard
// recurrence with psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 substituted.
template <FieldLike F>
std::vector<Polynomial<F>> division_poly_x_parts(const WeierstrassCurve<F>& e,
                                                 int max_n) {
    const F& f = e.field();
    const auto& iv = e.invariants();
    auto ints = [&](std::initializer_list<int64_t> vs) {
        return Polynomial<F>::from_ints(f, vs);
    };
    auto cpoly = [&](typename F::Element c) {
        return Polynomial<F>::constant(f, std::move(c));
    };

    // S = psi_2^2 as a polynomial in x.
    Polynomial<F> s =
        ints({0, 0, 0, 4})
            .add(cpoly(iv.b2).mul(ints({0, 0, 1})))
            .add(cpoly(f.add(iv.b4, iv.b4)).mul(ints({0, 1})))
            .add(cpoly(iv.b6));
    Polynomial<F> s2 = s.mul(s);

    std::vector<Polynomial<F>> psi;
    psi.reserve(static_cast<size_t>(max_n) + 1);
    psi.push_back(Polynomial<F>(f));                   // e_0 = 0
    psi.push_back(Polynomial<F>::from_int(f, 1));      // e_1 = 1
    if (max_n >= 2) psi.push_back(Polynomial<F>::from_int(f, 1)); // e_2
    if (max_n >= 3) {
        // psi_3 = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8
        psi.push_back(ints({0, 0, 0, 0, 3})
                          .add(cpoly(iv.b2).mul(ints({0, 0, 0, 1})))
                          .add(cpoly(f.mul(f.from_int(3), iv.b4)).mul(ints({0, 0, 1})))
                          .add(cpoly(f.mul(f.from_int(3), iv.b6)).mul(ints({0, 1})))
                          .add(cpoly(iv.b8)));
    }
    if (max_n >= 4) {
        // psi_4 / psi_2 = 2x^6 + b2 x^5 + 5 b4 x^4 + 10 b6 x^3 + 10 b8 x^2
        //                 + (b2 b8 - b4 b6) x + (b4 b8 - b6^2)
        auto i = [&](int64_t v) { return f.from_int(v); };
        psi.push_back(
            ints({0, 0, 0, 0, 0, 0, 2})
                .add(cpoly(iv.b2).mul(ints({0, 0, 0, 0, 0, 1})))
                .add(cpoly(f.mul(i(5), iv.b4)).mul(ints({0, 0, 0, 0, 1})))
                .add(cpoly(f.mul(i(10), iv.b6)).mul(ints({0, 0, 0, 1})))
                .add(cpoly(f.mul(i(10), iv.b8)).mul(ints({0, 0, 1})))
                .add(cpoly(f.sub(f.mul(iv.b2, iv.b8), f.mul(iv.b4, iv.b6)))
                         .mul(ints({0, 1})))
                .add(cpoly(f.sub(f.mul(iv.b4, iv.b8), f.mul(iv.b6, iv.b6)))));
    }
    for (int n = 5; n <= max_n; ++n) {
        size_t m = static_cast<size_t>(n / 2);
        if (n % 2 == 1) {
            // e_{2m+1}
            Polynomial<F> first = psi[m + 2].mul(psi[m].pow(3));
            Polynomial<F> second = psi[m - 1].mul(psi[m + 1].pow(3));
            if (m % 2 == 0)
                psi.push_back(first.mul(s2).sub(second));
            else
                psi.push_back(first.sub(second.mul(s2)));
        } else {
            // e_{2m} = e_m (e_{m+2} e_{m-1}^2 - e_{m-2} e_{m+1}^2)
            Polynomial<F> inner = psi[m + 2].mul(psi[m - 1].mul(psi[m - 1]))
                                      .sub(psi[m - 2].mul(psi[m + 1].mul(psi[m + 1])));
            psi.push_back(psi[m].mul(inner));
        }
    }
    return psi;
}

template <FieldLike F>
DivisionPolynomial<F> division_poly(const WeierstrassCurve<F>& e, int n) {
    if (n < 1 || n > kMaxDivisionPolyIndex)
        fail(ErrorCode::IndexOutOfRange,
             "division polynomial index must be in 1.." +
                 std::to_string(kMaxDivisionPolyIndex));
    auto parts = division_poly_x_parts(e, n);
    int64_t p = e.field().characteristic();
    return DivisionPolynomial<F>{n, parts[static_cast<size_t>(n)], n % 2 == 0,
                                 p != 0 && n % p == 0};
}

// The 2-division cubic 4x^3 + b2 x^2 + 2 b4 x + b6; its roots are the
// x-coordinates of the nonzero 2-torsion (char != 2).
template <FieldLike F>
Polynomial<F> two_torsion_cubic(const WeierstrassCurve<F>& e) {
    const F& f = e.field();
    const auto& iv = e.invariants();
    return Polynomial<F>(
        f, {iv.b6, f.add(iv.b4, iv.b4), iv.b2, f.from_int(4)});
}

} // namespace elltor::curves
