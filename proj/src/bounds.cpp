#include "elltor/bounds.hpp"

#include <cmath>

#include "elltor/families.hpp"
#include "elltor/numutil.hpp"

namespace elltor::bounds {

using namespace elltor::algebra;

bool rt_admits(int64_t ell, int64_t g) {
    if (ell <= 6) return true;
    return (ell - 6) * (ell - 6) <= 1 + 24 * g;
}

BoundReport rt_bound(int64_t g) {
    if (g < 0) fail(ErrorCode::PrecondViolation, "genus must be >= 0");
    BoundReport r;
    r.g = g;
    r.rt_bound = 6.0 + std::sqrt(1.0 + 24.0 * static_cast<double>(g));
    r.general_bound = 49 * std::max<int64_t>(1, g);
    // Descending prime search from the integer cap 6 + isqrt(1 + 24g) + 1.
    int64_t cap = 6 + isqrt_i64(1 + 24 * g) + 1;
    for (int64_t ell = cap; ell >= 2; --ell) {
        if (is_prime(ell) && rt_admits(ell, g)) {
            r.max_prime = ell;
            break;
        }
    }
    return r;
}

int64_t semistable_threshold(int64_t d) {
    if (d < 1) fail(ErrorCode::PrecondViolation, "dimension must be >= 1");
    return 2 * d + 1;
}

bool sp_order_is_ell_power(int64_t d, int64_t ell) {
    if (d < 1 || d > 5) fail(ErrorCode::PrecondViolation, "sp_order requires 1 <= d <= 5");
    if (ell > 50 || !is_prime(ell))
        fail(ErrorCode::PrecondViolation, "sp_order requires prime ell <= 50");
    // Each factor ell^(2i) - 1 is congruent to -1 mod ell, hence entirely
    // prime to ell; the prime-to-ell part is 1 only if every factor is 1.
    for (int64_t i = 1; i <= d; ++i) {
        int64_t factor = checked_pow(ell, static_cast<int>(2 * i)) - 1;
        while (factor % ell == 0) factor /= ell; // never triggers; kept literal
        if (factor != 1) return false;
    }
    return true;
}

SpOrder sp_order(int64_t d, int64_t ell) {
    SpOrder r;
    r.d = d;
    r.ell = ell;
    r.is_ell_power = sp_order_is_ell_power(d, ell);
    int64_t acc = checked_pow(ell, static_cast<int>(d * d));
    for (int64_t i = 1; i <= d; ++i)
        acc = checked_mul(acc, checked_pow(ell, static_cast<int>(2 * i)) - 1);
    r.order = acc;
    return r;
}

SharpnessWitness sharpness_witness(int64_t g) {
    SharpnessWitness w;
    w.genus = g;
    if (g == 0) {
        w.ell = 7;
        RationalFunctionField<PrimeField> k{PrimeField(5)};
        auto rep = families::verify_seven(5, k.variable());
        w.order = rep.order.value_or(0);
        w.verified = rep.delta_matches && rep.c4_matches && rep.j_nonconstant &&
                     w.order == 7;
        w.description =
            "y^2+(1-t(t-1))xy-t^2(t-1)y=x^3-t^2(t-1)x^2 over F_5(t), (0,0) of order 7";
        return w;
    }
    if (g == 1) {
        w.ell = 11;
        auto rep = families::verify_eleven(3, 0);
        w.order = rep.order.value_or(0);
        w.verified = rep.order_is_11 && rep.j_nonconstant;
        w.description =
            "y^2+(s-rs+1)xy+(rs-r^2s)y=x^3+(rs-r^2s)x^2 over F_3(X_1(11)), (0,0) of order 11";
        return w;
    }
    fail(ErrorCode::UnsupportedGenus, "sharpness witnesses exist for genus 0 and 1 only");
}

} // namespace elltor::bounds
