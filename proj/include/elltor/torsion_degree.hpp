#pragma once

#include <cstdint>
#include <numeric>
#include <optional>

#include "elltor/division_poly.hpp"
#include "elltor/enumerate.hpp"
#include "elltor/frobenius.hpp"
#include "elltor/numutil.hpp"

namespace elltor::proell {

using algebra::ExtField;
using algebra::FieldLike;
using algebra::PrimeField;
using algebra::Polynomial;
using curves::WeierstrassCurve;

enum class DegreeMethod { RootOrders, ScalarDisambiguated, EnumerationOracle };

const char* degree_method_name(DegreeMethod m);

struct TorsionDegree {
    int64_t m = 0;
    DegreeMethod method = DegreeMethod::RootOrders;
};

// Full decision trail of the pro-ell membership criterion: f = [F_q(mu_ell):F_q],
// m = [F_q(E[ell]):F_q], verdict <=> m/f is a power of ell (including 1).
struct MembershipReport {
    int64_t ell = 0;
    int64_t f = 0;
    int64_t m = 0;
    int64_t ratio = 0;
    bool verdict = false;
    DegreeMethod method = DegreeMethod::RootOrders;
};

namespace detail {

inline constexpr int64_t kMaxTorsionEll = 13;
inline constexpr int64_t kMaxTorsionQ = 10000;

inline int64_t field_order(const PrimeField& f) { return f.order(); }
inline int64_t field_order(const ExtField& f) { return f.order(); }
inline int field_ext_degree(const PrimeField&) { return 1; }
inline int field_ext_degree(const ExtField& f) { return f.extension_degree(); }

// Multiplicative order of the class of x in F_ell[x]/(x^2 - a x + q)^*,
// for an irreducible characteristic polynomial.
int64_t frobenius_order_in_ell2(int64_t a, int64_t q, int64_t ell);

// Square root mod a small prime by direct search; nullopt for non-residues.
std::optional<int64_t> sqrt_mod_small(int64_t a, int64_t ell);

// Elements of the residue ring F[x, y] / (curve equation, modulus(x)),
// written as A(x) + B(x) y with y^2 reduced via the curve equation.
template <FieldLike F>
struct TorsionRing {
    const WeierstrassCurve<F>* e;
    Polynomial<F> modulus;
    Polynomial<F> fx; // x^3 + a2 x^2 + a4 x + a6
    Polynomial<F> cx; // a1 x + a3

    struct Elem {
        Polynomial<F> a;
        Polynomial<F> b;
    };

    explicit TorsionRing(const WeierstrassCurve<F>& curve, Polynomial<F> mod_poly)
        : e(&curve), modulus(std::move(mod_poly)),
          fx(Polynomial<F>(curve.field())), cx(Polynomial<F>(curve.field())) {
        const F& f = curve.field();
        fx = Polynomial<F>(
            f, {curve.a6(), curve.a4(), curve.a2(), f.one()});
        cx = Polynomial<F>(f, {curve.a3(), curve.a1()});
        fx = fx.mod(modulus);
        cx = cx.mod(modulus);
    }

    Elem x_elem() const {
        return {Polynomial<F>::variable(e->field()).mod(modulus),
                Polynomial<F>(e->field())};
    }
    Elem y_elem() const {
        return {Polynomial<F>(e->field()),
                Polynomial<F>::from_int(e->field(), 1)};
    }

    Elem mul(const Elem& u, const Elem& v) const {
        // (A1 + B1 y)(A2 + B2 y), y^2 = fx - cx y
        Polynomial<F> bb = u.b.mul(v.b).mod(modulus);
        Polynomial<F> a = u.a.mul(v.a).add(bb.mul(fx)).mod(modulus);
        Polynomial<F> b =
            u.a.mul(v.b).add(u.b.mul(v.a)).sub(bb.mul(cx)).mod(modulus);
        return {std::move(a), std::move(b)};
    }

    Elem pow(Elem base, uint64_t n) const {
        Elem acc{Polynomial<F>::from_int(e->field(), 1), Polynomial<F>(e->field())};
        while (n > 0) {
            if (n & 1) acc = mul(acc, base);
            base = mul(base, base);
            n >>= 1;
        }
        return acc;
    }

    bool eq(const Elem& u, const Elem& v) const {
        return u.a.eq(v.a) && u.b.eq(v.b);
    }
};

// Does Frobenius^j fix E[ell] pointwise?  Decided by the identities
// x^(q^j) = x and y^(q^j) = y in the ell-torsion residue ring (for ell = 2,
// in F_q[x]/(2-division cubic); the y-coordinate of a 2-torsion point is
// determined by x when char != 2).
template <FieldLike F>
bool frobenius_power_fixes_torsion(const WeierstrassCurve<F>& e, int64_t ell,
                                   int64_t j) {
    const F& f = e.field();
    uint64_t q = static_cast<uint64_t>(field_order(f));
    if (ell == 2) {
        Polynomial<F> cubic = curves::two_torsion_cubic(e);
        Polynomial<F> x = Polynomial<F>::variable(f).mod(cubic);
        Polynomial<F> cur = x;
        for (int64_t i = 0; i < j; ++i) cur = cur.powmod(q, cubic);
        return cur.eq(x);
    }
    auto psi = curves::division_poly(e, static_cast<int>(ell));
    TorsionRing<F> ring(e, psi.psi_x);
    auto x = ring.x_elem();
    auto y = ring.y_elem();
    auto xc = x;
    auto yc = y;
    for (int64_t i = 0; i < j; ++i) {
        xc = ring.pow(xc, q);
        yc = ring.pow(yc, q);
    }
    return ring.eq(xc, x) && ring.eq(yc, y);
}

} // namespace detail

// True iff v = ell^j for some j >= 0.
bool is_power_of(int64_t v, int64_t ell);

template <FieldLike F>
std::optional<int64_t> torsion_degree_enumeration_oracle(
    const WeierstrassCurve<F>& e, int64_t ell,
    int64_t max_order = curves::TableField::kMaxOrder,
    bool use_weil_filter = true);

// [F_q(E[ell]) : F_q]: the order of the Frobenius matrix acting on E[ell],
// computed from the factorization of x^2 - a x + q mod ell.  Distinct
// eigenvalues give lcm of their orders; an irreducible factor gives the
// order of a root in F_{ell^2}; a repeated eigenvalue lambda needs the
// torsion-ring scalar test to tell ord(lambda) from ell*ord(lambda).
template <FieldLike F>
TorsionDegree torsion_field_degree(const WeierstrassCurve<F>& e, int64_t ell) {
    using namespace detail;
    const F& f = e.field();
    int64_t q = field_order(f);
    if (q > kMaxTorsionQ)
        fail(ErrorCode::OutOfDeskScale, "torsion_field_degree requires q <= 10^4");
    if (ell < 2 || ell > kMaxTorsionEll || !algebra::is_prime(ell))
        fail(ErrorCode::OutOfDeskScale, "torsion_field_degree requires prime ell <= 13");
    if (f.characteristic() == ell)
        fail(ErrorCode::EllEqualsChar, "ell equals the field characteristic");

    int64_t a = frobenius_data(e).a;
    int64_t am = algebra::mod_reduce(a, ell);
    int64_t qm = algebra::mod_reduce(q, ell);

    if (ell == 2) {
        // x^2 + a x + 1 over F_2: irreducible when a is odd (root of order 3
        // in F_4), otherwise (x+1)^2 with the scalar test at lambda = 1.
        if (am == 1) return {frobenius_order_in_ell2(a, q, 2), DegreeMethod::RootOrders};
        bool fixes = frobenius_power_fixes_torsion(e, 2, 1);
        return {fixes ? 1 : 2, DegreeMethod::ScalarDisambiguated};
    }

    int64_t disc = algebra::mod_reduce(am * am - 4 * qm, ell);
    if (disc != 0) {
        auto s = sqrt_mod_small(disc, ell);
        if (s.has_value()) {
            int64_t inv2 = algebra::inv_mod(2, ell);
            int64_t lam = algebra::mod_reduce((am + *s) * inv2, ell);
            int64_t mu = algebra::mod_reduce((am - *s) * inv2, ell);
            int64_t o1 = algebra::order_from_exponent(lam, ell, ell - 1);
            int64_t o2 = algebra::order_from_exponent(mu, ell, ell - 1);
            return {std::lcm(o1, o2), DegreeMethod::RootOrders};
        }
        return {frobenius_order_in_ell2(a, q, ell), DegreeMethod::RootOrders};
    }
    int64_t lam = algebra::mod_reduce(am * algebra::inv_mod(2, ell), ell);
    int64_t d = algebra::order_from_exponent(lam, ell, ell - 1);
    try {
        bool fixes = frobenius_power_fixes_torsion(e, ell, d);
        return {fixes ? d : ell * d, DegreeMethod::ScalarDisambiguated};
    } catch (const Error&) {
        // Fallback ordering: torsion-ring test first, enumeration oracle
        // second, and a hard error if both exceed their guards.
        auto m = torsion_degree_enumeration_oracle(e, ell);
        if (m.has_value()) return {*m, DegreeMethod::EnumerationOracle};
        fail(ErrorCode::OutOfDeskScale,
             "both the torsion-ring test and the enumeration oracle exceeded guards");
    }
}

// Enumeration oracle: least m with full ell-torsion in E(F_{q^m}), found by
// counting points killed by ell over the enumerated point set.  Scans stop
// once q^m exceeds `max_order`.  When `use_weil_filter` is set, degrees m
// with ell not dividing q^m - 1 are skipped (the Weil pairing puts mu_ell
// inside F_q(E[ell])); the filter shares no code with the analytic path.
template <FieldLike F>
std::optional<int64_t> torsion_degree_enumeration_oracle(
    const WeierstrassCurve<F>& e, int64_t ell, int64_t max_order,
    bool use_weil_filter) {
    using namespace detail;
    const F& f = e.field();
    int64_t q = field_order(f);
    int64_t p = f.characteristic();
    int base_k = field_ext_degree(f);
    int64_t order = 1;
    for (int m = 1;; ++m) {
        if (order > max_order / q) return std::nullopt;
        order *= q;
        if (use_weil_filter && algebra::mod_reduce(order - 1, ell) != 0) continue;
        auto big = curves::TableFieldCache::global().get(p, base_k * m);
        auto tc = curves::embed_curve(e, *big);
        if (curves::count_killed_by(tc, ell) == ell * ell) return m;
    }
}

// Least m with E[ell^e] rational over F_{q^m} (enumeration only; used to
// spot-check the ell-power tower above the mod-ell layer).
template <FieldLike F>
std::optional<int64_t> prime_power_torsion_degree_oracle(
    const WeierstrassCurve<F>& e, int64_t ell, int e_exp,
    int64_t max_order = curves::TableField::kMaxOrder) {
    const F& f = e.field();
    int64_t q = detail::field_order(f);
    int64_t p = f.characteristic();
    int base_k = detail::field_ext_degree(f);
    int64_t n = algebra::checked_pow(ell, e_exp);
    int64_t target = algebra::checked_mul(n, n);
    int64_t order = 1;
    for (int m = 1;; ++m) {
        if (order > max_order / q) return std::nullopt;
        order *= q;
        auto big = curves::TableFieldCache::global().get(p, base_k * m);
        auto tc = curves::embed_curve(e, *big);
        if (curves::count_killed_by(tc, n) == target) return m;
    }
}

template <FieldLike F>
MembershipReport is_proell_member(const WeierstrassCurve<F>& e, int64_t ell) {
    int64_t q = detail::field_order(e.field());
    int64_t f = algebra::mult_order(q, ell);
    TorsionDegree td = torsion_field_degree(e, ell);
    if (td.m % f != 0)
        fail(ErrorCode::PrecondViolation,
             "internal: torsion degree not divisible by [F_q(mu_ell):F_q]");
    int64_t ratio = td.m / f;
    return {ell, f, td.m, ratio, is_power_of(ratio, ell), td.method};
}

} // namespace elltor::proell
