#pragma once

#include <cstdint>
#include <vector>

#include "elltor/table_field.hpp"
#include "elltor/weierstrass.hpp"

namespace elltor::curves {

using TableCurve = WeierstrassCurve<TableFieldRef>;
using TablePoint = CurvePoint<TableFieldRef>;

// Number of rational points (including infinity), by scanning every x and
// solving the quadratic in y exactly.  The OpenMP variant and the serial
// variant compute identical tallies.
int64_t count_points(const TableCurve& e);
int64_t count_points_serial(const TableCurve& e);

// All affine points, in ascending x-index order (deterministic).
std::vector<TablePoint> enumerate_affine_points(const TableCurve& e);

// Independent brute-force reference: test every (x, y) pair against the
// curve equation.  O(q^2); for small fields and the benchmark only.
template <algebra::FiniteFieldLike F>
int64_t count_points_naive(const WeierstrassCurve<F>& e) {
    const F& f = e.field();
    int64_t n = 1; // infinity
    for (int64_t i = 0; i < f.order(); ++i) {
        auto x = f.element_at(i);
        for (int64_t j = 0; j < f.order(); ++j) {
            auto y = f.element_at(j);
            if (e.on_curve(CurvePoint<F>::affine(x, y))) ++n;
        }
    }
    return n;
}

// #E = d1 * d2 with E(F_q) = Z/d1 x Z/d2, d1 | d2; computed from the
// enumerated point set by repeatedly multiplying every point by each prime
// r with r^2 | #E and reading off the order profile.
struct GroupStructure {
    int64_t n = 0;
    int64_t d1 = 1;
    int64_t d2 = 1;
};
GroupStructure group_structure(const TableCurve& e);

// #{P in E(F_q) : [n]P = O} over the enumerated point set.
int64_t count_killed_by(const TableCurve& e, int64_t n);

// Simultaneous kill-counts for 2, 3 and 7 in one pass over the point set
// (shared addition chain P -> 2P -> 3P -> 6P -> 7P).
struct Killed237 {
    int64_t c2 = 0;
    int64_t c3 = 0;
    int64_t c7 = 0;
};
Killed237 count_killed_237(const TableCurve& e);

// Base change to a table field of F_{q^m}.  For an extension base field the
// embedding sends the base generator to the least-index root of the base
// modulus in the target field.
TableCurve embed_curve(const WeierstrassCurve<algebra::PrimeField>& e,
                       const TableField& big);
TableCurve embed_curve(const WeierstrassCurve<algebra::ExtField>& e,
                       const TableField& big);

} // namespace elltor::curves
