#include "elltor/enumerate.hpp"

#include "elltor/numutil.hpp"

namespace elltor::curves {

using namespace elltor::algebra;

namespace {

// Solutions y of y^2 + (a1 x + a3) y = f(x) for one x; appends (x, y) pairs
// when `out` is given, otherwise only counts.
template <bool Collect>
int solve_in_y(const TableField& f, const TableCurve& e, TableField::Element x,
               std::vector<TablePoint>* out) {
    using El = TableField::Element;
    El x2 = f.mul(x, x);
    El x3 = f.mul(x2, x);
    El rhs = f.add(f.add(x3, f.mul(e.a2(), x2)),
                   f.add(f.mul(e.a4(), x), e.a6()));
    El c = f.add(f.mul(e.a1(), x), e.a3());
    if (f.characteristic() != 2) {
        // (2y + c)^2 = c^2 + 4 rhs
        El h = f.add(f.mul(c, c),
                     f.mul(f.from_int(4), rhs));
        if (f.is_zero(h)) {
            if constexpr (Collect) {
                El y = f.div(f.neg(c), f.from_int(2));
                out->push_back(TablePoint::affine(x, y));
            }
            return 1;
        }
        if (!f.is_square(h)) return 0;
        if constexpr (Collect) {
            El s = *f.sqrt(h);
            El inv2 = f.inv(f.from_int(2));
            El y1 = f.mul(f.sub(s, c), inv2);
            El y2 = f.mul(f.sub(f.neg(s), c), inv2);
            out->push_back(TablePoint::affine(x, y1));
            out->push_back(TablePoint::affine(x, y2));
        }
        return 2;
    }
    // char 2
    if (f.is_zero(c)) {
        if constexpr (Collect) out->push_back(TablePoint::affine(x, *f.sqrt(rhs)));
        return 1;
    }
    El w = f.div(rhs, f.mul(c, c));
    if (f.trace2(w) != 0) return 0;
    if constexpr (Collect) {
        El z = *f.solve_artin_schreier(w);
        El y1 = f.mul(c, z);
        El y2 = f.add(y1, c);
        out->push_back(TablePoint::affine(x, y1));
        out->push_back(TablePoint::affine(x, y2));
    }
    return 2;
}

} // namespace

int64_t count_points_serial(const TableCurve& e) {
    const TableField& f = e.field().table();
    int64_t q = f.order();
    int64_t n = 1;
    for (int64_t i = 0; i < q; ++i)
        n += solve_in_y<false>(f, e, static_cast<TableField::Element>(i), nullptr);
    return n;
}

int64_t count_points(const TableCurve& e) {
    const TableField& f = e.field().table();
    int64_t q = f.order();
    int64_t n = 1;
#pragma omp parallel for schedule(static) reduction(+ : n)
    for (int64_t i = 0; i < q; ++i)
        n += solve_in_y<false>(f, e, static_cast<TableField::Element>(i), nullptr);
    return n;
}

std::vector<TablePoint> enumerate_affine_points(const TableCurve& e) {
    const TableField& f = e.field().table();
    int64_t q = f.order();
    std::vector<TablePoint> pts;
    pts.reserve(static_cast<size_t>(q + 1));
    for (int64_t i = 0; i < q; ++i)
        solve_in_y<true>(f, e, static_cast<TableField::Element>(i), &pts);
    return pts;
}

namespace {

// One representative point per x with its multiplicity: the two points over
// an x are negatives of each other, and [n](-P) = -[n]P, so kill-scans only
// need one of them.  Returns the y-solution count (0, 1, or 2).
inline int representative_in_y(const TableField& f, const TableCurve& e,
                               TableField::Element x, TableField::Element* y) {
    using El = TableField::Element;
    El x2 = f.mul(x, x);
    El rhs = f.add(f.add(f.mul(x2, x), f.mul(e.a2(), x2)),
                   f.add(f.mul(e.a4(), x), e.a6()));
    El c = f.add(f.mul(e.a1(), x), e.a3());
    if (f.characteristic() != 2) {
        El h = f.add(f.mul(c, c), f.mul(f.from_int(4), rhs));
        if (f.is_zero(h)) {
            *y = f.div(f.neg(c), f.from_int(2));
            return 1;
        }
        auto s = f.sqrt(h);
        if (!s.has_value()) return 0;
        *y = f.div(f.sub(*s, c), f.from_int(2));
        return 2;
    }
    if (f.is_zero(c)) {
        *y = *f.sqrt(rhs);
        return 1;
    }
    auto z = f.solve_artin_schreier(f.div(rhs, f.mul(c, c)));
    if (!z.has_value()) return 0;
    *y = f.mul(c, *z);
    return 2;
}

} // namespace

int64_t count_killed_by(const TableCurve& e, int64_t n) {
    const TableField& f = e.field().table();
    int64_t q = f.order();
    int64_t killed = 1; // infinity
#pragma omp parallel for schedule(static) reduction(+ : killed)
    for (int64_t i = 0; i < q; ++i) {
        auto x = static_cast<TableField::Element>(i);
        TableField::Element y = f.zero();
        int w = representative_in_y(f, e, x, &y);
        if (w == 0) continue;
        auto r = e.scalar_mul_unchecked(static_cast<uint64_t>(n),
                                        TablePoint::affine(x, y));
        if (r.infinity) killed += w;
    }
    return killed;
}

Killed237 count_killed_237(const TableCurve& e) {
    const TableField& f = e.field().table();
    int64_t q = f.order();
    int64_t c2 = 1, c3 = 1, c7 = 1;
#pragma omp parallel for schedule(static) reduction(+ : c2, c3, c7)
    for (int64_t i = 0; i < q; ++i) {
        auto x = static_cast<TableField::Element>(i);
        TableField::Element y = f.zero();
        int w = representative_in_y(f, e, x, &y);
        if (w == 0) continue;
        auto p = TablePoint::affine(x, y);
        auto t2 = e.double_unchecked(p);
        if (t2.infinity) c2 += w;
        auto t3 = e.add_unchecked(t2, p);
        if (t3.infinity) c3 += w;
        auto t7 = e.add_unchecked(e.double_unchecked(t3), p);
        if (t7.infinity) c7 += w;
    }
    return {c2, c3, c7};
}

GroupStructure group_structure(const TableCurve& e) {
    auto pts = enumerate_affine_points(e);
    int64_t n = static_cast<int64_t>(pts.size()) + 1;
    int64_t d1 = 1;
    for (const auto& [r, v] : factorize(n)) {
        if (v < 2) continue;
        // Track the original points through repeated multiplication by r;
        // killed counts after j steps give #{P : [r^j]P = O}.
        std::vector<TablePoint> alive = pts;
        int64_t killed_affine = 0;
        int64_t rpow = 1;
        int a = 0;
        for (int j = 1; 2 * j <= v; ++j) {
            std::vector<TablePoint> next;
            next.reserve(alive.size());
            for (const auto& p : alive) {
                auto q = e.scalar_mul(static_cast<uint64_t>(r), p);
                if (!q.infinity) next.push_back(q);
            }
            killed_affine += static_cast<int64_t>(alive.size() - next.size());
            alive.swap(next);
            rpow *= r * r;
            if (killed_affine + 1 == rpow)
                a = j;
            else
                break;
        }
        for (int i = 0; i < a; ++i) d1 *= r;
    }
    return {n, d1, n / d1};
}

namespace {

TableCurve make_table_curve(const TableField& f, TableField::Element a1,
                            TableField::Element a2, TableField::Element a3,
                            TableField::Element a4, TableField::Element a6) {
    return TableCurve(TableFieldRef(f), a1, a2, a3, a4, a6);
}

} // namespace

TableCurve embed_curve(const WeierstrassCurve<PrimeField>& e, const TableField& big) {
    if (big.characteristic() != e.field().modulus())
        fail(ErrorCode::FieldMismatch, "embedding into field of different characteristic");
    return make_table_curve(big, big.from_int(e.a1()), big.from_int(e.a2()),
                            big.from_int(e.a3()), big.from_int(e.a4()),
                            big.from_int(e.a6()));
}

TableCurve embed_curve(const WeierstrassCurve<ExtField>& e, const TableField& big) {
    const ExtField& base = e.field();
    int64_t p = base.characteristic();
    int k = base.extension_degree();
    if (big.characteristic() != p)
        fail(ErrorCode::FieldMismatch, "embedding into field of different characteristic");
    if (big.extension_degree() % k != 0)
        fail(ErrorCode::FieldMismatch, "base degree does not divide target degree");

    // Root of the base modulus among the q_base-th subfield elements of the
    // target: candidates are the elements of order dividing q_base - 1.
    int64_t qb = base.order();
    TableField::Element root = big.zero();
    bool found = false;
    int64_t stride = (big.order() - 1) / (qb - 1);
    const auto& mc = base.modulus_poly().coeffs();
    for (int64_t j = 0; j < qb - 1 && !found; ++j) {
        auto cand = static_cast<TableField::Element>(j * stride);
        // Horner over the modulus coefficients (monic, degree k).
        TableField::Element acc = big.one();
        for (int i = k - 1; i >= 0; --i) {
            acc = big.mul(acc, cand);
            acc = big.add(acc, big.from_int(mc[static_cast<size_t>(i)]));
        }
        if (big.is_zero(acc)) {
            root = cand;
            found = true;
        }
    }
    if (!found)
        fail(ErrorCode::PrecondViolation, "no root of base modulus in target field");

    auto lift = [&](const ExtField::Element& c) {
        TableField::Element acc = big.zero();
        for (size_t i = c.size(); i-- > 0;) {
            acc = big.mul(acc, root);
            acc = big.add(acc, big.from_int(c[i]));
        }
        return acc;
    };
    return make_table_curve(big, lift(e.a1()), lift(e.a2()), lift(e.a3()),
                            lift(e.a4()), lift(e.a6()));
}

} // namespace elltor::curves
