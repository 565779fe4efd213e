#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace elltor::proell {

// 2x2 matrices over F_ell (row-major), acting on column vectors.
struct Mat2 {
    int64_t ell = 0;
    std::array<int64_t, 4> m{1, 0, 0, 1}; // a b / c d

    static Mat2 identity(int64_t ell) { return {ell, {1, 0, 0, 1}}; }
    bool operator==(const Mat2& o) const { return ell == o.ell && m == o.m; }
};

using Vec2 = std::array<int64_t, 2>;

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_inv(const Mat2& a); // requires invertible
Vec2 mat_apply(const Mat2& a, const Vec2& v);
int64_t mat_order(const Mat2& a, int64_t cap = 1 << 20);

// Closure of the generated subgroup of GL_2(F_ell) by breadth-first
// products; raises on non-invertible generators or when the closure passes
// `cap` elements.
std::vector<Mat2> group_closure(const std::vector<Mat2>& gens, int64_t ell,
                                int64_t cap);

// A nonzero vector fixed by every element of the group generated by
// `gens`, which must be an ell-group (verified by closure enumeration,
// guard ell^3 elements; NotEllGroup otherwise).  Deterministic choice: the
// least fixed vector in the a + b*ell ordering of normalized
// representatives.
Vec2 fixed_vector(const std::vector<Mat2>& gens, int64_t ell);

// A line (given by its canonical representative with first nonzero
// coordinate 1) stable under the group generated by an ell-group N and a
// matrix delta with delta^(ell-1) = I normalizing N.  Mirrors the proof:
// fixed subspace of N first, then an eigenline of delta restricted to it.
Vec2 stable_line(const std::vector<Mat2>& n_gens, const Mat2& delta, int64_t ell);

// Is the line spanned by v mapped to itself by m?
bool line_stable_under(const Mat2& m, const Vec2& v);

} // namespace elltor::proell
