#include "elltor/linalg_fl.hpp"

#include <algorithm>
#include <unordered_set>

#include "elltor/errors.hpp"
#include "elltor/numutil.hpp"

namespace elltor::proell {

using namespace elltor::algebra;

namespace {

int64_t mat_det(const Mat2& a) {
    return mod_reduce(a.m[0] * a.m[3] - a.m[1] * a.m[2], a.ell);
}

int64_t pack(const Mat2& a) {
    int64_t l = a.ell;
    return ((a.m[0] * l + a.m[1]) * l + a.m[2]) * l + a.m[3];
}

// Normalized representative with first nonzero coordinate 1; ordering key
// is a + b*ell (coordinates read low-to-high as base-ell digits).
Vec2 normalize_vec(Vec2 v, int64_t ell) {
    if (v[0] != 0) {
        int64_t s = inv_mod(v[0], ell);
        return {1, mod_reduce(v[1] * s, ell)};
    }
    if (v[1] == 0) fail(ErrorCode::PrecondViolation, "normalizing zero vector");
    return {0, 1};
}

int64_t vec_key(const Vec2& v, int64_t ell) { return v[0] + v[1] * ell; }

// Fixed subspace of a single matrix: 0, 1 or 2 basis vectors.
std::vector<Vec2> fixed_space(const Mat2& g) {
    int64_t l = g.ell;
    // kernel of N = g - I
    int64_t a = mod_reduce(g.m[0] - 1, l), b = g.m[1];
    int64_t c = g.m[2], d = mod_reduce(g.m[3] - 1, l);
    if (a == 0 && b == 0 && c == 0 && d == 0)
        return {{1, 0}, {0, 1}};
    // rank 2 <=> det != 0
    if (mod_reduce(a * d - b * c, l) != 0) return {};
    Vec2 v = (a != 0 || b != 0) ? Vec2{b, mod_reduce(-a, l)}
                                : Vec2{d, mod_reduce(-c, l)};
    return {normalize_vec(v, l)};
}

std::vector<Vec2> intersect_spaces(const std::vector<Vec2>& u,
                                   const std::vector<Vec2>& v, int64_t ell) {
    if (u.size() == 2) return v;
    if (v.size() == 2) return u;
    if (u.empty() || v.empty()) return {};
    // two lines: equal or trivial intersection
    int64_t cross = mod_reduce(u[0][0] * v[0][1] - u[0][1] * v[0][0], ell);
    return cross == 0 ? u : std::vector<Vec2>{};
}

std::vector<Vec2> common_fixed_space(const std::vector<Mat2>& group, int64_t ell) {
    std::vector<Vec2> space = {{1, 0}, {0, 1}};
    for (const auto& g : group) {
        space = intersect_spaces(space, fixed_space(g), ell);
        if (space.empty()) break;
    }
    return space;
}

void verify_ell_group(const std::vector<Mat2>& closure, int64_t ell) {
    int64_t n = static_cast<int64_t>(closure.size());
    int64_t t = n;
    while (t % ell == 0) t /= ell;
    if (t == 1) return;
    // Find a witness element of order with a prime factor != ell.
    for (const auto& g : closure) {
        int64_t o = mat_order(g);
        while (o % ell == 0) o /= ell;
        if (o != 1)
            fail(ErrorCode::NotEllGroup,
                 "generated group contains an element of order coprime to ell");
    }
    fail(ErrorCode::NotEllGroup, "generated group order is not a power of ell");
}

} // namespace

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    if (a.ell != b.ell) fail(ErrorCode::FieldMismatch, "matrices over different F_ell");
    int64_t l = a.ell;
    return {l,
            {mod_reduce(a.m[0] * b.m[0] + a.m[1] * b.m[2], l),
             mod_reduce(a.m[0] * b.m[1] + a.m[1] * b.m[3], l),
             mod_reduce(a.m[2] * b.m[0] + a.m[3] * b.m[2], l),
             mod_reduce(a.m[2] * b.m[1] + a.m[3] * b.m[3], l)}};
}

Mat2 mat_inv(const Mat2& a) {
    int64_t l = a.ell;
    int64_t det = mat_det(a);
    if (det == 0) fail(ErrorCode::PrecondViolation, "matrix not invertible mod ell");
    int64_t di = inv_mod(det, l);
    return {l,
            {mod_reduce(a.m[3] * di, l), mod_reduce(-a.m[1] * di, l),
             mod_reduce(-a.m[2] * di, l), mod_reduce(a.m[0] * di, l)}};
}

Vec2 mat_apply(const Mat2& a, const Vec2& v) {
    int64_t l = a.ell;
    return {mod_reduce(a.m[0] * v[0] + a.m[1] * v[1], l),
            mod_reduce(a.m[2] * v[0] + a.m[3] * v[1], l)};
}

int64_t mat_order(const Mat2& a, int64_t cap) {
    Mat2 acc = a;
    for (int64_t n = 1; n <= cap; ++n) {
        if (acc == Mat2::identity(a.ell)) return n;
        acc = mat_mul(acc, a);
    }
    fail(ErrorCode::PrecondViolation, "matrix order exceeds cap");
}

std::vector<Mat2> group_closure(const std::vector<Mat2>& gens, int64_t ell,
                                int64_t cap) {
    if (ell > 97 || !is_prime(ell))
        fail(ErrorCode::OutOfDeskScale, "lemma operations require prime ell <= 97");
    for (const auto& g : gens) {
        if (g.ell != ell) fail(ErrorCode::FieldMismatch, "generator over wrong F_ell");
        if (mat_det(g) == 0)
            fail(ErrorCode::PrecondViolation, "generator not invertible mod ell");
    }
    std::vector<Mat2> closure = {Mat2::identity(ell)};
    std::unordered_set<int64_t> seen = {pack(closure[0])};
    size_t head = 0;
    while (head < closure.size()) {
        Mat2 cur = closure[head++];
        for (const auto& g : gens) {
            Mat2 next = mat_mul(cur, g);
            if (seen.insert(pack(next)).second) {
                closure.push_back(next);
                if (static_cast<int64_t>(closure.size()) > cap)
                    fail(ErrorCode::NotEllGroup, "group closure exceeds guard");
            }
        }
    }
    return closure;
}

Vec2 fixed_vector(const std::vector<Mat2>& gens, int64_t ell) {
    auto closure = group_closure(gens, ell, ell * ell * ell);
    verify_ell_group(closure, ell);
    auto space = common_fixed_space(closure, ell);
    if (space.empty())
        fail(ErrorCode::PrecondViolation,
             "internal: ell-group with no nonzero fixed vector");
    if (space.size() == 2) return {1, 0};
    return space[0];
}

bool line_stable_under(const Mat2& m, const Vec2& v) {
    Vec2 w = mat_apply(m, v);
    return mod_reduce(w[0] * v[1] - w[1] * v[0], m.ell) == 0;
}

Vec2 stable_line(const std::vector<Mat2>& n_gens, const Mat2& delta, int64_t ell) {
    if (delta.ell != ell) fail(ErrorCode::FieldMismatch, "delta over wrong F_ell");
    if (mat_det(delta) == 0)
        fail(ErrorCode::PrecondViolation, "delta not invertible mod ell");
    // order of delta divides ell - 1
    {
        Mat2 acc = Mat2::identity(ell);
        Mat2 base = delta;
        int64_t e = ell - 1;
        while (e > 0) {
            if (e & 1) acc = mat_mul(acc, base);
            base = mat_mul(base, base);
            e >>= 1;
        }
        if (!(acc == Mat2::identity(ell)))
            fail(ErrorCode::PrecondViolation, "delta^(ell-1) != identity");
    }
    auto closure = group_closure(n_gens, ell, ell * ell * ell);
    verify_ell_group(closure, ell);
    // delta N delta^{-1} = N as sets
    {
        std::unordered_set<int64_t> nset;
        for (const auto& g : closure) nset.insert(pack(g));
        Mat2 dinv = mat_inv(delta);
        for (const auto& g : closure) {
            Mat2 conj = mat_mul(mat_mul(delta, g), dinv);
            if (!nset.count(pack(conj)))
                fail(ErrorCode::NotNormalized, "delta does not normalize N");
        }
    }

    auto space = common_fixed_space(closure, ell);
    if (space.empty())
        fail(ErrorCode::PrecondViolation,
             "internal: ell-group with no nonzero fixed vector");
    if (space.size() == 1) {
        // delta maps the fixed space of N to itself since it normalizes N.
        if (!line_stable_under(delta, space[0]))
            fail(ErrorCode::NotNormalized,
                 "internal: fixed space of N not delta-stable");
        return space[0];
    }

    // N acts trivially: pick an eigenline of delta.  delta^(ell-1) = I, so
    // the characteristic polynomial splits over F_ell.
    int64_t tr = mod_reduce(delta.m[0] + delta.m[3], ell);
    int64_t det = mat_det(delta);
    Vec2 best{1, 0};
    bool have = false;
    for (int64_t lam = 0; lam < ell; ++lam) {
        if (mod_reduce(lam * lam - tr * lam + det, ell) != 0) continue;
        Mat2 shifted = delta;
        shifted.m[0] = mod_reduce(shifted.m[0] - lam, ell);
        shifted.m[3] = mod_reduce(shifted.m[3] - lam, ell);
        if (shifted.m[0] == 0 && shifted.m[1] == 0 && shifted.m[2] == 0 &&
            shifted.m[3] == 0)
            return {1, 0}; // scalar matrix: every line is stable
        // eigenline = kernel of (delta - lam I)
        Vec2 v = (shifted.m[0] != 0 || shifted.m[1] != 0)
                     ? Vec2{shifted.m[1], mod_reduce(-shifted.m[0], ell)}
                     : Vec2{shifted.m[3], mod_reduce(-shifted.m[2], ell)};
        Vec2 line = normalize_vec(v, ell);
        if (!have || vec_key(line, ell) < vec_key(best, ell)) {
            best = line;
            have = true;
        }
    }
    if (!have)
        fail(ErrorCode::PrecondViolation,
             "internal: delta has no eigenvalue in F_ell");
    return best;
}

} // namespace elltor::proell
