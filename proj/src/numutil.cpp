#include "elltor/numutil.hpp"

#include <limits>

namespace elltor::algebra {

int64_t mod_reduce(int64_t v, int64_t m) {
    int64_t r = v % m;
    return r < 0 ? r + m : r;
}

int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

int64_t pow_mod(int64_t base, uint64_t exp, int64_t m) {
    if (m == 1) return 0;
    int64_t acc = 1;
    int64_t b = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return acc;
}

int64_t inv_mod(int64_t a, int64_t m) {
    int64_t r0 = m, r1 = mod_reduce(a, m);
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) fail(ErrorCode::DivisionByZero, "inv_mod: element not invertible");
    return mod_reduce(t0, m);
}

int64_t gcd_i64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<int64_t> primes_up_to(int64_t limit) {
    std::vector<int64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
    for (int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (int64_t j = i * i; j <= limit; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return out;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int64_t isqrt_i64(int64_t n) {
    if (n < 0) fail(ErrorCode::PrecondViolation, "isqrt of negative");
    if (n < 2) return n;
    int64_t x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    while ((x + 1) * (x + 1) <= n) ++x;
    while (x * x > n) --x;
    return x;
}

int64_t checked_mul(int64_t a, int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > std::numeric_limits<int64_t>::max() || p < std::numeric_limits<int64_t>::min())
        fail(ErrorCode::Overflow, "64-bit overflow in multiply");
    return static_cast<int64_t>(p);
}

int64_t checked_pow(int64_t base, int exp) {
    int64_t acc = 1;
    for (int i = 0; i < exp; ++i) acc = checked_mul(acc, base);
    return acc;
}

int64_t mult_order(int64_t q, int64_t ell) {
    if (!is_prime(ell)) fail(ErrorCode::PrecondViolation, "mult_order: ell must be prime");
    if (mod_reduce(q, ell) == 0) fail(ErrorCode::NotCoprime, "mult_order: ell divides q");
    return order_from_exponent(q, ell, ell - 1);
}

int64_t order_from_exponent(int64_t a, int64_t m, int64_t group_order) {
    int64_t f = group_order;
    for (const auto& [p, e] : factorize(group_order)) {
        for (int i = 0; i < e; ++i) {
            if (pow_mod(a, static_cast<uint64_t>(f / p), m) == 1)
                f /= p;
            else
                break;
        }
    }
    return f;
}

} // namespace elltor::algebra
