#include "elltor/frobenius.hpp"

#include <limits>

#include "elltor/numutil.hpp"

namespace elltor::proell {

using namespace elltor::algebra;
using namespace elltor::curves;

FrobeniusData frobenius_data_from_count(int64_t q, int64_t n_points) {
    FrobeniusData fd{q, q + 1 - n_points};
    if (fd.a * fd.a > 4 * q)
        fail(ErrorCode::PrecondViolation, "Hasse bound violated (bad point count)");
    return fd;
}

FrobeniusData frobenius_data(const WeierstrassCurve<PrimeField>& e) {
    int64_t q = e.field().order();
    if (q > TableField::kMaxOrder)
        fail(ErrorCode::FieldTooLarge, "frobenius_data requires q <= 10^6");
    auto big = TableFieldCache::global().get(q, 1);
    return frobenius_data_from_count(q, count_points(embed_curve(e, *big)));
}

FrobeniusData frobenius_data(const WeierstrassCurve<ExtField>& e) {
    int64_t q = e.field().order();
    if (q > TableField::kMaxOrder)
        fail(ErrorCode::FieldTooLarge, "frobenius_data requires q <= 10^6");
    auto big = TableFieldCache::global().get(e.field().characteristic(),
                                             e.field().extension_degree());
    return frobenius_data_from_count(q, count_points(embed_curve(e, *big)));
}

int64_t count_in_extension(const FrobeniusData& fd, int64_t m) {
    if (m < 1) fail(ErrorCode::PrecondViolation, "extension degree must be >= 1");
    // q^m within the 64-bit guard
    int64_t qm = 1;
    for (int64_t i = 0; i < m; ++i) qm = checked_mul(qm, fd.q);

    __int128 s_prev = 2, s_cur = fd.a;
    for (int64_t i = 2; i <= m; ++i) {
        __int128 s_next = static_cast<__int128>(fd.a) * s_cur -
                          static_cast<__int128>(fd.q) * s_prev;
        s_prev = s_cur;
        s_cur = s_next;
    }
    __int128 n = static_cast<__int128>(qm) + 1 - s_cur;
    if (n > std::numeric_limits<int64_t>::max() || n < 0)
        fail(ErrorCode::Overflow, "point count exceeds 64 bits");
    return static_cast<int64_t>(n);
}

int64_t count_in_extension_mod(int64_t q, int64_t a, uint64_t m, int64_t modulus) {
    if (m < 1) fail(ErrorCode::PrecondViolation, "extension degree must be >= 1");
    int64_t am = mod_reduce(a, modulus);
    int64_t qm = mod_reduce(q, modulus);
    // (s_m, s_{m-1}) = M^(m-1) (s_1, s_0) with M = [[a, -q], [1, 0]].
    int64_t m00 = 1, m01 = 0, m10 = 0, m11 = 1; // identity
    int64_t b00 = am, b01 = mod_reduce(-qm, modulus), b10 = 1, b11 = 0;
    uint64_t e = m - 1;
    while (e > 0) {
        if (e & 1) {
            int64_t t00 = mod_reduce(mul_mod(m00, b00, modulus) + mul_mod(m01, b10, modulus), modulus);
            int64_t t01 = mod_reduce(mul_mod(m00, b01, modulus) + mul_mod(m01, b11, modulus), modulus);
            int64_t t10 = mod_reduce(mul_mod(m10, b00, modulus) + mul_mod(m11, b10, modulus), modulus);
            int64_t t11 = mod_reduce(mul_mod(m10, b01, modulus) + mul_mod(m11, b11, modulus), modulus);
            m00 = t00; m01 = t01; m10 = t10; m11 = t11;
        }
        int64_t t00 = mod_reduce(mul_mod(b00, b00, modulus) + mul_mod(b01, b10, modulus), modulus);
        int64_t t01 = mod_reduce(mul_mod(b00, b01, modulus) + mul_mod(b01, b11, modulus), modulus);
        int64_t t10 = mod_reduce(mul_mod(b10, b00, modulus) + mul_mod(b11, b10, modulus), modulus);
        int64_t t11 = mod_reduce(mul_mod(b10, b01, modulus) + mul_mod(b11, b11, modulus), modulus);
        b00 = t00; b01 = t01; b10 = t10; b11 = t11;
        e >>= 1;
    }
    int64_t s_m = mod_reduce(mul_mod(m00, am, modulus) + mul_mod(m01, 2, modulus), modulus);
    int64_t qpow = pow_mod(qm, m, modulus);
    return mod_reduce(qpow + 1 - s_m, modulus);
}

} // namespace elltor::proell
