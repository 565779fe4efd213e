#include "elltor/supersingular.hpp"

#include "elltor/errors.hpp"
#include "elltor/numutil.hpp"

namespace elltor::proell {

using namespace elltor::algebra;

const char* f_class_name(FClass c) {
    switch (c) {
        case FClass::Odd: return "odd";
        case FClass::TwoMod4: return "two_mod4";
        case FClass::ZeroMod4: return "zero_mod4";
    }
    return "?";
}

static void check_supersingular_args(int64_t p, int64_t ell, int64_t e) {
    if (p < 5 || !is_prime(p))
        fail(ErrorCode::PrecondViolation, "p must be a prime >= 5");
    if (ell <= p || !is_prime(ell))
        fail(ErrorCode::PrecondViolation, "ell must be a prime > p");
    if (e < 0) fail(ErrorCode::PrecondViolation, "e must be >= 0");
}

uint64_t supersingular_extension_degree(int64_t p, int64_t ell, int64_t e) {
    check_supersingular_args(p, ell, e);
    int64_t f = mult_order(p, ell);
    int64_t m = f;
    for (int64_t i = 0; i < e; ++i) m = checked_mul(m, ell);
    return static_cast<uint64_t>(m);
}

SupersingularCase supersingular_residue(int64_t p, int64_t ell, int64_t e) {
    check_supersingular_args(p, ell, e);
    int64_t f = mult_order(p, ell);
    SupersingularCase out{p, ell, e, f, FClass::Odd, 0};
    if (f % 2 == 1) {
        out.branch = FClass::Odd;
        out.residue = mod_reduce(2, ell);
    } else if (f % 4 == 2) {
        out.branch = FClass::TwoMod4;
        out.residue = 0;
    } else {
        out.branch = FClass::ZeroMod4;
        out.residue = mod_reduce(4, ell);
    }
    return out;
}

int64_t supersingular_count_mod(int64_t p, int64_t ell, int64_t e, int64_t modulus) {
    uint64_t m = supersingular_extension_degree(p, ell, e);
    int64_t f = mult_order(p, ell);
    if (f % 2 == 1)
        return mod_reduce(pow_mod(p, m, modulus) + 1, modulus);
    uint64_t half = m / 2;
    int64_t sign = (half % 2 == 0) ? 1 : -1;
    int64_t base = mod_reduce(pow_mod(p, half, modulus) - sign, modulus);
    return mul_mod(base, base, modulus);
}

} // namespace elltor::proell
