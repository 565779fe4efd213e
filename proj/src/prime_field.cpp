#include "elltor/prime_field.hpp"

namespace elltor::algebra {

PrimeField::PrimeField(int64_t p) : p_(p) {
    if (p >= (int64_t{1} << 31))
        fail(ErrorCode::OutOfDeskScale, "prime modulus must be < 2^31");
    if (!is_prime(p))
        fail(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not prime");
}

} // namespace elltor::algebra
