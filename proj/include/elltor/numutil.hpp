#pragma once

#include <cstdint>
#include <vector>

#include "elltor/errors.hpp"

namespace elltor::algebra {

using std::int64_t;
using std::uint64_t;

// All integer arithmetic in the library stays within 64 bits; helpers that
// could overflow take the checked path and raise ErrorCode::Overflow.

int64_t mod_reduce(int64_t v, int64_t m);           // canonical 0..m-1
int64_t mul_mod(int64_t a, int64_t b, int64_t m);   // via 128-bit product
int64_t pow_mod(int64_t base, uint64_t exp, int64_t m);
int64_t inv_mod(int64_t a, int64_t m);              // extended gcd, m prime or gcd(a,m)=1
int64_t gcd_i64(int64_t a, int64_t b);

bool is_prime(int64_t n);                // trial division; n < 2^62
std::vector<int64_t> primes_up_to(int64_t limit);   // sieve of Eratosthenes
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

// Largest s with s*s <= n.
int64_t isqrt_i64(int64_t n);

// a*b with overflow check.
int64_t checked_mul(int64_t a, int64_t b);
int64_t checked_pow(int64_t base, int exp);

// Smallest f >= 1 with q^f = 1 (mod ell); requires ell prime, ell not
// dividing q.  Computed from the factorization of ell-1, so f | ell-1.
int64_t mult_order(int64_t q, int64_t ell);

// Order of `a` in (Z/m)^* given the group exponent `group_order` and its
// factorization; used for element orders in F_ell and F_ell^2.
int64_t order_from_exponent(int64_t a, int64_t m, int64_t group_order);

} // namespace elltor::algebra
