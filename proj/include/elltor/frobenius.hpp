#pragma once

#include <array>
#include <cstdint>

#include "elltor/enumerate.hpp"

namespace elltor::proell {

// Trace and characteristic polynomial x^2 - a x + q of the q-power
// Frobenius of a curve over F_q; #E(F_q) = q + 1 - a.
struct FrobeniusData {
    int64_t q = 0;
    int64_t a = 0;
    std::array<int64_t, 3> charpoly() const { return {1, -a, q}; }
};

// Trace recovered from a full point count (q <= 10^6).
FrobeniusData frobenius_data(const curves::WeierstrassCurve<algebra::PrimeField>& e);
FrobeniusData frobenius_data(const curves::WeierstrassCurve<algebra::ExtField>& e);
FrobeniusData frobenius_data_from_count(int64_t q, int64_t n_points);

// #E(F_{q^m}) = q^m + 1 - s_m via the integer recurrence
// s_0 = 2, s_1 = a, s_m = a s_{m-1} - q s_{m-2}; this equals the product of
// (1 - alpha_i^m) over the Frobenius eigenvalues.  Raises Overflow when the
// value leaves 64 bits.
int64_t count_in_extension(const FrobeniusData& fd, int64_t m);

// Same value mod `modulus`, via 2x2 companion-matrix powering, so m may be
// as large as 64 bits allow.
int64_t count_in_extension_mod(int64_t q, int64_t a, uint64_t m, int64_t modulus);
inline int64_t count_in_extension_mod(const FrobeniusData& fd, uint64_t m,
                                      int64_t modulus) {
    return count_in_extension_mod(fd.q, fd.a, m, modulus);
}

} // namespace elltor::proell
