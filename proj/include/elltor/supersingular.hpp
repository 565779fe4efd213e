#pragma once

#include <cstdint>

namespace elltor::proell {

// Classification of f = ord(q mod ell) driving the supersingular point
// count p^(f ell^e) + 1 (f odd) / (p^(f ell^e / 2) - (-1)^(f ell^e / 2))^2
// (f even) mod ell.
enum class FClass { Odd, TwoMod4, ZeroMod4 };

const char* f_class_name(FClass c);

struct SupersingularCase {
    int64_t p = 0;
    int64_t ell = 0;
    int64_t e = 0;
    int64_t f = 0;
    FClass branch = FClass::Odd;
    int64_t residue = 0; // #E(F_{p^{f ell^e}}) mod ell: 2 / 0 / 4
};

// The proven residue of the supersingular point count mod ell, classified
// by f mod 4; everything is computed mod ell, never via full integer
// counts, so e may be large.
SupersingularCase supersingular_residue(int64_t p, int64_t ell, int64_t e);

// The case display evaluated directly mod `modulus` (independent route for
// cross-checks): p^m + 1 for odd f, (p^(m/2) - (-1)^(m/2))^2 for even f,
// with m = f * ell^e.
int64_t supersingular_count_mod(int64_t p, int64_t ell, int64_t e, int64_t modulus);

// m = f * ell^e with a 64-bit guard.
uint64_t supersingular_extension_degree(int64_t p, int64_t ell, int64_t e);

} // namespace elltor::proell
