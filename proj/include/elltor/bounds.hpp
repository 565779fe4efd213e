#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace elltor::bounds {

struct BoundReport {
    int64_t g = 0;
    double rt_bound = 0;        // 6 + sqrt(1 + 24g), for display only
    int64_t max_prime = 0;      // largest prime ell with ell <= 6 + sqrt(1+24g)
    int64_t general_bound = 0;  // 49 * max(1, g)
};

// Exact integer predicate for ell <= 6 + sqrt(1 + 24g): ell <= 6 or
// (ell - 6)^2 <= 1 + 24g.  The boundary primes (7 at g = 0, 11 at g = 1)
// are realized by the explicit families, so the bound is inclusive.
bool rt_admits(int64_t ell, int64_t g);

BoundReport rt_bound(int64_t g);

// Semi-stability threshold 2d + 1 for d-dimensional abelian varieties.
int64_t semistable_threshold(int64_t d);

// Order of Sp(2d, F_ell): ell^(d^2) * prod_{i=1..d} (ell^(2i) - 1), with a
// 64-bit guard on the product; is_ell_power tests whether the prime-to-ell
// part is 1 (each factor ell^(2i) - 1 is prime to ell, so this cannot
// happen for d >= 1).
struct SpOrder {
    int64_t d = 0;
    int64_t ell = 0;
    int64_t order = 0;
    bool is_ell_power = false;
};
SpOrder sp_order(int64_t d, int64_t ell);

// The is_ell_power flag alone, computed factor by factor so no range of
// d <= 5, ell <= 50 can overflow.
bool sp_order_is_ell_power(int64_t d, int64_t ell);

// Re-verified family member realizing the bound at genus 0 or 1.
struct SharpnessWitness {
    int64_t genus = 0;
    int64_t ell = 0;          // 7 or 11
    std::string description;
    int64_t order = 0;        // measured order of (0, 0)
    bool verified = false;
};
SharpnessWitness sharpness_witness(int64_t g);

} // namespace elltor::bounds
