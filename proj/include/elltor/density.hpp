#pragma once

#include <cstdint>
#include <vector>

#include "elltor/supersingular.hpp"

namespace elltor::density {

using proell::FClass;

// Classification of f = ord(p mod ell) by parity and residue mod 4.
FClass f_class(int64_t p, int64_t ell);

struct DensityScan {
    int64_t p = 0;
    int64_t limit = 0;
    int64_t primes_counted = 0; // primes ell <= limit with ell != p
    // 3-way tallies per the supersingular trichotomy
    int64_t odd = 0, two_mod4 = 0, zero_mod4 = 0;
    // 4-way tallies (f mod 4), separating 1 and 3 within the odd class
    int64_t f0 = 0, f1 = 0, f2 = 0, f3 = 0;
};

struct DensityRow {
    int64_t ell = 0;
    int64_t f = 0;
    FClass cls = FClass::Odd;
};

// Sieve all primes ell <= limit (100 <= limit <= 10^7), classify each by
// f mod 4 and tally.  Rows, when requested, come back in ascending ell
// order; tallies and rows are identical across thread counts.
DensityScan density_scan(int64_t p, int64_t limit,
                         std::vector<DensityRow>* rows = nullptr);
DensityScan density_scan_serial(int64_t p, int64_t limit,
                                std::vector<DensityRow>* rows = nullptr);

} // namespace elltor::density
