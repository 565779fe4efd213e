#include "elltor/density.hpp"

#include "elltor/errors.hpp"
#include "elltor/numutil.hpp"

namespace elltor::density {

using namespace elltor::algebra;

FClass f_class(int64_t p, int64_t ell) {
    if (!is_prime(p) || !is_prime(ell))
        fail(ErrorCode::PrecondViolation, "f_class needs two primes");
    if (p == ell) fail(ErrorCode::EqualPrimes, "f_class requires ell != p");
    int64_t f = mult_order(p, ell);
    if (f % 2 == 1) return FClass::Odd;
    return f % 4 == 2 ? FClass::TwoMod4 : FClass::ZeroMod4;
}

namespace {

DensityScan scan_impl(int64_t p, int64_t limit, std::vector<DensityRow>* rows,
                      bool parallel) {
    if (!is_prime(p)) fail(ErrorCode::PrecondViolation, "p must be prime");
    if (limit < 100 || limit > 10000000)
        fail(ErrorCode::LimitGuard, "scan limit must be in [100, 10^7]");

    std::vector<int64_t> primes = primes_up_to(limit);
    int64_t n = static_cast<int64_t>(primes.size());
    std::vector<int64_t> f_of(primes.size(), 0); // 0 marks the excluded ell = p

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1024)
        for (int64_t i = 0; i < n; ++i) {
            int64_t ell = primes[static_cast<size_t>(i)];
            if (ell != p) f_of[static_cast<size_t>(i)] = mult_order(p, ell);
        }
    } else {
        for (int64_t i = 0; i < n; ++i) {
            int64_t ell = primes[static_cast<size_t>(i)];
            if (ell != p) f_of[static_cast<size_t>(i)] = mult_order(p, ell);
        }
    }

    DensityScan out;
    out.p = p;
    out.limit = limit;
    if (rows) {
        rows->clear();
        rows->reserve(primes.size());
    }
    for (size_t i = 0; i < primes.size(); ++i) {
        int64_t f = f_of[i];
        if (f == 0) continue;
        ++out.primes_counted;
        FClass cls;
        switch (f % 4) {
            case 0: ++out.f0; ++out.zero_mod4; cls = FClass::ZeroMod4; break;
            case 1: ++out.f1; ++out.odd; cls = FClass::Odd; break;
            case 2: ++out.f2; ++out.two_mod4; cls = FClass::TwoMod4; break;
            default: ++out.f3; ++out.odd; cls = FClass::Odd; break;
        }
        if (rows) rows->push_back({primes[i], f, cls});
    }
    return out;
}

} // namespace

DensityScan density_scan(int64_t p, int64_t limit, std::vector<DensityRow>* rows) {
    return scan_impl(p, limit, rows, true);
}

DensityScan density_scan_serial(int64_t p, int64_t limit,
                                std::vector<DensityRow>* rows) {
    return scan_impl(p, limit, rows, false);
}

} // namespace elltor::density
