#include <doctest.h>

#include "elltor/bounds.hpp"
#include "elltor/density.hpp"
#include "elltor/errors.hpp"
#include "elltor/frobenius.hpp"
#include "elltor/numutil.hpp"
#include "test_support.hpp"

using namespace elltor;
using namespace elltor::algebra;
using namespace elltor::bounds;

namespace {

// Independent oracle: count 2x2 matrices over F_ell preserving the
// symplectic form J = [[0,1],[-1,0]] entrywise.
int64_t sp2_order_bruteforce(int64_t ell) {
    int64_t count = 0;
    for (int64_t a = 0; a < ell; ++a)
        for (int64_t b = 0; b < ell; ++b)
            for (int64_t c = 0; c < ell; ++c)
                for (int64_t d = 0; d < ell; ++d) {
                    // M^T J M with M = [[a,b],[c,d]]:
                    // [[0, ad-cb], [cb-ad, 0]]
                    int64_t s = mod_reduce(a * d - c * b, ell);
                    if (s == 1) ++count;
                }
    return count;
}

} // namespace

TEST_CASE("torsion bound values and sharpness primes") {
    auto r0 = rt_bound(0);
    CHECK(r0.max_prime == 7);
    CHECK(r0.general_bound == 49);
    CHECK(r0.rt_bound == doctest::Approx(7.0));

    auto r1 = rt_bound(1);
    CHECK(r1.max_prime == 11);
    CHECK(r1.general_bound == 49);

    CHECK(rt_bound(2).general_bound == 98);
    CHECK(semistable_threshold(1) == 3);
    CHECK(semistable_threshold(5) == 11);

    // exact integer predicate vs a direct prime search, g <= 100
    int64_t prev = 0;
    for (int64_t g = 0; g <= 100; ++g) {
        auto r = rt_bound(g);
        int64_t expect = 0;
        for (int64_t ell : primes_up_to(200))
            if (ell <= 6 || (ell - 6) * (ell - 6) <= 1 + 24 * g) expect = ell;
        CHECK(r.max_prime == expect);
        CHECK(r.max_prime >= prev); // monotone in g
        prev = r.max_prime;
        CHECK(static_cast<double>(r.max_prime) <= r.rt_bound + 1e-9);
    }
}

TEST_CASE("sp_order against brute force and the ell-power flag") {
    for (int64_t ell : {2, 3, 5, 7}) {
        auto r = sp_order(1, ell);
        CHECK(r.order == sp2_order_bruteforce(ell));
    }
    CHECK(sp_order(1, 2).order == 6);
    CHECK(sp_order(1, 3).order == 24);
    CHECK(sp_order(2, 3).order == 51840);

    for (int64_t d = 1; d <= 5; ++d)
        for (int64_t ell : primes_up_to(50))
            CHECK(!sp_order_is_ell_power(d, ell));

    CHECK_THROWS_AS(sp_order(5, 47), Error); // overflows 64 bits
    CHECK_THROWS_AS(sp_order(6, 3), Error);
    CHECK_THROWS_AS(sp_order(1, 51), Error);
}

TEST_CASE("sharpness witnesses re-verify the family members") {
    auto w0 = sharpness_witness(0);
    CHECK(w0.ell == 7);
    CHECK(w0.order == 7);
    CHECK(w0.verified);

    auto w1 = sharpness_witness(1);
    CHECK(w1.ell == 11);
    CHECK(w1.order == 11);
    CHECK(w1.verified);

    CHECK_THROWS_AS(sharpness_witness(2), Error);
    try {
        sharpness_witness(2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnsupportedGenus);
    }
}

TEST_CASE("f classification examples") {
    using density::f_class;
    using proell::FClass;
    CHECK(f_class(5, 7) == FClass::TwoMod4);   // f = 6
    CHECK(f_class(5, 11) == FClass::Odd);      // f = 5
    CHECK(f_class(5, 13) == FClass::ZeroMod4); // f = 4
    CHECK_THROWS_AS(f_class(5, 5), Error);
    try {
        f_class(5, 5);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EqualPrimes);
    }
}

TEST_CASE("density scans: partition, determinism, positivity") {
    using namespace elltor::density;

    // tallies sum to pi(1000) - 1 for p = 5
    auto s5 = density_scan(5, 1000);
    CHECK(s5.primes_counted == 167);
    CHECK(s5.odd + s5.two_mod4 + s5.zero_mod4 == s5.primes_counted);
    CHECK(s5.f1 + s5.f3 == s5.odd);
    CHECK(s5.f0 == s5.zero_mod4);
    CHECK(s5.f2 == s5.two_mod4);

    // positivity at p = 2, X = 10^4
    auto s2 = density_scan(2, 10000);
    CHECK(s2.odd > 0);
    CHECK(s2.two_mod4 > 0);
    CHECK(s2.zero_mod4 > 0);
    CHECK(s2.f1 > 0);
    CHECK(s2.f3 > 0);

    // serial and parallel scans agree, including row order
    std::vector<DensityRow> rows_par, rows_ser;
    auto sp = density_scan(3, 5000, &rows_par);
    auto ss = density_scan_serial(3, 5000, &rows_ser);
    CHECK(sp.odd == ss.odd);
    CHECK(sp.two_mod4 == ss.two_mod4);
    CHECK(sp.zero_mod4 == ss.zero_mod4);
    REQUIRE(rows_par.size() == rows_ser.size());
    for (size_t i = 0; i < rows_par.size(); ++i) {
        CHECK(rows_par[i].ell == rows_ser[i].ell);
        CHECK(rows_par[i].f == rows_ser[i].f);
    }
    // ascending ell, every one classified exactly once
    for (size_t i = 1; i < rows_par.size(); ++i)
        CHECK(rows_par[i].ell > rows_par[i - 1].ell);

    CHECK_THROWS_AS(density_scan(5, 50), Error); // below the limit guard
    CHECK_THROWS_AS(density_scan(5, 100000000), Error);
}

TEST_CASE("f class matches divisibility of the supersingular count") {
    // y^2 = x^3 + 1 is supersingular over F_5 (a = 0); ell divides
    // #E(F_{5^f}) exactly in the f = 2 mod 4 class.
    using proell::FClass;
    for (int64_t ell : primes_up_to(50)) {
        if (ell == 5 || ell == 2) continue;
        int64_t f = mult_order(5, ell);
        auto cls = density::f_class(5, ell);
        int64_t count_mod =
            proell::count_in_extension_mod(5, 0, static_cast<uint64_t>(f), ell);
        CHECK((count_mod == 0) == (cls == FClass::TwoMod4));
    }
}
