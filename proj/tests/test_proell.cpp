#include <doctest.h>

#include "elltor/supersingular.hpp"
#include "elltor/torsion_degree.hpp"
#include "test_support.hpp"

using namespace elltor;
using namespace elltor::algebra;
using namespace elltor::curves;
using namespace elltor::proell;

namespace {

WeierstrassCurve<PrimeField> curve5(int64_t a1, int64_t a2, int64_t a3, int64_t a4,
                                    int64_t a6) {
    PrimeField f5(5);
    return {f5, f5.from_int(a1), f5.from_int(a2), f5.from_int(a3), f5.from_int(a4),
            f5.from_int(a6)};
}

} // namespace

TEST_CASE("frobenius traces of the two F_5 test curves") {
    auto e1 = curve5(0, 0, 0, 0, 1);
    auto fd1 = frobenius_data(e1);
    CHECK(fd1.a == 0); // 6 points
    CHECK(fd1.charpoly() == std::array<int64_t, 3>{1, 0, 5});

    auto e2 = curve5(0, 0, 0, 1, 1);
    auto fd2 = frobenius_data(e2);
    CHECK(fd2.a == -3); // 9 points
    CHECK(fd2.q + 1 - fd2.a == 9);
}

TEST_CASE("count_in_extension: recurrence values and guards") {
    FrobeniusData ss{5, 0};
    CHECK(count_in_extension(ss, 1) == 6);
    CHECK(count_in_extension(ss, 5) == 3126);  // 5^5 + 1
    CHECK(count_in_extension(ss, 6) == 15876); // (5^3 + 1)^2
    CHECK_THROWS_AS(count_in_extension(ss, 100), Error);

    FrobeniusData fd{5, -3};
    CHECK(count_in_extension(fd, 1) == 9);

    // mod route agrees with the exact route where both apply
    for (int64_t m = 1; m <= 20; ++m) {
        int64_t exact = count_in_extension(fd, m);
        for (int64_t mod : {7, 11, 97})
            CHECK(count_in_extension_mod(fd, static_cast<uint64_t>(m), mod) ==
                  mod_reduce(exact, mod));
    }
}

TEST_CASE("torsion field degree: split, inert and repeated cases") {
    auto e1 = curve5(0, 0, 0, 0, 1); // a = 0

    // ell = 7: x^2 + 5 mod 7 has roots +-3; lcm(ord 3, ord 4) = lcm(6, 3) = 6
    auto td7 = torsion_field_degree(e1, 7);
    CHECK(td7.m == 6);
    CHECK(td7.method == DegreeMethod::RootOrders);
    // enumeration oracle confirms over F_{5^6}
    auto oracle7 = torsion_degree_enumeration_oracle(e1, 7);
    REQUIRE(oracle7.has_value());
    CHECK(*oracle7 == 6);

    // ell = 3: roots 2 and 1 mod 3; m = lcm(2, 1) = 2; matches the (6,6)
    // structure of E(F_25)
    auto td3 = torsion_field_degree(e1, 3);
    CHECK(td3.m == 2);
    CHECK(*torsion_degree_enumeration_oracle(e1, 3) == 2);

    // ell = 2: trace even, 2-division cubic (x+1)(x^2-x+1) does not split
    // over F_5, so the scalar test must answer "not scalar": m = 2
    auto td2 = torsion_field_degree(e1, 2);
    CHECK(td2.m == 2);
    CHECK(td2.method == DegreeMethod::ScalarDisambiguated);
    CHECK(*torsion_degree_enumeration_oracle(e1, 2) == 2);

    // y^2 = x^3 + x + 1: a = -3, disc = 9 - 20 = 3 is a non-residue mod 7,
    // so m is the order of a root of x^2 + 3x + 5 in F_49^*; that order is 48
    auto e2 = curve5(0, 0, 0, 1, 1);
    auto td = torsion_field_degree(e2, 7);
    CHECK(td.m == 48);
    CHECK(td.method == DegreeMethod::RootOrders);

    // a = -3 odd: for ell = 2 the charpoly is irreducible, m = 3; agrees
    // with x^3 + x + 1 staying irreducible over F_5
    CHECK(torsion_field_degree(e2, 2).m == 3);
    CHECK(*torsion_degree_enumeration_oracle(e2, 2) == 3);

    // full rational 2-torsion: m = 1 via the scalar test
    auto e3 = curve5(0, 0, 0, -1, 0); // y^2 = x(x-1)(x+1)
    auto td1 = torsion_field_degree(e3, 2);
    CHECK(td1.m == 1);
    CHECK(td1.method == DegreeMethod::ScalarDisambiguated);

    CHECK_THROWS_AS(torsion_field_degree(e1, 5), Error); // ell = char
    try {
        torsion_field_degree(e1, 5);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::EllEqualsChar);
    }
}

TEST_CASE("membership reports") {
    auto e1 = curve5(0, 0, 0, 0, 1);
    auto r1 = is_proell_member(e1, 7);
    CHECK(r1.f == 6);
    CHECK(r1.m == 6);
    CHECK(r1.ratio == 1);
    CHECK(r1.verdict);

    auto e2 = curve5(0, 0, 0, 1, 1);
    auto r2 = is_proell_member(e2, 7);
    CHECK(r2.f == 6);
    CHECK(r2.m == 48);
    CHECK(r2.ratio == 8);
    CHECK(!r2.verdict);

    // full rational 2-torsion with q = 1 mod 2: f = m = 1, verdict true
    auto e3 = curve5(0, 0, 0, -1, 0);
    auto r3 = is_proell_member(e3, 2);
    CHECK(r3.f == 1);
    CHECK(r3.m == 1);
    CHECK(r3.verdict);

    // Weil-pairing consequence f | m on a sample of curves
    auto rng = test_rng(3);
    std::uniform_int_distribution<int64_t> d(0, 4);
    int built = 0;
    while (built < 25) {
        try {
            auto e = curve5(d(rng), d(rng), d(rng), d(rng), d(rng));
            for (int64_t ell : {2, 3, 7}) {
                auto r = is_proell_member(e, ell);
                CHECK(r.m % r.f == 0);
                CHECK(r.verdict == is_power_of(r.m / r.f, ell));
            }
            ++built;
        } catch (const Error&) {
            continue; // singular pick
        }
    }
}

TEST_CASE("analytic degree equals enumeration oracle on random F_5 curves") {
    auto rng = test_rng(4);
    std::uniform_int_distribution<int64_t> d(0, 4);
    int built = 0;
    while (built < 30) {
        try {
            auto e = curve5(d(rng), d(rng), d(rng), d(rng), d(rng));
            for (int64_t ell : {2, 3}) {
                auto td = torsion_field_degree(e, ell);
                auto oracle = torsion_degree_enumeration_oracle(e, ell);
                if (oracle.has_value())
                    CHECK(td.m == *oracle);
                else
                    CHECK(algebra::checked_pow(5, static_cast<int>(td.m)) > 1000000);
            }
            ++built;
        } catch (const Error&) {
            continue;
        }
    }
}

TEST_CASE("oracle equivalence sampled over F_7, F_11, F_13") {
    auto rng = test_rng(9);
    for (int64_t q : {7, 11, 13}) {
        PrimeField fq(q);
        std::uniform_int_distribution<int64_t> d(0, q - 1);
        int built = 0;
        while (built < 8) {
            std::optional<WeierstrassCurve<PrimeField>> e;
            try {
                e.emplace(fq, d(rng), d(rng), d(rng), d(rng), d(rng));
            } catch (const Error&) {
                continue;
            }
            for (int64_t ell : {2, 3, 5, 7}) {
                if (ell == q) continue;
                auto td = torsion_field_degree(*e, ell);
                auto oracle = torsion_degree_enumeration_oracle(*e, ell);
                if (oracle.has_value()) CHECK(td.m == *oracle);
            }
            ++built;
        }
    }
}

TEST_CASE("ell-power tower spot-check above the mod-ell layer") {
    // [F_q(E[ell^2]) : F_q(E[ell])] must be a power of ell
    for (int64_t ell : {2, 3}) {
        int checked = 0;
        auto rng = test_rng(5 + ell);
        std::uniform_int_distribution<int64_t> d(0, 4);
        while (checked < 8) {
            try {
                auto e = curve5(d(rng), d(rng), d(rng), d(rng), d(rng));
                auto m1 = torsion_degree_enumeration_oracle(e, ell);
                auto m2 = prime_power_torsion_degree_oracle(e, ell, 2);
                if (!m1 || !m2) continue;
                CHECK(*m2 % *m1 == 0);
                CHECK(is_power_of(*m2 / *m1, ell));
                ++checked;
            } catch (const Error&) {
                continue;
            }
        }
    }
}

TEST_CASE("supersingular residues: examples and dual-route checks") {
    auto c1 = supersingular_residue(5, 7, 0);
    CHECK(c1.f == 6);
    CHECK(c1.branch == FClass::TwoMod4);
    CHECK(c1.residue == 0);
    CHECK(15876 % 7 == 0); // 7 | #E(F_{5^6})

    auto c2 = supersingular_residue(5, 13, 0);
    CHECK(c2.f == 4);
    CHECK(c2.branch == FClass::ZeroMod4);
    CHECK(c2.residue == 4);
    CHECK(576 % 13 == 4);

    auto c3 = supersingular_residue(5, 11, 0);
    CHECK(c3.f == 5);
    CHECK(c3.branch == FClass::Odd);
    CHECK(c3.residue == 2);
    CHECK(3126 % 11 == 2);

    // the display formula and the s_m recurrence agree mod ell, including
    // large e where only the mod route is available
    for (int64_t p : {5, 7, 13}) {
        for (int64_t ell : primes_up_to(60)) {
            if (ell <= p) continue;
            for (int64_t e = 0; e <= 3; ++e) {
                auto sc = supersingular_residue(p, ell, e);
                uint64_t m = supersingular_extension_degree(p, ell, e);
                CHECK(supersingular_count_mod(p, ell, e, ell) == sc.residue);
                CHECK(count_in_extension_mod(p, 0, m, ell) == sc.residue);
            }
        }
    }

    CHECK_THROWS_AS(supersingular_residue(7, 5, 0), Error); // ell <= p
    CHECK_THROWS_AS(supersingular_residue(4, 7, 0), Error);
}
