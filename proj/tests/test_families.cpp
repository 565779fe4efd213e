#include <doctest.h>

#include "elltor/families.hpp"
#include "test_support.hpp"

using namespace elltor;
using namespace elltor::algebra;
using namespace elltor::families;

namespace {

RF random_nonconstant_f(const RFField& k, std::mt19937_64& rng) {
    const PrimeField& fp = k.coeff_field();
    std::uniform_int_distribution<int64_t> coeff(0, fp.modulus() - 1);
    std::uniform_int_distribution<int> deg(1, 2);
    for (;;) {
        int dn = deg(rng), dd = deg(rng) - 1;
        std::vector<PrimeField::Element> nc, dc;
        for (int i = 0; i <= dn; ++i) nc.push_back(fp.from_int(coeff(rng)));
        for (int i = 0; i <= dd; ++i) dc.push_back(fp.from_int(coeff(rng)));
        Polynomial<PrimeField> num(fp, nc), den(fp, dc);
        if (den.is_zero()) continue;
        RF f(num, den);
        if (f.is_constant()) continue;
        return f;
    }
}

} // namespace

TEST_CASE("order-7 family: construction and verification") {
    RFField k5{PrimeField(5)};
    auto rep = verify_seven(5, k5.variable());
    CHECK(rep.delta_matches);
    CHECK(rep.c4_matches);
    CHECK(rep.j_nonconstant);
    REQUIRE(rep.order.has_value());
    CHECK(*rep.order == 7);

    // f = t^2 over F_13
    RFField k13{PrimeField(13)};
    auto t13 = k13.variable();
    auto rep13 = verify_seven(13, k13.mul(t13, t13));
    CHECK(rep13.delta_matches);
    CHECK(rep13.c4_matches);
    CHECK(rep13.j_nonconstant);
    CHECK(*rep13.order == 7);

    // f = (t+1)/t over F_13
    auto f = k13.div(k13.add(t13, k13.one()), t13);
    CHECK(verify_seven(13, f).delta_matches);

    // char 3 is allowed, only char 7 is excluded
    RFField k3{PrimeField(3)};
    auto rep3 = verify_seven(3, k3.variable());
    CHECK(rep3.delta_matches);
    CHECK(rep3.c4_matches);
    CHECK(rep3.j_nonconstant);
}

TEST_CASE("order-7 family: rejections") {
    RFField k7{PrimeField(7)};
    CHECK_THROWS_AS(build_seven(7, k7.variable()), Error);
    try {
        build_seven(7, k7.variable());
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CharSeven);
    }

    RFField k5{PrimeField(5)};
    CHECK_THROWS_AS(build_seven(5, k5.from_int(2)), Error); // constant f

    // f over the wrong prime field
    RFField k13{PrimeField(13)};
    CHECK_THROWS_AS(build_seven(5, k13.variable()), Error);
}

TEST_CASE("order-7 family: randomized members") {
    auto rng = test_rng(21);
    for (int64_t p : {3, 5, 13}) {
        RFField k{PrimeField(p)};
        for (int i = 0; i < 10; ++i) {
            RF f = random_nonconstant_f(k, rng);
            auto rep = verify_seven(p, f);
            CHECK(rep.delta_matches);
            CHECK(rep.c4_matches);
            CHECK(rep.j_nonconstant);
            REQUIRE(rep.order.has_value());
            CHECK(*rep.order == 7);
        }
    }
}

TEST_CASE("order-11 family over X_1(11)") {
    for (auto [p, n] : std::vector<std::pair<int64_t, int64_t>>{
             {3, 0}, {3, 1}, {3, 2}, {5, 0}, {5, 1}, {7, 0}, {7, 1}}) {
        auto rep = verify_eleven(p, n);
        CHECK(rep.order_is_11);
        CHECK(rep.j_nonconstant);
        REQUIRE(rep.order.has_value());
        CHECK(*rep.order == 11);
    }
}

TEST_CASE("order-11 family: rejections") {
    CHECK_THROWS_AS(build_eleven(11, 0), Error);
    try {
        build_eleven(11, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CharEleven);
    }
    CHECK_THROWS_AS(build_eleven(13, 3), Error); // 13^3 over the twist guard
    try {
        build_eleven(13, 3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ExponentGuard);
    }
    CHECK_THROWS_AS(build_eleven(3, -1), Error);
}
