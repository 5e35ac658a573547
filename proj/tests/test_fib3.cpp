#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/dimvec.hpp"
#include "kron/fib3.hpp"

using kron::DimVec;
using kron::Int;
using kron::KroneckerContext;
using namespace kron::fib3;

TEST_CASE("fibonacci values") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(10) == 55);
    CHECK(fibonacci(14) == 377);
    CHECK(fibonacci(-1) == 1);
    CHECK_THROWS_AS(fibonacci(-2), kron::PreconditionError);
    for (long k = 1; k <= 300; ++k)
        CHECK(fibonacci(k + 1) == fibonacci(k) + fibonacci(k - 1));
}

TEST_CASE("tau_power_closed_form examples") {
    CHECK(tau_power_closed_form({1, 1}, -2) == DimVec{13, 34});
    CHECK(tau_power_closed_form({2, 1}, -1) == DimVec{1, 2});
    CHECK(tau_power_closed_form({1, 1}, 1) == DimVec{5, 2});
    CHECK(tau_power_closed_form({7, 3}, 0) == DimVec{7, 3});
    CHECK_THROWS_AS(tau_power_closed_form({0, 1}, 1), kron::NegativeEntry);
}

TEST_CASE("closed form equals Coxeter iteration") {
    KroneckerContext ctx(3);
    for (DimVec v : {DimVec{1, 1}, DimVec{1, 2}, DimVec{2, 5}, DimVec{3, 8}, DimVec{4, 7}})
        for (long k = -12; k <= 12; ++k) {
            bool it_throws = false, cf_throws = false;
            DimVec it, cf;
            try {
                it = ctx.coxeter_apply(v, k);
            } catch (const kron::OrbitEscape&) {
                it_throws = true;
            }
            try {
                cf = tau_power_closed_form(v, k);
            } catch (const kron::NegativeEntry&) {
                cf_throws = true;
            }
            REQUIRE(it_throws == cf_throws);
            if (!it_throws) REQUIRE(it == cf);
        }
}

TEST_CASE("quasi_length_dim") {
    CHECK(quasi_length_dim(1) == DimVec{1, 1});
    CHECK(quasi_length_dim(2) == DimVec{6, 3});
    CHECK(quasi_length_dim(4) == DimVec{42, 21});
    CHECK(quasi_length_dim(5) == DimVec{55, 55});
    // telescoped tau-sum, m <= 30
    for (int m = 1; m <= 30; ++m) {
        DimVec sum{0, 0};
        int lo = -(m / 2);
        for (int s = lo; s < lo + m; ++s)
            sum = sum + tau_power_closed_form({1, 1}, -s);
        CHECK(sum == quasi_length_dim(m));
    }
}

TEST_CASE("component grid window") {
    ComponentGrid g({1, 1}, 4, 5);
    CHECK(g.at(1, 0) == DimVec{1, 1});
    CHECK(g.at(1, -1) == DimVec{5, 2});
    CHECK(g.at(1, 1) == DimVec{2, 5});
    CHECK(g.at(2, 0) == DimVec{3, 6});
    CHECK(g.at(2, -1) == DimVec{6, 3});
    CHECK(g.at(2, -2) == DimVec{39, 15});
    CHECK(g.at(2, 1) == DimVec{15, 39});
    CHECK(g.at(3, -1) == DimVec{8, 8});
    CHECK(g.at(4, -2) == DimVec{42, 21});
    CHECK(g.at(5, -2) == DimVec{55, 55});
    CHECK(g.at(5, -3) == DimVec{275, 110});
    CHECK(g.contains_value({34, 13}));
    CHECK(g.contains_value({13, 34}));
    CHECK_FALSE(g.contains_value({4, 4}));
    CHECK_THROWS_AS(g.at(6, 0), kron::PreconditionError);
    CHECK_THROWS_AS(g.at(1, 5), kron::PreconditionError);
    // radius 0: single column
    ComponentGrid g0({1, 1}, 0, 3);
    CHECK(g0.at(2, 0) == DimVec{3, 6});
    // the (1,2) family grid
    ComponentGrid g12({1, 2}, 3, 3);
    CHECK(g12.at(1, 1) == DimVec{5, 13});
    CHECK(g12.at(2, 0) == DimVec{6, 15});
}

TEST_CASE("mesh additivity") {
    // Each entry of quasi-length j >= 3 equals the sum of its two lower
    // neighbours minus the entry two rows below (Auslander-Reiten mesh).
    ComponentGrid g({1, 1}, 6, 6);
    for (int j = 3; j <= 6; ++j)
        for (int t = -5; t <= 4; ++t)
            CHECK(g.at(j, t) == g.at(j - 1, t) + g.at(j - 1, t + 1) - g.at(j - 2, t + 1));
}

TEST_CASE("same_length_mirror") {
    CHECK(same_length_mirror({1, 1}, {5, 2}, {2, 5}));
    CHECK(same_length_mirror({1, 1}, {42, 21}, {21, 42}));
    CHECK_FALSE(same_length_mirror({1, 1}, {3, 6}, {8, 8}));
    CHECK(same_length_mirror({1, 1}, {1, 1}, {1, 1}));  // self-mirror at the center
    CHECK(same_length_mirror({1, 1}, {6, 3}, {3, 6}));
    CHECK_THROWS_AS(same_length_mirror({1, 1}, {4, 4}, {4, 4}, 4, 4),
                    kron::PreconditionError);
}

TEST_CASE("fib identity") {
    CHECK(fib_identity_check(4, 5));
    CHECK(fib_identity_check(1, 1));
    CHECK(fib_identity_check(10, 7));
    for (long r = 1; r <= 200; ++r)
        for (long s = 1; s <= 200; ++s)
            REQUIRE(fib_identity_check(r, s));
}

TEST_CASE("orbit comparison inequalities for the X_m sequence") {
    // udim tau^{-i} X_m < udim tau^{-(i+(m+1)/2)} (1,1) componentwise,
    // odd m <= 15; for even m the shifted exponent is i + m/2 + 1.
    for (int m = 1; m <= 15; ++m) {
        DimVec xm = quasi_length_dim(m);
        int shift = (m % 2 == 1) ? (m + 1) / 2 : m / 2 + 1;
        for (int i = 0; i <= 12; ++i) {
            DimVec lhs = tau_power_closed_form(xm, -i);
            DimVec rhs = tau_power_closed_form({1, 1}, -(i + shift));
            CHECK(lhs.strictly_below(rhs));
        }
    }
}
