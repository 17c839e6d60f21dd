#include <doctest.h>

#include "linecast/bounds.hpp"
#include "linecast/error.hpp"
#include "linecast/ktree.hpp"
#include "linecast/rational.hpp"

using namespace linecast;

TEST_CASE("rational arithmetic") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(a.floor() == -2);
    CHECK(a.ceil() == -1);
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK(Rational(99, 9).str() == "11");
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("farley") {
    CHECK(farley_bound(2, 2) == Rational(18));
    CHECK(farley_bound(3, 2) == Rational(48));
}

TEST_CASE("lower bound") {
    CHECK(cost_lower_bound(3, 2) == Rational(11));
    CHECK(cost_lower_bound(2, 2) == Rational(6));
    CHECK(cost_lower_bound(2, 1) == Rational(2));
    // (2 - 4/9 - 2/3)*4 - 2/9 + 2/3 - 1 is exactly 3
    CHECK(cost_lower_bound(3, 1) == Rational(3));
    CHECK(cost_lower_bound(2, 2, true) == Rational(5));
}

TEST_CASE("algorithm upper bounds") {
    CHECK(alg1_upper(3, 2) == Rational(16));
    CHECK(alg1_upper(2, 1) == Rational(2));
    CHECK(alg1_upper(7, 2) == Rational(88));
    CHECK(alg2_upper(5, 3) == Rational(3861, 16));
    CHECK(alg2_upper(5, 3).str() == "3861/16");
    CHECK(alg2_upper(2, 2) > cost_lower_bound(2, 2));
    CHECK_THROWS(alg2_upper(3, 1));
    CHECK(alg3_upper(2, 2) == Rational(14));
    CHECK(alg3_upper(3, 2) == Rational(33));
    CHECK(alg3_upper(2, 1) == Rational(2));
}

TEST_CASE("procedure costs") {
    CHECK(tolevel_upper(2, 2) == Rational(12));
    CHECK(tolevel_upper(2, 1) == Rational(2));
    CHECK(tolevel_upper(3, 1) == Rational(6));
    CHECK(fromlevel_cost(2, 2) == 2);
    CHECK(fromlevel_cost(3, 2) == 3);
    CHECK(fromlevel_cost(2, 3) == 8);
    CHECK(fromlevel_cost(2, 2, false) == 4);
    for (int k = 2; k <= 8; ++k)
        for (int j = 1; j <= 5; ++j) CHECK(fromlevel_cost(k, j) == fromlevel_cost_closed(k, j));
    CHECK(eq3_round_cost(2, 2, 1) == 0);
    CHECK(eq3_round_cost(2, 2, 2) == 2);
}

TEST_CASE("round costs stay under the ToLevel bound") {
    for (int k = 2; k <= 8; ++k)
        for (int j = 1; j <= 4; ++j) {
            std::int64_t sum = 0;
            for (int m = 1; m <= j; ++m) sum += eq3_round_cost(k, j, m);
            sum += 2 * j * ceil_log2(checked_pow(k, j));
            CHECK(Rational(sum) <= tolevel_upper(k, j));
        }
}

TEST_CASE("dispatch") {
    CHECK(lbckt_case(3, 2) == DispatchCase::Alg1);
    CHECK(lbckt_case(5, 3) == DispatchCase::Alg2);
    CHECK(lbckt_case(2, 2) == DispatchCase::Alg3);
    CHECK(dispatched_upper(2, 2) == Rational(14));
}

TEST_CASE("bounds report") {
    BoundsReport b = bounds_report(2, 2);
    CHECK(b.n == 7);
    CHECK(b.farley == Rational(18));
    CHECK(b.lower == Rational(6));
    CHECK(b.dispatched == DispatchCase::Alg3);
    CHECK(b.alg3 == Rational(14));
    BoundsReport c = bounds_report(3, 2);
    CHECK(c.n == 13);
    CHECK(c.dispatched == DispatchCase::Alg1);
    CHECK(c.alg1 == Rational(16));
    BoundsReport d = bounds_report(5, 3);
    CHECK(d.n == 156);
    CHECK(d.dispatched == DispatchCase::Alg2);
    CHECK(d.dispatched_upper.to_double() == doctest::Approx(241.3125));
}
