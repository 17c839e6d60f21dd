#include <doctest.h>

#include "linecast/algorithms.hpp"
#include "linecast/bounds.hpp"

using namespace linecast;

TEST_CASE("Alg1") {
    CompleteKTree t(3, 2);
    Schedule s = alg1(t, t.root());
    CHECK(validate(s, 4).ok);
    CHECK(Rational(total_cost(s)) <= Rational(16));

    CompleteKTree star(2, 1);
    Schedule s2 = alg1(star, star.root());
    CHECK(total_time(s2) == 2);
    CHECK(total_cost(s2) == 2);

    CompleteKTree t7(7, 2);
    Schedule s7 = alg1(t7, t7.root());
    CHECK(validate(s7, 6).ok);
    CHECK(total_cost(s7) <= 88);
}

TEST_CASE("Alg2") {
    CompleteKTree t(5, 3);
    Schedule s = alg2(t, t.root());
    CHECK(validate(s, 8).ok);
    // documented slack: (k^(r-1) - 1)/(k - 1) = 6
    CHECK(total_cost(s) <= alg2_upper(5, 3).floor() + 6);

    CompleteKTree small(2, 2);
    CHECK(validate(alg2(small, small.root())).ok);
}

TEST_CASE("Alg3") {
    CompleteKTree t(2, 2);
    Schedule s = alg3(t, t.root());
    CHECK(validate(s, 3).ok);
    CHECK(total_cost(s) <= 14);

    CompleteKTree t3(3, 2);
    Schedule s3 = alg3(t3, t3.root());
    CHECK(validate(s3, 4).ok);
    CHECK(total_cost(s3) <= 33);

    CompleteKTree t1(2, 1);
    Schedule s1 = alg3(t1, t1.root());
    CHECK(total_time(s1) == 2);
    CHECK(total_cost(s1) <= 2);
}

TEST_CASE("dispatcher picks the algorithm") {
    CHECK(lbckt(CompleteKTree(3, 2), CompleteKTree(3, 2).root()).algorithm_tag() == "alg1");
    CHECK(lbckt(CompleteKTree(2, 2), CompleteKTree(2, 2).root()).algorithm_tag() == "alg3");
    CHECK(lbckt(CompleteKTree(5, 3), CompleteKTree(5, 3).root()).algorithm_tag() == "alg2");
}

TEST_CASE("every algorithm from every originator on small trees") {
    for (int k = 2; k <= 4; ++k)
        for (int r = 1; r <= 3; ++r) {
            CompleteKTree t(k, r);
            for (VertexId u = 1; u <= t.size(); ++u)
                for (DispatchCase c : {DispatchCase::Alg1, DispatchCase::Alg2, DispatchCase::Alg3}) {
                    Schedule s = run_case(t, t.vertex(u), c);
                    CAPTURE(k);
                    CAPTURE(r);
                    CAPTURE(u);
                    CAPTURE(static_cast<int>(c));
                    CHECK(validate(s).ok);
                    if (!has_time_deviation(s)) CHECK(total_time(s) <= time_limit(t));
                }
        }
}

TEST_CASE("time deviations are flagged") {
    // a leaf originator needs an extra hop up before Alg1's stars start
    CompleteKTree t(2, 3);
    bool flagged_when_late = true;
    for (VertexId u = 1; u <= t.size(); ++u) {
        Schedule s = alg1(t, t.vertex(u));
        if (total_time(s) > time_limit(t)) flagged_when_late = flagged_when_late && has_time_deviation(s);
    }
    CHECK(flagged_when_late);
}
