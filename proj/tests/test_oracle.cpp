#include <doctest.h>

#include "linecast/error.hpp"
#include "linecast/oracle.hpp"

using namespace linecast;

TEST_CASE("exact optima on tiny trees") {
    CompleteKTree t2(2, 1), t3(3, 1), t7(2, 2);
    CHECK(optimal_cost(t2, t2.root()).cost == 2);
    CHECK(optimal_cost(t2, t2.vertex(2)).cost == 2);
    CHECK(optimal_cost(t3, t3.root()).cost == 4);
    OracleResult r = optimal_cost(t7, t7.root());
    CHECK(r.cost >= 6);
    CHECK(r.cost <= 14);
    CHECK(r.cost == 7);
}

TEST_CASE("witness schedules validate") {
    for (auto [k, r] : {std::pair{2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {2, 2}}) {
        CompleteKTree t(k, r);
        for (VertexId u = 1; u <= t.size(); ++u) {
            OracleResult res = optimal_cost(t, t.vertex(u));
            CHECK(validate(res.witness, res.budget).ok);
            CHECK(total_cost(res.witness) == res.cost);
        }
    }
}

TEST_CASE("more time never costs more") {
    CompleteKTree t(2, 2);
    for (VertexId u = 1; u <= t.size(); ++u) {
        std::int64_t prev = optimal_cost(t, t.vertex(u), 3).cost;
        for (int b = 4; b <= 7; ++b) {
            std::int64_t cur = optimal_cost(t, t.vertex(u), b).cost;
            CHECK(cur <= prev);
            prev = cur;
        }
        CHECK(optimal_cost(t, t.vertex(u), static_cast<int>(t.size())).cost == t.size() - 1);
    }
}

TEST_CASE("cap and budget errors") {
    CompleteKTree big(3, 2);
    try {
        optimal_cost(big, big.root());
        FAIL("cap");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
    CompleteKTree t(2, 2);
    CHECK_THROWS(optimal_cost(t, t.root(), 2));
}

TEST_CASE("bracket") {
    CompleteKTree t(2, 1);
    BracketReport b = check_bracket(t, t.root());
    CHECK(b.ok());
    CHECK(b.optimal == 2);

    CompleteKTree t3(3, 1);
    BracketReport c = check_bracket(t3, t3.root());
    CHECK(c.ok());
    CHECK(c.lower <= Rational(4));

    CompleteKTree t7(2, 2);
    BracketReport d = check_bracket(t7, t7.root());
    CHECK(d.ok());
    CHECK(d.lower == Rational(6));
    CHECK(d.upper == Rational(14));
}
