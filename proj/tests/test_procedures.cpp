#include <doctest.h>

#include <algorithm>

#include "linecast/algorithms.hpp"
#include "linecast/bounds.hpp"
#include "linecast/error.hpp"
#include "linecast/procedures.hpp"

using namespace linecast;

using Offsets = std::vector<std::int64_t>;

TEST_CASE("round sets") {
    CHECK(s_set(3, 2, 1) == Offsets{1, 4, 7});
    CHECK(s_set(2, 2, 1) == Offsets{1, 3});
    CHECK(s_set(2, 2, 2) == Offsets{1, 2, 3, 4});
    CHECK(s_prime_set(2, 2, 2) == Offsets{2, 4});
    CHECK(s_prime_set(3, 2, 1) == Offsets{1, 4, 7});
    CHECK(s_prime_set(3, 2, 2) == Offsets{2, 3, 5, 6, 8, 9});
    RoundPlan p = round_plan(3, 2);
    REQUIRE(p.rounds.size() == 2);
    CHECK(p.rounds[0].stride == 3);
    CHECK(p.rounds[1].targets.size() == 6);
}

TEST_CASE("up-call assignments") {
    UpcallPlan p = upcall_assignments(2, 2);
    REQUIRE(p.assignments.size() == 3);
    auto at = [&](int i, std::int64_t t) {
        for (const auto& a : p.assignments)
            if (a.i == i && a.t == t) return a;
        FAIL("missing assignment");
        return UpcallAssignment{};
    };
    CHECK(at(1, 1).leaf_offset == 1);
    CHECK(at(1, 1).target_offset == 1);
    CHECK(at(1, 2).leaf_offset == 3);
    CHECK(at(1, 2).target_offset == 2);
    CHECK(at(2, 1).leaf_offset == 2);
    CHECK(at(2, 1).target_level == 0);

    for (int k = 2; k <= 6; ++k) {
        UpcallPlan q = upcall_assignments(k, 1);
        REQUIRE(q.assignments.size() == 1);
        CHECK(q.assignments[0].leaf_offset == 1);
        CHECK(q.assignments[0].target_level == 0);
    }
    UpcallPlan r = upcall_assignments(3, 2);
    Offsets level1;
    for (const auto& a : r.assignments)
        if (a.i == 1) level1.push_back(a.leaf_offset);
        else CHECK(a.leaf_offset == 2);
    std::sort(level1.begin(), level1.end());
    CHECK(level1 == Offsets{1, 4, 7});
}

TEST_CASE("ToLevel small cases") {
    CompleteKTree t2(2, 1);
    Fragment f = to_level(t2, 1, t2.root());
    REQUIRE(f.steps.size() == 2);
    CHECK(f.steps[0].size() == 1);
    CHECK(f.steps[0][0].dest.id == 2);
    CHECK(f.steps[1][0].dest.id == 3);
    CHECK(f.cost() == 2);

    CompleteKTree t3(3, 1);
    Fragment g = to_level(t3, 1, t3.root());
    CHECK(g.steps.size() == 2);
    CHECK(g.cost() == 4);

    CompleteKTree t(2, 2);
    Fragment h = to_level(t, 2, t.root());
    CHECK(h.steps.size() == 3);
    CHECK(Rational(h.cost()) <= tolevel_upper(2, 2));
    CHECK_THROWS(to_level(t, 3, t.root()));
    CHECK_THROWS(to_level(t, 0, t.root()));
}

TEST_CASE("ToLevel schedules validate from every originator") {
    for (int k = 2; k <= 4; ++k)
        for (int r = 1; r <= 3; ++r) {
            CompleteKTree t(k, r);
            for (int j = 1; j <= r; ++j)
                for (VertexId u = 1; u <= t.size(); ++u) {
                    CAPTURE(k);
                    CAPTURE(r);
                    CAPTURE(j);
                    CAPTURE(u);
                    CHECK(validate(tolevel_schedule(t, j, t.vertex(u))).ok);
                    CHECK(validate(fromlevel_schedule(t, j, t.vertex(u))).ok);
                }
        }
}

TEST_CASE("FromLevel") {
    CompleteKTree t(2, 2);
    InformedSet all(t.size());
    for (VertexId v = 4; v <= 7; ++v) all.insert(v);
    all.insert(1);
    Fragment f = from_level(t, 2, t.root(), 4, all);
    REQUIRE(f.steps.size() == 1);
    CHECK(f.start_time == 4);
    CHECK(f.cost() == 2);
    std::vector<std::pair<VertexId, VertexId>> calls;
    for (const Call& c : f.steps[0]) calls.emplace_back(c.source.id, c.dest.id);
    std::sort(calls.begin(), calls.end());
    CHECK(calls == std::vector<std::pair<VertexId, VertexId>>{{4, 2}, {6, 3}});

    InformedSet leafy(t.size());
    for (VertexId v = 4; v <= 7; ++v) leafy.insert(v);
    CHECK(from_level(t, 2, t.vertex(7), 4, leafy).cost() == 4);

    InformedSet partial(t.size());
    partial.insert(4);
    try {
        from_level(t, 2, t.root(), 1, partial);
        FAIL("precondition");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionViolated);
    }

    CompleteKTree t3(3, 2);
    CHECK(fromlevel_schedule(t3, 2, t3.root()).steps().back().calls.size() == 3);
}
