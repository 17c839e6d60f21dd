#include <doctest.h>

#include "linecast/algorithms.hpp"
#include "linecast/schedule.hpp"

using namespace linecast;

namespace {
Schedule three(VertexId u, std::vector<std::vector<std::pair<VertexId, VertexId>>> steps) {
    CompleteKTree t(2, 1);
    Schedule s(t, t.vertex(u));
    for (const auto& st : steps) {
        std::vector<Call> calls;
        for (auto [a, b] : st) calls.push_back(make_call(t, a, b));
        s.append_step(std::move(calls));
    }
    return s;
}
} // namespace

TEST_CASE("building steps") {
    Schedule s = three(1, {{{1, 2}}});
    CHECK(s.steps().size() == 1);
    s.append_step({});
    CHECK(s.steps().size() == 2);
    Call c = make_call(s.tree(), 2, 3);
    CHECK(c.cost == 2);
    CHECK(c.path.size() == 2);
    s.add_calls(5, {c});
    CHECK(s.steps().size() == 5);
    CHECK(s.steps()[4].t == 5);
}

TEST_CASE("valid three-vertex broadcast") {
    Schedule s = three(1, {{{1, 2}}, {{1, 3}}});
    ValidationReport rep = validate(s);
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
    CHECK(rep.informed_timeline == std::vector<std::pair<int, std::int64_t>>{{1, 2}, {2, 3}});
    CHECK(total_cost(s) == 2);
    CHECK(total_time(s) == 2);
    CHECK(informed_after(s, 0) == std::vector<VertexId>{1});
    CHECK(informed_after(s, 1) == std::vector<VertexId>{1, 2});
    CHECK(informed_after(s, 2).size() == 3);
}

TEST_CASE("double receive and shared edge") {
    Schedule s = three(1, {{{1, 2}}, {{2, 3}, {1, 3}}});
    ValidationReport rep = validate(s);
    CHECK_FALSE(rep.ok);
    CHECK(rep.has(ViolationKind::DoubleReceive));
    CHECK(rep.has(ViolationKind::EdgeConflict));
    bool edge3 = false;
    for (const auto& v : rep.violations) {
        CHECK(v.step == 2);
        if (v.kind == ViolationKind::EdgeConflict) edge3 = v.detail.find("child-3") != std::string::npos;
    }
    CHECK(edge3);
}

TEST_CASE("uninformed source") {
    Schedule s = three(1, {{{2, 3}}});
    ValidationReport rep = validate(s);
    CHECK(rep.has(ViolationKind::UninformedSource));
    CHECK(rep.violations.front().step == 1);
}

TEST_CASE("multi send, coverage and budget") {
    Schedule s = three(1, {{{1, 2}}});
    CHECK(validate(s).has(ViolationKind::IncompleteCoverage));
    Schedule ok = three(1, {{{1, 2}}, {{1, 3}}});
    CHECK(validate(ok, 2).ok);
    CHECK(validate(ok, 1).has(ViolationKind::TimeBudgetExceeded));

    CompleteKTree t(2, 2);
    Schedule m(t, t.root());
    m.append_step({make_call(t, 1, 2)});
    m.append_step({make_call(t, 1, 3), make_call(t, 1, 4)});
    CHECK(validate(m).has(ViolationKind::MultiSend));
}

TEST_CASE("malformed calls") {
    CompleteKTree t(2, 1);
    Schedule s(t, t.root());
    Call c = make_call(t, 1, 2);
    c.cost = 5;
    s.append_step({c});
    CHECK(validate(s).has(ViolationKind::MalformedCall));
}

TEST_CASE("costs and times of trivial schedules") {
    CompleteKTree t(2, 1);
    Schedule empty(t, t.root());
    CHECK(total_cost(empty) == 0);
    CHECK(total_time(empty) == 0);
    CHECK(total_cost(three(2, {{{2, 1}}, {{1, 3}}})) == 2);
    CHECK(validate(three(2, {{{2, 1}}, {{1, 3}}})).ok);
    CHECK(time_limit(CompleteKTree(2, 2)) == 3);
}
