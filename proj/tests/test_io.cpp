#include <doctest.h>

#include <json.hpp>

#include "linecast/algorithms.hpp"
#include "linecast/error.hpp"
#include "linecast/io.hpp"

using namespace linecast;

namespace {
bool same_report(const ValidationReport& a, const ValidationReport& b) {
    if (a.ok != b.ok || a.informed_timeline != b.informed_timeline || a.violations.size() != b.violations.size())
        return false;
    for (std::size_t i = 0; i < a.violations.size(); ++i)
        if (a.violations[i].step != b.violations[i].step || a.violations[i].kind != b.violations[i].kind ||
            a.violations[i].detail != b.violations[i].detail)
            return false;
    return true;
}
} // namespace

TEST_CASE("JSON fields") {
    CompleteKTree t(2, 2);
    Schedule s = lbckt(t, t.root());
    auto j = nlohmann::json::parse(to_json(s, true));
    CHECK(j["k"] == 2);
    CHECK(j["r"] == 2);
    CHECK(j["n"] == 7);
    CHECK(j["originator"] == 1);
    CHECK(j["algorithm"] == "alg3");
    CHECK(j["total_time"] == 3);
    CHECK(j["valid"] == true);
    CHECK(j["deviations"].is_array());
    CHECK(j["steps"][0]["t"] == 1);
    CHECK(j["steps"][0]["calls"][0].contains("path"));
}

TEST_CASE("JSON round trip keeps the validation report") {
    for (auto [k, r] : {std::pair{2, 2}, {3, 2}, {5, 3}, {2, 4}}) {
        CompleteKTree t(k, r);
        for (VertexId u : {VertexId{1}, t.size()}) {
            for (Schedule s : {lbckt(t, t.vertex(u)), tolevel_schedule(t, r, t.vertex(u)),
                               fromlevel_schedule(t, 1, t.vertex(u))}) {
                ValidationReport before = validate(s);
                std::string text = to_json(s, before.ok);
                Schedule back = from_json(text);
                CHECK(same_report(before, validate(back)));
                CHECK(to_json(back, before.ok) == text);
            }
        }
    }
}

TEST_CASE("tampered JSON fails validation") {
    CompleteKTree t(2, 2);
    auto j = nlohmann::json::parse(to_json(lbckt(t, t.root()), true));
    j["steps"][0]["calls"][0]["cost"] = 9;
    CHECK(validate(from_json(j.dump())).has(ViolationKind::MalformedCall));

    auto j2 = nlohmann::json::parse(to_json(lbckt(t, t.root()), true));
    j2["steps"][1]["calls"][0]["dst"] = 42;
    CHECK(validate(from_json(j2.dump())).has(ViolationKind::MalformedCall));
}

TEST_CASE("bad JSON") {
    auto kind = [](const std::string& text) {
        try {
            from_json(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidParams;
    };
    CHECK(kind("{") == ErrorKind::Parse);
    CHECK(kind(R"({"k":2})") == ErrorKind::Parse);
    CHECK(kind(R"({"k":2,"r":1,"n":4,"originator":1,"steps":[]})") == ErrorKind::Parse);
    CHECK(kind(R"({"k":2,"r":1,"originator":9,"steps":[]})") == ErrorKind::Parse);
}

TEST_CASE("trace") {
    CompleteKTree t(2, 1);
    Schedule s = lbckt(t, t.root());
    std::string text = to_trace(s, validate(s));
    CHECK(text.find("t=1") != std::string::npos);
    CHECK(text.find("1 -> 2") != std::string::npos);
    CHECK(text.find("valid=true") != std::string::npos);
}
