#include "linecast/io.hpp"

#include <sstream>

#include <json.hpp>

#include "linecast/algorithms.hpp"
#include "linecast/error.hpp"

namespace linecast {

using Json = nlohmann::ordered_json;

std::string to_json(const Schedule& s, bool valid) {
    const CompleteKTree& tree = s.tree();
    Json j;
    j["k"] = tree.k();
    j["r"] = tree.height();
    j["n"] = tree.size();
    j["originator"] = s.originator().id;
    j["algorithm"] = s.algorithm_tag();
    Json steps = Json::array();
    for (const Step& st : s.steps()) {
        Json calls = Json::array();
        for (const Call& c : st.calls) {
            Json path = Json::array();
            for (const Edge& e : c.path) path.push_back(e.child);
            calls.push_back(Json{{"src", c.source.id}, {"dst", c.dest.id}, {"path", path}, {"cost", c.cost}});
        }
        steps.push_back(Json{{"t", st.t}, {"calls", calls}});
    }
    j["steps"] = steps;
    j["total_time"] = total_time(s);
    j["total_cost"] = total_cost(s);
    j["valid"] = valid;
    Json devs = Json::array();
    for (const Deviation& d : s.deviations()) devs.push_back(deviation_text(d));
    j["deviations"] = devs;
    return j.dump(2) + "\n";
}

namespace {

VertexRef ref_for(const CompleteKTree& tree, VertexId id) {
    // out-of-tree ids survive parsing and fail validation instead
    return tree.contains(id) ? tree.vertex(id) : VertexRef{-1, 0, id};
}

Deviation parse_deviation(const std::string& text) {
    Deviation d;
    auto colon = text.find(':');
    d.code = text.substr(0, colon);
    if (colon != std::string::npos) d.detail = text.substr(colon + 1);
    d.kind = d.code.starts_with("cost_") ? DeviationKind::CostSlack : DeviationKind::ExtraStep;
    return d;
}

} // namespace

Schedule from_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("schedule JSON: ") + e.what());
    }
    try {
        CompleteKTree tree(j.at("k").get<int>(), j.at("r").get<int>());
        if (j.contains("n") && j["n"].get<std::int64_t>() != tree.size())
            throw Error(ErrorKind::Parse, "schedule JSON: n does not match k and r");
        VertexId u = j.at("originator").get<VertexId>();
        if (!tree.contains(u)) throw Error(ErrorKind::Parse, "schedule JSON: originator outside the tree");
        Schedule s(tree, tree.vertex(u), j.value("algorithm", std::string{}));
        for (const Json& st : j.at("steps")) {
            int t = st.at("t").get<int>();
            if (t < 1) throw Error(ErrorKind::Parse, "schedule JSON: step times start at 1");
            std::vector<Call> calls;
            for (const Json& c : st.at("calls")) {
                Call call;
                call.source = ref_for(tree, c.at("src").get<VertexId>());
                call.dest = ref_for(tree, c.at("dst").get<VertexId>());
                for (const Json& e : c.at("path")) call.path.push_back(Edge{e.get<VertexId>()});
                call.cost = c.at("cost").get<int>();
                calls.push_back(std::move(call));
            }
            s.add_calls(t, std::move(calls));
        }
        for (const Json& d : j.value("deviations", Json::array())) s.add_deviation(parse_deviation(d.get<std::string>()));
        s.set_coverage_target(coverage_for(tree, s.algorithm_tag(), s.originator()));
        return s;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("schedule JSON: ") + e.what());
    }
}

std::string to_trace(const Schedule& s, const ValidationReport& report) {
    const CompleteKTree& tree = s.tree();
    std::ostringstream out;
    out << "k=" << tree.k() << " r=" << tree.height() << " n=" << tree.size()
        << " originator=" << s.originator().id << " algorithm=" << s.algorithm_tag() << "\n";
    for (const Step& st : s.steps()) {
        std::int64_t cost = 0;
        for (const Call& c : st.calls) cost += c.cost;
        out << "t=" << st.t << "  calls=" << st.calls.size() << " cost=" << cost << "\n";
        for (const Call& c : st.calls) {
            out << "  " << c.source.id << " -> " << c.dest.id << "  edges";
            for (const Edge& e : c.path) out << ' ' << e.child;
            out << "  (" << c.cost << ")\n";
        }
    }
    out << "total_time=" << total_time(s) << " total_cost=" << total_cost(s)
        << " valid=" << (report.ok ? "true" : "false") << "\n";
    for (const Violation& v : report.violations)
        out << "violation t=" << v.step << " " << to_string(v.kind) << ": " << v.detail << "\n";
    for (const Deviation& d : s.deviations()) out << "deviation " << deviation_text(d) << "\n";
    return out.str();
}

} // namespace linecast
