#include "linecast/schedule.hpp"

#include <string>

#include "linecast/error.hpp"

namespace linecast {

Call make_call(const CompleteKTree& tree, VertexId src, VertexId dst) {
    Call c;
    c.source = tree.vertex(src);
    c.dest = tree.vertex(dst);
    c.path = tree.path(c.source, c.dest);
    c.cost = static_cast<int>(c.path.size());
    return c;
}

std::string deviation_text(const Deviation& d) {
    return d.detail.empty() ? d.code : d.code + ":" + d.detail;
}

Schedule::Schedule(CompleteKTree tree, VertexRef originator, std::string algorithm_tag)
    : tree_(std::move(tree)), originator_(originator), tag_(std::move(algorithm_tag)) {
    originator_ = tree_.vertex(originator.id);
}

Schedule& Schedule::append_step(std::vector<Call> calls) {
    int t = static_cast<int>(steps_.size()) + 1;
    steps_.push_back(Step{t, std::move(calls)});
    return *this;
}

void Schedule::add_calls(int t, std::vector<Call> calls) {
    if (t < 1) throw Error(ErrorKind::OutOfRange, "step times start at 1");
    while (static_cast<int>(steps_.size()) < t) append_step({});
    auto& dst = steps_[static_cast<std::size_t>(t - 1)].calls;
    for (auto& c : calls) dst.push_back(std::move(c));
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::EdgeConflict: return "EdgeConflict";
    case ViolationKind::UninformedSource: return "UninformedSource";
    case ViolationKind::DoubleReceive: return "DoubleReceive";
    case ViolationKind::MultiSend: return "MultiSend";
    case ViolationKind::IncompleteCoverage: return "IncompleteCoverage";
    case ViolationKind::TimeBudgetExceeded: return "TimeBudgetExceeded";
    case ViolationKind::MalformedCall: return "MalformedCall";
    }
    return "Unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
    for (const auto& v : violations)
        if (v.kind == kind) return true;
    return false;
}

namespace {

std::string vname(VertexId v) { return "v" + std::to_string(v); }

// A call is well formed when its endpoints exist, differ, and its path and
// cost are exactly the tree path between them.
bool well_formed(const CompleteKTree& tree, const Call& c, std::string& why) {
    if (!tree.contains(c.source.id) || !tree.contains(c.dest.id)) {
        why = "endpoint outside the tree";
        return false;
    }
    if (c.source.id == c.dest.id) {
        why = "source equals destination " + vname(c.source.id);
        return false;
    }
    auto expect = tree.path_ids(c.source.id, c.dest.id);
    bool same = expect.size() == c.path.size();
    for (std::size_t i = 0; same && i < expect.size(); ++i) same = expect[i] == c.path[i].child;
    if (!same) {
        why = "path of " + vname(c.source.id) + "->" + vname(c.dest.id) + " is not the tree path";
        return false;
    }
    if (c.cost != static_cast<int>(c.path.size())) {
        why = "cost of " + vname(c.source.id) + "->" + vname(c.dest.id) + " differs from path length";
        return false;
    }
    return true;
}

} // namespace

ValidationReport validate(const Schedule& s, std::optional<int> time_budget) {
    const auto& tree = s.tree();
    const std::int64_t n = tree.size();
    ValidationReport rep;
    auto add = [&](int t, ViolationKind kind, std::string detail) {
        rep.violations.push_back(Violation{t, kind, std::move(detail)});
    };

    InformedSet informed(n);
    informed.insert(s.originator().id);
    // Per-step stamps avoid clearing arrays between steps.
    std::vector<int> sent(n + 1, 0), recv(n + 1, 0), edge(n + 1, 0);

    for (const auto& step : s.steps()) {
        const int t = step.t;
        std::vector<const Call*> good;
        good.reserve(step.calls.size());
        for (const auto& c : step.calls) {
            std::string why;
            if (well_formed(tree, c, why)) good.push_back(&c);
            else add(t, ViolationKind::MalformedCall, why);
        }
        for (const Call* c : good)
            if (!informed.contains(c->source.id))
                add(t, ViolationKind::UninformedSource, vname(c->source.id) + " calls before being informed");
        for (const Call* c : good)
            if (informed.contains(c->dest.id))
                add(t, ViolationKind::DoubleReceive, vname(c->dest.id) + " is already informed");
        for (const Call* c : good) {
            if (sent[c->source.id] == t)
                add(t, ViolationKind::MultiSend, vname(c->source.id) + " sends more than once");
            sent[c->source.id] = t;
        }
        for (const Call* c : good) {
            if (recv[c->dest.id] == t)
                add(t, ViolationKind::DoubleReceive, vname(c->dest.id) + " receives more than once");
            recv[c->dest.id] = t;
        }
        for (const Call* c : good) {
            for (const Edge& e : c->path) {
                if (edge[e.child] == t)
                    add(t, ViolationKind::EdgeConflict, "edge child-" + std::to_string(e.child) + " used twice");
                edge[e.child] = t;
            }
        }
        // Destinations learn the message at the end of the step.
        for (const Call* c : good) informed.insert(c->dest.id);
        rep.informed_timeline.emplace_back(t, informed.count());
    }

    if (s.coverage_target().empty()) {
        if (informed.count() != n)
            add(0, ViolationKind::IncompleteCoverage,
                std::to_string(n - informed.count()) + " of " + std::to_string(n) + " vertices never informed");
    } else {
        std::int64_t missing = 0;
        for (VertexId v : s.coverage_target())
            if (!tree.contains(v) || !informed.contains(v)) ++missing;
        if (missing > 0)
            add(0, ViolationKind::IncompleteCoverage, std::to_string(missing) + " target vertices never informed");
    }

    if (time_budget) {
        int tt = total_time(s);
        if (tt > *time_budget)
            add(0, ViolationKind::TimeBudgetExceeded,
                "time " + std::to_string(tt) + " exceeds budget " + std::to_string(*time_budget));
    }
    rep.ok = rep.violations.empty();
    return rep;
}

std::int64_t total_cost(const Schedule& s) {
    std::int64_t c = 0;
    for (const auto& st : s.steps())
        for (const auto& call : st.calls) c += call.cost;
    return c;
}

int total_time(const Schedule& s) {
    for (auto it = s.steps().rbegin(); it != s.steps().rend(); ++it)
        if (!it->calls.empty()) return it->t;
    return 0;
}

InformedSet informed_set_after(const Schedule& s, int t) {
    InformedSet inf(s.tree().size());
    inf.insert(s.originator().id);
    for (const auto& st : s.steps()) {
        if (st.t > t) break;
        for (const auto& c : st.calls) inf.insert(c.dest.id);
    }
    return inf;
}

std::vector<VertexId> informed_after(const Schedule& s, int t) {
    InformedSet inf = informed_set_after(s, t);
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(inf.count()));
    for (VertexId v = 1; v <= s.tree().size(); ++v)
        if (inf.contains(v)) out.push_back(v);
    return out;
}

} // namespace linecast
