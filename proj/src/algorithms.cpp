#include "linecast/algorithms.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>

#include "level_fill.hpp"
#include "linecast/error.hpp"
#include "linecast/procedures.hpp"
#include "matcher.hpp"
#include "tail.hpp"

namespace linecast {

int time_limit(const CompleteKTree& tree) { return ceil_log2(tree.size()); }

bool has_time_deviation(const Schedule& s) {
    for (const auto& d : s.deviations())
        if (d.kind == DeviationKind::ExtraStep) return true;
    return false;
}

namespace {

using detail::kCaller;
using detail::kNone;
using detail::kTarget;

// Schedule under construction plus the informed state it implies.
class Builder {
public:
    Builder(const CompleteKTree& tree, const VertexRef& u, std::string tag)
        : tree_(tree), sched_(tree, tree.vertex(u.id), std::move(tag)), informed_(tree.size()),
          role_(static_cast<std::size_t>(tree.size() + 1), kNone) {
        informed_.insert(u.id);
    }

    const CompleteKTree& tree() const { return tree_; }
    const InformedSet& informed() const { return informed_; }
    int now() const { return static_cast<int>(sched_.steps().size()); }
    bool complete() const { return informed_.count() == tree_.size(); }

    std::optional<std::vector<Call>> try_match(const std::vector<VertexId>& callers,
                                               const std::vector<VertexId>& targets, int max_level) {
        for (VertexId v : callers) role_[v] = kCaller;
        for (VertexId v : targets) role_[v] = kTarget;
        auto calls = detail::match_step(tree_, max_level, role_);
        for (VertexId v : callers) role_[v] = kNone;
        for (VertexId v : targets) role_[v] = kNone;
        return calls;
    }

    void commit(std::vector<Call> calls) {
        for (const auto& c : calls) informed_.insert(c.dest.id);
        sched_.append_step(std::move(calls));
    }

    void commit_fragment(const Fragment& f) {
        for (const auto& st : f.steps) commit(st);
    }

    std::vector<VertexId> all_informed() const {
        std::vector<VertexId> out;
        for (VertexId v = 1; v <= tree_.size(); ++v)
            if (informed_.contains(v)) out.push_back(v);
        return out;
    }

    std::vector<VertexId> all_uninformed() const {
        std::vector<VertexId> out;
        for (VertexId v = 1; v <= tree_.size(); ++v)
            if (!informed_.contains(v)) out.push_back(v);
        return out;
    }

    // Informs whatever is left, one matched step at a time. Falls back to a
    // plain greedy step when the matching cannot serve every target at once.
    void finish_rest() {
        while (!complete()) {
            auto calls = try_match(all_informed(), all_uninformed(), tree_.height());
            commit(calls ? std::move(*calls) : greedy_step());
        }
    }

    void flag(DeviationKind kind, std::string code, std::string detail = "") {
        sched_.add_deviation(Deviation{kind, std::move(code), std::move(detail)});
    }

    Schedule take() { return std::move(sched_); }

private:
    std::vector<Call> greedy_step() {
        std::vector<char> edge(static_cast<std::size_t>(tree_.size() + 1), 0), taken(edge.size(), 0);
        std::vector<Call> calls;
        for (VertexId s : all_informed()) {
            std::optional<Call> best;
            for (VertexId d : all_uninformed()) {
                if (taken[d]) continue;
                auto p = tree_.path_ids(s, d);
                bool free = std::none_of(p.begin(), p.end(), [&](VertexId e) { return edge[e] != 0; });
                if (free && (!best || static_cast<int>(p.size()) < best->cost)) best = make_call(tree_, s, d);
            }
            if (best) {
                for (const auto& e : best->path) edge[e.child] = 1;
                taken[best->dest.id] = 1;
                calls.push_back(std::move(*best));
            }
        }
        return calls;
    }

    const CompleteKTree& tree_;
    Schedule sched_;
    InformedSet informed_;
    std::vector<char> role_;
};

// One step of simultaneous stars centred on level `centre_level`. Each star
// takes as many new members as it has informed members. The originator can
// join the root star as an extra caller.
struct StarStep {
    std::vector<VertexId> callers;
    std::vector<VertexId> targets;
    bool last = true; // every star is complete after this step
};

StarStep plan_star_step(const CompleteKTree& tree, const InformedSet& inf, int centre_level,
                        std::optional<VertexId> extra_caller, VertexId preferred) {
    StarStep st;
    const int k = tree.k();
    const VertexId first = tree.level_start(centre_level);
    std::vector<VertexId> members, open;
    for (VertexId p = first; p < first + tree.level_size(centre_level); ++p) {
        members.clear();
        members.push_back(p);
        VertexId c0 = tree.first_child_id(p);
        for (int i = 0; i < k; ++i) members.push_back(c0 + i);
        std::int64_t have = 0;
        open.clear();
        for (VertexId m : members) {
            if (inf.contains(m)) {
                ++have;
                st.callers.push_back(m);
            }
        }
        // The extra caller sits below the preferred vertex and shares its top
        // edge, so it only adds capacity until that vertex is informed.
        if (extra_caller && p == 1 && !inf.contains(preferred)) ++have;
        // Centre first (it is the cheapest caller afterwards), then the preferred vertex.
        if (!inf.contains(p)) open.push_back(p);
        if (preferred != p && !inf.contains(preferred) &&
            std::find(members.begin(), members.end(), preferred) != members.end())
            open.push_back(preferred);
        for (std::size_t i = 1; i < members.size(); ++i)
            if (!inf.contains(members[i]) && members[i] != preferred) open.push_back(members[i]);
        std::int64_t take = std::min<std::int64_t>(have, static_cast<std::int64_t>(open.size()));
        for (std::int64_t i = 0; i < take; ++i) st.targets.push_back(open[static_cast<std::size_t>(i)]);
        if (take < static_cast<std::int64_t>(open.size())) st.last = false;
    }
    if (extra_caller) st.callers.push_back(*extra_caller);
    return st;
}

// ToLevel(j) whose last one to three steps are re-solved exactly for cost.
// Keeps the duration but not necessarily the doubling.
Fragment cheapest_fill(const CompleteKTree& tree, int j, const VertexRef& u) {
    Fragment f = to_level(tree, j, u, 1);
    std::vector<char> req(static_cast<std::size_t>(tree.size() + 1), 0);
    for (VertexId v : to_level_coverage(tree, j, u)) req[v] = 1;
    Schedule tmp(tree, u);
    append_fragment(tmp, f);
    const int len = static_cast<int>(f.steps.size());
    Fragment best = f;
    for (int tail_len = 1; tail_len <= 3 && tail_len <= len; ++tail_len) {
        const int cut = len - tail_len;
        auto tail = detail::solve_tail(tree, informed_set_after(tmp, cut), tail_len, &req);
        if (!tail) continue;
        Fragment cand{1, {f.steps.begin(), f.steps.begin() + cut}};
        for (auto& st : *tail) cand.steps.push_back(std::move(st));
        if (cand.cost() < best.cost()) best = std::move(cand);
    }
    return best;
}

// Re-solves the last one to three steps exactly and keeps the cheapest
// schedule that fits the time limit. Extra-step flags are dropped when the
// result fits.
Schedule tighten(const Schedule& s) {
    const auto& tree = s.tree();
    const int limit = time_limit(tree);
    const int end = std::min(total_time(s), limit);
    std::optional<Schedule> best;
    if (total_time(s) <= limit) best = s;
    for (int len = 1; len <= 3; ++len) {
        const int cut = end - len;
        if (cut < 0) break;
        InformedSet inf = informed_set_after(s, cut);
        auto tail = detail::solve_tail(tree, inf, len);
        if (!tail) continue;
        Schedule cand(tree, s.originator(), s.algorithm_tag());
        for (int t = 0; t < cut; ++t) cand.append_step(s.steps()[static_cast<std::size_t>(t)].calls);
        for (auto& st : *tail) cand.append_step(std::move(st));
        if (!best || total_cost(cand) < total_cost(*best)) best = std::move(cand);
    }
    if (!best) return s;
    if (best->deviations().empty())
        for (const auto& d : s.deviations())
            if (d.kind != DeviationKind::ExtraStep || total_time(*best) > limit) best->add_deviation(d);
    return std::move(*best);
}

void annotate(Schedule& s, DispatchCase alg) {
    const auto& tree = s.tree();
    int limit = time_limit(tree);
    bool extra = false;
    for (const auto& d : s.deviations()) extra = extra || d.kind == DeviationKind::ExtraStep;
    if (!extra && total_time(s) > limit)
        s.add_deviation(Deviation{DeviationKind::ExtraStep, "time_over_limit",
                                  std::to_string(total_time(s)) + ">" + std::to_string(limit)});
    if (s.originator().id != 1) return;
    if (alg == DispatchCase::Alg2 && tree.height() < 2) return;
    std::int64_t bound = upper_for(alg, tree.k(), tree.height()).floor();
    std::int64_t cost = total_cost(s);
    if (cost > bound)
        s.add_deviation(Deviation{DeviationKind::CostSlack, "cost_over_bound", "+" + std::to_string(cost - bound)});
}

} // namespace

Schedule alg1(const CompleteKTree& tree, const VertexRef& u_in) {
    VertexRef u = tree.vertex(u_in.id);
    Builder b(tree, u, "alg1");
    const bool deep = u.level >= 2;
    const VertexId a1 = deep ? tree.ancestor_at_level(u, 1).id : 0;
    for (int j = 1; j <= tree.height(); ++j) {
        const bool helper = deep && j == 1;
        std::optional<VertexId> extra;
        if (helper) extra = u.id;
        for (;;) {
            auto st = plan_star_step(tree, b.informed(), j - 1, extra, helper ? a1 : 0);
            if (st.targets.empty()) break;
            auto calls = b.try_match(st.callers, st.targets, helper ? u.level : j);
            if (!calls) throw std::logic_error("alg1: star step has no matching");
            b.commit(std::move(*calls));
        }
    }
    if (!b.complete()) {
        b.flag(DeviationKind::ExtraStep, "alg1_final_fill");
        b.finish_rest();
    }
    Schedule s = b.take();
    annotate(s, DispatchCase::Alg1);
    return s;
}

Schedule alg2(const CompleteKTree& tree, const VertexRef& u_in) {
    VertexRef u = tree.vertex(u_in.id);
    const int r = tree.height();
    Builder b(tree, u, "alg2");
    if (r >= 2) b.commit_fragment(cheapest_fill(tree, r - 1, u));
    for (;;) {
        auto st = plan_star_step(tree, b.informed(), r - 1, std::nullopt, 0);
        if (st.targets.empty()) break;
        if (st.last) {
            // Fold the up-calls of FromLevel(r-1) into the stars' last step.
            auto merged = b.try_match(b.all_informed(), b.all_uninformed(), r);
            if (merged) {
                b.commit(std::move(*merged));
                break;
            }
        }
        auto calls = b.try_match(st.callers, st.targets, r);
        if (!calls) throw std::logic_error("alg2: star step has no matching");
        b.commit(std::move(*calls));
    }
    if (!b.complete()) {
        b.flag(DeviationKind::ExtraStep, "alg2_extra_step", "up-calls need a separate step");
        b.finish_rest();
    }
    Schedule s = tighten(b.take());
    annotate(s, DispatchCase::Alg2);
    return s;
}

Schedule alg3(const CompleteKTree& tree, const VertexRef& u_in) {
    VertexRef u = tree.vertex(u_in.id);
    const int r = tree.height();
    Builder b(tree, u, "alg3");
    Fragment fill = to_level(tree, r, u, 1);
    const int d = static_cast<int>(fill.steps.size());
    bool merge = d + 1 > time_limit(tree);
    for (int i = 0; i + 1 < d; ++i) b.commit(fill.steps[static_cast<std::size_t>(i)]);
    if (merge) {
        auto merged = b.try_match(b.all_informed(), b.all_uninformed(), r);
        if (merged) {
            b.commit(std::move(*merged));
        } else {
            b.flag(DeviationKind::ExtraStep, "alg3_extra_step", "FromLevel could not share the last ToLevel step");
            merge = false;
        }
    }
    if (!merge) {
        b.commit(fill.steps.back());
        b.commit(from_level(tree, r, u, b.now() + 1, b.informed()).steps.front());
    }
    if (!b.complete()) b.finish_rest();
    Schedule s = tighten(b.take());
    annotate(s, DispatchCase::Alg3);
    return s;
}

Schedule run_case(const CompleteKTree& tree, const VertexRef& u, DispatchCase alg) {
    switch (alg) {
    case DispatchCase::Alg1: return alg1(tree, u);
    case DispatchCase::Alg2: return alg2(tree, u);
    case DispatchCase::Alg3: return alg3(tree, u);
    }
    return alg3(tree, u);
}

Schedule lbckt(const CompleteKTree& tree, const VertexRef& u) {
    return run_case(tree, u, lbckt_case(tree.k(), tree.height()));
}

Schedule tolevel_schedule(const CompleteKTree& tree, int j, const VertexRef& u_in) {
    VertexRef u = tree.vertex(u_in.id);
    Schedule s(tree, u, "tolevel:" + std::to_string(j));
    append_fragment(s, to_level(tree, j, u, 1));
    s.set_coverage_target(to_level_coverage(tree, j, u));
    return s;
}

Schedule fromlevel_schedule(const CompleteKTree& tree, int j, const VertexRef& u_in) {
    VertexRef u = tree.vertex(u_in.id);
    Schedule s(tree, u, "fromlevel:" + std::to_string(j));
    Fragment f = to_level(tree, j, u, 1);
    append_fragment(s, f);
    InformedSet inf = informed_set_after(s, f.end_time());
    append_fragment(s, from_level(tree, j, u, f.end_time() + 1, inf));
    s.set_coverage_target(coverage_for(tree, s.algorithm_tag(), u));
    return s;
}

Schedule run_named(const CompleteKTree& tree, const VertexRef& u, std::string_view alg) {
    auto level = [&](std::string_view rest) {
        int j = 0;
        auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), j);
        if (ec != std::errc{} || p != rest.data() + rest.size())
            throw Error(ErrorKind::InvalidParams, "bad level in '" + std::string(alg) + "'");
        return j;
    };
    if (alg == "auto") return lbckt(tree, u);
    if (alg == "alg1") return alg1(tree, u);
    if (alg == "alg2") return alg2(tree, u);
    if (alg == "alg3") return alg3(tree, u);
    if (alg.starts_with("tolevel:")) return tolevel_schedule(tree, level(alg.substr(8)), u);
    if (alg.starts_with("fromlevel:")) return fromlevel_schedule(tree, level(alg.substr(10)), u);
    throw Error(ErrorKind::InvalidParams, "unknown algorithm '" + std::string(alg) + "'");
}

std::vector<VertexId> coverage_for(const CompleteKTree& tree, std::string_view tag, const VertexRef& u) {
    auto level_arg = [&](std::string_view prefix) -> std::optional<int> {
        if (!tag.starts_with(prefix)) return std::nullopt;
        std::string_view rest = tag.substr(prefix.size());
        int j = 0;
        auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), j);
        if (ec != std::errc{} || p != rest.data() + rest.size() || j < 1 || j > tree.height())
            throw Error(ErrorKind::Parse, "bad level in algorithm tag '" + std::string(tag) + "'");
        return j;
    };
    if (auto j = level_arg("tolevel:")) return to_level_coverage(tree, *j, u);
    if (auto j = level_arg("fromlevel:")) {
        std::vector<VertexId> cover;
        for (VertexId v = 1; v < tree.level_start(*j) + tree.level_size(*j); ++v) cover.push_back(v);
        if (u.level > *j) cover.push_back(u.id);
        return cover;
    }
    return {};
}

} // namespace linecast
