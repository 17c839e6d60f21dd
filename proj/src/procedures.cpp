#include "linecast/procedures.hpp"

#include <algorithm>

#include "level_fill.hpp"
#include "linecast/error.hpp"

namespace linecast {

std::int64_t Fragment::cost() const {
    std::int64_t c = 0;
    for (const auto& st : steps)
        for (const auto& call : st) c += call.cost;
    return c;
}

void append_fragment(Schedule& s, const Fragment& f) {
    for (std::size_t i = 0; i < f.steps.size(); ++i)
        s.add_calls(f.start_time + static_cast<int>(i), f.steps[i]);
}

namespace {
void check_jm(int k, int j, int m) {
    if (k < 2 || j < 1) throw Error(ErrorKind::InvalidParams, "need k >= 2 and j >= 1");
    if (m < 1 || m > j) throw Error(ErrorKind::OutOfRange, "need 1 <= m <= j");
}
} // namespace

std::vector<std::int64_t> s_set(int k, int j, int m) {
    check_jm(k, j, m);
    std::int64_t stride = checked_pow(k, j - m), count = checked_pow(k, m);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) out.push_back(1 + i * stride);
    return out;
}

std::vector<std::int64_t> s_prime_set(int k, int j, int m) {
    auto cur = s_set(k, j, m);
    if (m == 1) return cur;
    std::int64_t coarse = checked_pow(k, j - m + 1);
    std::vector<std::int64_t> out;
    for (auto o : cur)
        if ((o - 1) % coarse != 0) out.push_back(o);
    return out;
}

RoundPlan round_plan(int k, int j) {
    RoundPlan p{k, j, {}};
    for (int m = 1; m <= j; ++m) p.rounds.push_back(Round{m, checked_pow(k, j - m), s_prime_set(k, j, m)});
    return p;
}

UpcallPlan upcall_assignments(int k, int j) {
    if (k < 2 || j < 1) throw Error(ErrorKind::InvalidParams, "need k >= 2 and j >= 1");
    UpcallPlan p{k, j, {}};
    for (int i = 1; i <= j; ++i) {
        std::int64_t a = 1 + (checked_pow(k, i - 1) - 1) / (k - 1);
        std::int64_t ki = checked_pow(k, i);
        std::int64_t per = checked_pow(k, j - i);
        for (std::int64_t t = 1; t <= per; ++t) {
            UpcallAssignment u;
            u.i = i;
            u.t = t;
            u.leaf_offset = a + (t - 1) * ki;
            u.target_level = j - i;
            u.target_offset = (u.leaf_offset - 1) / ki + 1;
            p.assignments.push_back(u);
        }
    }
    return p;
}

Fragment to_level(const CompleteKTree& tree, int j, const VertexRef& u, int start_time) {
    if (j < 1 || j > tree.height()) throw Error(ErrorKind::OutOfRange, "ToLevel needs 1 <= j <= r");
    if (start_time < 1) throw Error(ErrorKind::OutOfRange, "start time must be >= 1");
    // Both fill orders double exactly; keep whichever is cheaper.
    Fragment best;
    for (auto order : {detail::LevelFill::Order::DigitReversal, detail::LevelFill::Order::Planned}) {
        detail::LevelFill fill(tree, j, tree.vertex(u.id), order);
        Fragment f{start_time, {}};
        while (!fill.done()) f.steps.push_back(fill.next_step());
        if (best.steps.empty() || f.cost() < best.cost()) best = std::move(f);
    }
    return best;
}

Fragment from_level(const CompleteKTree& tree, int j, const VertexRef& u, int at_time,
                    const InformedSet& informed) {
    if (j < 1 || j > tree.height()) throw Error(ErrorKind::OutOfRange, "FromLevel needs 1 <= j <= r");
    VertexId first = tree.level_start(j);
    for (VertexId v = first; v < first + tree.level_size(j); ++v)
        if (!informed.contains(v))
            throw Error(ErrorKind::PreconditionViolated, "level " + std::to_string(j) + " vertex v" +
                                                             std::to_string(v) + " is not informed");
    Fragment f{at_time, {{}}};
    for (const auto& a : upcall_assignments(tree.k(), j).assignments) {
        VertexId dst = tree.vertex_id(a.target_level, a.target_offset);
        if (dst == u.id || informed.contains(dst)) continue;
        f.steps[0].push_back(make_call(tree, tree.vertex_id(j, a.leaf_offset), dst));
    }
    return f;
}

std::vector<VertexId> to_level_coverage(const CompleteKTree& tree, int j, const VertexRef& u) {
    std::vector<VertexId> out;
    VertexId first = tree.level_start(j);
    for (VertexId v = first; v < first + tree.level_size(j); ++v) out.push_back(v);
    if (u.level != j) out.push_back(u.id);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace linecast
