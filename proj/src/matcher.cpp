#include "matcher.hpp"

#include <algorithm>
#include <utility>

namespace linecast::detail {

std::optional<std::vector<Call>> match_step(const CompleteKTree& tree, int max_level,
                                            const std::vector<char>& role) {
    const int k = tree.k();
    const VertexId last = tree.level_start(max_level) + tree.level_size(max_level) - 1;
    const VertexId first_bottom = tree.level_start(max_level);

    // Item handed up by each subtree: kind, vertex, distance from the subtree root.
    std::vector<char> kind(static_cast<std::size_t>(last + 1), kNone);
    std::vector<VertexId> who(static_cast<std::size_t>(last + 1), 0);
    std::vector<int> dist(static_cast<std::size_t>(last + 1), 0);

    std::vector<std::pair<int, VertexId>> spares, needs;
    std::vector<std::pair<VertexId, VertexId>> pairs;

    for (VertexId v = last; v >= 1; --v) {
        spares.clear();
        needs.clear();
        if (role[v] == kCaller) spares.emplace_back(0, v);
        else if (role[v] == kTarget) needs.emplace_back(0, v);
        if (v < first_bottom) {
            VertexId c0 = tree.first_child_id(v);
            for (int i = 0; i < k; ++i) {
                VertexId c = c0 + i;
                if (kind[c] == kCaller) spares.emplace_back(dist[c] + 1, who[c]);
                else if (kind[c] == kTarget) needs.emplace_back(dist[c] + 1, who[c]);
            }
        }
        if (spares.empty() && needs.empty()) continue;
        std::sort(spares.begin(), spares.end());
        std::sort(needs.begin(), needs.end());

        if (needs.size() > spares.size()) {
            if (needs.size() - spares.size() > 1) return std::nullopt;
            // The nearest target goes up; the rest are served here.
            kind[v] = kTarget;
            who[v] = needs[0].second;
            dist[v] = needs[0].first;
            for (std::size_t i = 0; i < spares.size(); ++i) pairs.emplace_back(spares[i].second, needs[i + 1].second);
        } else {
            for (std::size_t i = 0; i < needs.size(); ++i) pairs.emplace_back(spares[i].second, needs[i].second);
            if (spares.size() > needs.size()) {
                kind[v] = kCaller;
                who[v] = spares[needs.size()].second;
                dist[v] = spares[needs.size()].first;
            }
        }
    }
    if (kind[1] == kTarget) return std::nullopt;

    std::sort(pairs.begin(), pairs.end());
    std::vector<Call> calls;
    calls.reserve(pairs.size());
    for (auto [s, d] : pairs) calls.push_back(make_call(tree, s, d));
    return calls;
}

} // namespace linecast::detail
