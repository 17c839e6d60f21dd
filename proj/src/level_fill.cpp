#include "level_fill.hpp"

#include <algorithm>
#include <stdexcept>

#include "linecast/error.hpp"
#include "matcher.hpp"

namespace linecast::detail {

namespace {

struct Planner {
    int k;
    int steps; // the last step; trajectories cover 0..steps-1
    std::vector<int>& out;

    // x[t]: informed leaves of this subtree after step t.
    void assign(int h, std::int64_t base, const std::vector<std::int64_t>& x) {
        if (h == 0) {
            int t = 0;
            while (t < steps && x[t] == 0) ++t;
            out[static_cast<std::size_t>(base)] = t;
            return;
        }
        std::vector<std::int64_t> q(steps), e(steps);
        for (int t = 0; t < steps; ++t) {
            q[t] = x[t] / k;
            e[t] = x[t] % k;
        }
        std::vector<std::vector<std::int64_t>> xc(k, std::vector<std::int64_t>(steps, 0));
        std::vector<char> in(k, 0), next(k, 0);
        for (int c = 0; c < e[0]; ++c) in[c] = 1;
        for (int c = 0; c < k; ++c) xc[c][0] = q[0] + in[c];
        for (int t = 0; t + 1 < steps; ++t) {
            const std::int64_t d0 = q[t + 1] - 2 * q[t];
            const std::int64_t a = e[t], b = e[t + 1];
            std::int64_t best_o = -1, best_cost = 0;
            for (std::int64_t o = std::min(a, b); o >= std::max<std::int64_t>(0, a + b - k); --o) {
                const std::int64_t cnt[2][2] = {{k - a - b + o, b - o}, {a - o, o}};
                std::int64_t cost = 0;
                bool ok = true;
                for (int p = 0; p < 2; ++p)
                    for (int n = 0; n < 2; ++n) {
                        if (cnt[p][n] == 0) continue;
                        std::int64_t d = d0 + n - 2 * p;
                        if (d < -1 || d > 1) ok = false;
                        if (d != 0) cost += cnt[p][n];
                    }
                if (ok && (best_o < 0 || cost < best_cost)) {
                    best_o = o;
                    best_cost = cost;
                }
            }
            std::fill(next.begin(), next.end(), 0);
            std::int64_t kept = 0, added = 0;
            for (int c = 0; c < k && kept < best_o; ++c)
                if (in[c]) { next[c] = 1; ++kept; }
            for (int c = 0; c < k && added < b - best_o; ++c)
                if (!in[c]) { next[c] = 1; ++added; }
            in.swap(next);
            for (int c = 0; c < k; ++c) xc[c][t + 1] = q[t + 1] + in[c];
        }
        std::int64_t width = 1;
        for (int i = 1; i < h; ++i) width *= k;
        for (int c = 0; c < k; ++c) assign(h - 1, base + c * width, xc[c]);
    }
};

} // namespace

std::vector<int> plan_fill_steps(int k, int j, int steps, bool root_caller) {
    std::int64_t width = checked_pow(k, j);
    std::vector<int> out(static_cast<std::size_t>(width), steps);
    std::vector<std::int64_t> x(steps);
    for (int t = 0; t < steps; ++t) x[t] = (std::int64_t(1) << t) - (root_caller ? 1 : 0);
    Planner{k, steps, out}.assign(j, 0, x);
    return out;
}

LevelFill::LevelFill(const CompleteKTree& tree, int j, const VertexRef& u, Order order)
    : tree_(tree), j_(j), u_(tree.vertex(u.id)), root_mode_(u.id == 1), rot_(j + 1, 0),
      width_(tree.level_size(j)), informed_(tree.size()),
      role_(static_cast<std::size_t>(tree.size() + 1), kNone), order_(order) {
    informed_.insert(u_.id);
    if (order_ == Order::Planned) {
        int steps = ceil_log2(width_ + (root_mode_ ? 1 : 0));
        auto when = plan_fill_steps(tree.k(), j, steps, root_mode_);
        planned_.assign(static_cast<std::size_t>(steps + 1), {});
        for (std::int64_t i = 0; i < width_; ++i) planned_[static_cast<std::size_t>(when[i])].push_back(i);
    }
    if (root_mode_) return;
    anchor_ = u_.id;
    if (u_.level > j) {
        anchor_ = tree.ancestor_at_level(u_, j).id;
    } else if (u_.level < j) {
        for (int l = u_.level; l < j; ++l) anchor_ = tree.first_child_id(anchor_);
    }
    prelim_ = anchor_ != u_.id;
    // Rotate so the anchor sits at index 0.
    std::int64_t off = tree.vertex(anchor_).offset - 1;
    for (int d = j; d >= 1; --d) {
        rot_[d] = static_cast<int>(off % tree.k());
        off /= tree.k();
    }
    if (!prelim_) filled_ = 1;
}

VertexId LevelFill::leaf_at(std::int64_t index) const {
    const int k = tree_.k();
    std::int64_t off = 0;
    for (int d = 1; d <= j_; ++d) {
        int digit = static_cast<int>(index % k);
        index /= k;
        off = off * k + (digit + rot_[d]) % k;
    }
    return tree_.level_start(j_) + off;
}

VertexId LevelFill::planned_leaf(std::int64_t index) const {
    const int k = tree_.k();
    std::int64_t off = 0, div = width_ / k;
    for (int d = 1; d <= j_; ++d, div /= k) {
        int digit = static_cast<int>((index / div) % k);
        off = off * k + (digit + rot_[d]) % k;
    }
    return tree_.level_start(j_) + off;
}

bool LevelFill::next_is_final() const {
    if (prelim_ || done()) return false;
    std::int64_t y = root_mode_ ? std::min(filled_ + 1, width_ - filled_) : std::min(filled_, width_ - filled_);
    return filled_ + y == width_;
}

std::vector<Call> LevelFill::next_step() {
    if (done()) return {};
    if (prelim_) {
        prelim_ = false;
        filled_ = 1;
        informed_.insert(anchor_);
        return {make_call(tree_, u_.id, anchor_)};
    }
    std::int64_t y = root_mode_ ? std::min(filled_ + 1, width_ - filled_) : std::min(filled_, width_ - filled_);
    ++step_;
    std::vector<VertexId> touched;
    touched.reserve(static_cast<std::size_t>(filled_ + y + 1));
    if (order_ == Order::DigitReversal) {
        for (std::int64_t i = 0; i < filled_; ++i) touched.push_back(leaf_at(i));
        for (VertexId v : touched) role_[v] = kCaller;
        for (std::int64_t i = filled_; i < filled_ + y; ++i) {
            VertexId v = leaf_at(i);
            role_[v] = kTarget;
            touched.push_back(v);
        }
    } else {
        for (int t = 0; t < step_; ++t)
            for (std::int64_t i : planned_[static_cast<std::size_t>(t)]) touched.push_back(planned_leaf(i));
        for (VertexId v : touched) role_[v] = kCaller;
        const auto& now = planned_[static_cast<std::size_t>(step_)];
        if (static_cast<std::int64_t>(now.size()) != y) throw std::logic_error("level fill: plan breaks doubling");
        for (std::int64_t i : now) {
            VertexId v = planned_leaf(i);
            role_[v] = kTarget;
            touched.push_back(v);
        }
    }
    if (root_mode_) {
        role_[1] = kCaller;
        touched.push_back(1);
    }
    auto calls = match_step(tree_, j_, role_);
    for (VertexId v : touched) role_[v] = kNone;
    if (!calls) throw std::logic_error("level fill: no edge-disjoint matching");
    for (const auto& c : *calls) informed_.insert(c.dest.id);
    filled_ += y;
    return std::move(*calls);
}

} // namespace linecast::detail
