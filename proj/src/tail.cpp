#include "tail.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "matcher.hpp"

namespace linecast::detail {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
constexpr std::int64_t kMaxCells = 20'000;

struct SigTable {
    int state = 0; // 0 must be informed, 1 informed, 2 optional
    std::vector<int> kids;                     // child signature ids
    std::vector<std::int64_t> best;            // per top-edge tuple
    std::vector<int> own;                      // chosen step for the vertex itself, -1 if informed
    std::vector<std::vector<int>> kid_tuple;   // per top-edge tuple, the children's tuples
};

class Solver {
public:
    Solver(const CompleteKTree& tree, const InformedSet& informed, int steps, const std::vector<char>* required)
        : tree_(tree), inf_(informed), req_(required), L_(steps), k_(tree.k()) {
        tuples_ = 1;
        for (int s = 0; s < L_; ++s) tuples_ *= 3;
        width_ = k_ + 3; // partial sums live in [-k, 2]
        states_ = 1;
        for (int s = 0; s < L_; ++s) states_ *= width_;
        digit_.assign(static_cast<std::size_t>(tuples_) * L_, 0);
        for (int t = 0; t < tuples_; ++t) {
            int x = t;
            for (int s = 0; s < L_; ++s, x /= 3) digit_[t * L_ + s] = x % 3 - 1;
        }
    }

    std::optional<std::vector<int>> assign() {
        const std::int64_t n = tree_.size();
        sig_of_.assign(static_cast<std::size_t>(n + 1), -1);
        const VertexId bottom = tree_.level_start(tree_.height());
        std::vector<int> key;
        for (VertexId v = n; v >= 1; --v) {
            key.clear();
            key.push_back(inf_.contains(v) ? 1 : (req_ && !(*req_)[v] ? 2 : 0));
            if (v < bottom) {
                VertexId c0 = tree_.first_child_id(v);
                for (int i = 0; i < k_; ++i) key.push_back(sig_of_[c0 + i]);
            }
            auto it = index_.find(key);
            if (it == index_.end()) {
                int id = static_cast<int>(sigs_.size());
                SigTable sig;
                sig.state = key[0];
                sig.kids.assign(key.begin() + 1, key.end());
                sigs_.push_back(std::move(sig));
                compute(id);
                it = index_.emplace(key, id).first;
            }
            sig_of_[v] = it->second;
        }
        const auto& top = sigs_[sig_of_[1]];
        const int zero = zero_tuple();
        if (top.best[zero] >= kInf) return std::nullopt;
        std::vector<int> when(static_cast<std::size_t>(n + 1), -1);
        descend(1, zero, when);
        return when;
    }

private:
    int zero_tuple() const {
        int t = 0, p = 1;
        for (int s = 0; s < L_; ++s, p *= 3) t += p; // digit 0 is stored as 1
        return t;
    }

    int d(int tuple, int s) const { return digit_[tuple * L_ + s]; }

    int nonzero(int tuple) const {
        int c = 0;
        for (int s = 0; s < L_; ++s) c += d(tuple, s) != 0;
        return c;
    }

    void compute(int id) {
        // Copy what we need: sigs_ may grow while this runs in other calls.
        const std::vector<int> kids = sigs_[id].kids;
        const int state = sigs_[id].state;
        const int nk = static_cast<int>(kids.size());

        auto enc = [&](const std::vector<int>& p) {
            int x = 0;
            for (int s = L_ - 1; s >= 0; --s) x = x * width_ + (p[s] + k_);
            return x;
        };
        auto dec = [&](int x, std::vector<int>& p) {
            for (int s = 0; s < L_; ++s, x /= width_) p[s] = x % width_ - k_;
        };

        std::vector<std::int64_t> cur(states_, kInf), nxt(states_);
        std::vector<int> p(L_, 0), q(L_, 0);
        cur[enc(p)] = 0;
        // back[c][state] = previous state * tuples + child tuple
        std::vector<std::vector<std::int64_t>> back(nk, std::vector<std::int64_t>(states_, -1));
        for (int c = 0; c < nk; ++c) {
            const auto& kb = sigs_[kids[c]].best;
            std::fill(nxt.begin(), nxt.end(), kInf);
            const int rest = nk - c - 1;
            for (int st = 0; st < states_; ++st) {
                if (cur[st] >= kInf) continue;
                dec(st, p);
                for (int t = 0; t < tuples_; ++t) {
                    if (kb[t] >= kInf) continue;
                    bool ok = true;
                    for (int s = 0; s < L_; ++s) {
                        int v = p[s] + d(t, s);
                        if (v + rest < -2) ok = false;
                        q[s] = std::min(v, 2);
                    }
                    if (!ok) continue;
                    int ns = enc(q);
                    std::int64_t val = cur[st] + kb[t] + nonzero(t);
                    if (val < nxt[ns]) {
                        nxt[ns] = val;
                        back[c][ns] = static_cast<std::int64_t>(st) * tuples_ + t;
                    }
                }
            }
            cur.swap(nxt);
        }

        std::vector<std::int64_t> best(tuples_, kInf);
        std::vector<int> own(tuples_, -1), final_state(tuples_, -1);
        // Own choice: -1 already informed, 0..L-1 informed at that step, L never.
        const int first_choice = state == 1 ? -1 : (state == 2 ? L_ : 0);
        const int last_choice = state == 1 ? -1 : (state == 2 ? L_ : L_ - 1);
        for (int a = first_choice; a <= last_choice; ++a) {
            for (int st = 0; st < states_; ++st) {
                if (cur[st] >= kInf) continue;
                dec(st, p);
                for (int t = 0; t < tuples_; ++t) {
                    bool ok = true;
                    for (int s = 0; s < L_ && ok; ++s) {
                        int mine = a < 0 ? 1 : (a == L_ ? 0 : (s < a ? 0 : (s == a ? -1 : 1)));
                        ok = d(t, s) <= p[s] + mine;
                    }
                    if (ok && cur[st] < best[t]) {
                        best[t] = cur[st];
                        own[t] = a;
                        final_state[t] = st;
                    }
                }
            }
        }
        std::vector<std::vector<int>> kid_tuple(tuples_);
        for (int t = 0; t < tuples_; ++t) {
            if (best[t] >= kInf) continue;
            std::vector<int> choice(nk);
            int st = final_state[t];
            for (int c = nk - 1; c >= 0; --c) {
                std::int64_t b = back[c][st];
                choice[c] = static_cast<int>(b % tuples_);
                st = static_cast<int>(b / tuples_);
            }
            kid_tuple[t] = std::move(choice);
        }
        auto& sig = sigs_[id];
        sig.best = std::move(best);
        sig.own = std::move(own);
        sig.kid_tuple = std::move(kid_tuple);
    }

    void descend(VertexId root, int tuple, std::vector<int>& when) {
        std::vector<std::pair<VertexId, int>> stack{{root, tuple}};
        while (!stack.empty()) {
            auto [v, t] = stack.back();
            stack.pop_back();
            const auto& sig = sigs_[sig_of_[v]];
            when[v] = sig.own[t];
            if (sig.kids.empty()) continue;
            VertexId c0 = tree_.first_child_id(v);
            for (int i = 0; i < k_; ++i) stack.emplace_back(c0 + i, sig.kid_tuple[t][i]);
        }
    }

    const CompleteKTree& tree_;
    const InformedSet& inf_;
    const std::vector<char>* req_;
    int L_;
    int k_;
    int tuples_ = 1;
    int width_ = 0;
    int states_ = 1;
    std::vector<int> digit_;
    std::vector<int> sig_of_;
    std::vector<SigTable> sigs_;
    std::map<std::vector<int>, int> index_;
};

} // namespace

std::optional<std::vector<std::vector<Call>>> solve_tail(const CompleteKTree& tree, const InformedSet& informed,
                                                         int steps, const std::vector<char>* required) {
    if (steps < 1 || steps > 3) throw std::invalid_argument("tail length must be 1..3");
    // One node's table is k * (k+3)^steps back pointers; give up on wide trees.
    std::int64_t cells = tree.k();
    for (int s = 0; s < steps; ++s) cells *= tree.k() + 3;
    if (cells > kMaxCells) return std::nullopt;
    Solver solver(tree, informed, steps, required);
    auto when = solver.assign();
    if (!when) return std::nullopt;

    const std::int64_t n = tree.size();
    std::vector<char> role(static_cast<std::size_t>(n + 1), kNone);
    std::vector<char> known(static_cast<std::size_t>(n + 1), 0);
    for (VertexId v = 1; v <= n; ++v) known[v] = informed.contains(v) ? 1 : 0;
    std::vector<std::vector<Call>> out;
    for (int s = 0; s < steps; ++s) {
        for (VertexId v = 1; v <= n; ++v)
            role[v] = known[v] ? kCaller : ((*when)[v] == s ? kTarget : kNone);
        auto calls = match_step(tree, tree.height(), role);
        if (!calls) return std::nullopt;
        for (VertexId v = 1; v <= n; ++v)
            if ((*when)[v] == s) known[v] = 1;
        out.push_back(std::move(*calls));
    }
    return out;
}

} // namespace linecast::detail
