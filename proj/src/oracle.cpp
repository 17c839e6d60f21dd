#include "linecast/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>
#include <utility>

#include "linecast/algorithms.hpp"
#include "linecast/bounds.hpp"
#include "linecast/error.hpp"

namespace linecast {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

using Mask = std::uint64_t;

struct Entry {
    std::int64_t cost = kInf;
    std::vector<std::pair<int, int>> calls;
};

// Memoized search over (informed set, steps left). Vertex v is bit v-1,
// edge "child c" is bit c-1.
class Search {
public:
    Search(const CompleteKTree& tree) : n_(static_cast<int>(tree.size())) {
        full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        edges_.assign(static_cast<std::size_t>(n_ * n_), 0);
        cost_.assign(static_cast<std::size_t>(n_ * n_), 0);
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b) {
                if (a == b) continue;
                Mask m = 0;
                for (VertexId child : tree.path_ids(a, b)) m |= Mask{1} << (child - 1);
                edges_[idx(a, b)] = m;
                cost_[idx(a, b)] = std::popcount(m);
            }
    }

    std::int64_t solve(Mask informed, int rem) {
        if (informed == full_) return 0;
        if (rem == 0) return kInf;
        std::int64_t have = std::popcount(informed);
        std::int64_t missing = n_ - have;
        // each informed vertex can at most double per step
        if (rem < 62 && missing > have * ((std::int64_t{1} << rem) - 1)) return kInf;
        std::uint64_t key = informed * 128 + static_cast<std::uint64_t>(rem);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second.cost;

        Entry best;
        std::vector<std::pair<int, int>> chosen;
        std::vector<int> sources;
        for (int v = 1; v <= n_; ++v)
            if (informed >> (v - 1) & 1) sources.push_back(v);
        auto rec = [&](auto&& self, std::size_t i, Mask used, Mask targets, std::int64_t cost) -> void {
            std::int64_t still = missing - std::popcount(targets);
            if (cost + still >= best.cost) return;
            if (i == sources.size()) {
                if (targets == 0) return;
                std::int64_t rest = solve(informed | targets, rem - 1);
                if (rest < kInf && cost + rest < best.cost) {
                    best.cost = cost + rest;
                    best.calls = chosen;
                }
                return;
            }
            int a = sources[i];
            for (int b = 1; b <= n_; ++b) {
                Mask bit = Mask{1} << (b - 1);
                if ((informed | targets) & bit) continue;
                Mask e = edges_[idx(a, b)];
                if (used & e) continue;
                chosen.emplace_back(a, b);
                self(self, i + 1, used | e, targets | bit, cost + cost_[idx(a, b)]);
                chosen.pop_back();
            }
            self(self, i + 1, used, targets, cost);
        };
        rec(rec, 0, 0, 0, 0);
        std::int64_t result = best.cost;
        memo_.emplace(key, std::move(best));
        return result;
    }

    const Entry& entry(Mask informed, int rem) const {
        return memo_.at(informed * 128 + static_cast<std::uint64_t>(rem));
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>((a - 1) * n_ + (b - 1)); }

    int n_;
    Mask full_;
    std::vector<Mask> edges_;
    std::vector<int> cost_;
    std::unordered_map<std::uint64_t, Entry> memo_;
};

} // namespace

OracleResult optimal_cost(const CompleteKTree& tree, const VertexRef& u,
                          std::optional<int> time_budget, std::int64_t cap) {
    std::int64_t n = tree.size();
    if (n > cap || n > 56)
        throw Error(ErrorKind::TooLarge, "oracle: n = " + std::to_string(n) +
                                             " exceeds cap " + std::to_string(std::min<std::int64_t>(cap, 56)));
    if (!tree.contains(u.id)) throw Error(ErrorKind::OutOfRange, "oracle: originator not in tree");
    int budget = time_budget.value_or(ceil_log2(n));
    if (budget < 0) throw Error(ErrorKind::InvalidParams, "oracle: negative budget");
    // more than n-1 steps never helps
    int rem = std::min<std::int64_t>(budget, n - 1);

    Search search(tree);
    Mask start = Mask{1} << (u.id - 1);
    std::int64_t best = search.solve(start, rem);
    if (best >= kInf)
        throw Error(ErrorKind::PreconditionViolated,
                    "oracle: no schedule within " + std::to_string(budget) + " steps");

    Schedule witness(tree, u, "oracle");
    Mask informed = start;
    for (int left = rem; best > 0 && informed != (n == 64 ? ~Mask{0} : (Mask{1} << n) - 1); --left) {
        const Entry& e = search.entry(informed, left);
        std::vector<Call> calls;
        for (auto [a, b] : e.calls) {
            calls.push_back(make_call(tree, a, b));
            informed |= Mask{1} << (b - 1);
        }
        witness.append_step(std::move(calls));
    }
    return {best, budget, std::move(witness)};
}

BracketReport check_bracket(const CompleteKTree& tree, const VertexRef& u, std::int64_t cap) {
    int k = tree.k();
    int r = tree.height();
    BracketReport rep;
    OracleResult opt = optimal_cost(tree, u, std::nullopt, cap);
    rep.optimal = opt.cost;
    rep.lower = cost_lower_bound(k, r);
    rep.upper = dispatched_upper(k, r);
    rep.lower_ok = rep.lower <= Rational(opt.cost);
    rep.upper_ok = Rational(opt.cost) <= rep.upper;
    rep.algorithms_ok = true;

    std::vector<DispatchCase> algs{DispatchCase::Alg1, DispatchCase::Alg3};
    if (r >= 2) algs.insert(algs.begin() + 1, DispatchCase::Alg2);
    for (DispatchCase c : algs) {
        Schedule s = run_case(tree, u, c);
        BracketEntry e;
        e.algorithm = std::string(to_string(c));
        e.cost = total_cost(s);
        e.time = total_time(s);
        e.valid = validate(s).ok;
        e.compared = e.valid && e.time <= opt.budget;
        if (e.compared && e.cost < opt.cost) rep.algorithms_ok = false;
        rep.algorithms.push_back(std::move(e));
    }
    return rep;
}

} // namespace linecast
