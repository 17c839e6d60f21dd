#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linecast/ktree.hpp"
#include "linecast/rational.hpp"
#include "linecast/schedule.hpp"

namespace linecast {

inline constexpr std::int64_t kOracleCap = 7;

struct OracleResult {
    std::int64_t cost = 0;
    int budget = 0;
    Schedule witness;
};

// Exact minimum cost over every valid schedule finishing within the budget
// (default ceil(log2 n)). Throws TooLarge when n exceeds cap.
OracleResult optimal_cost(const CompleteKTree& tree, const VertexRef& u,
                          std::optional<int> time_budget = std::nullopt,
                          std::int64_t cap = kOracleCap);

struct BracketEntry {
    std::string algorithm;
    std::int64_t cost = 0;
    int time = 0;
    bool valid = false;
    bool compared = false; // only schedules inside the oracle's budget are comparable
};

struct BracketReport {
    Rational lower;
    std::int64_t optimal = 0;
    Rational upper; // dispatched bound
    std::vector<BracketEntry> algorithms;
    bool lower_ok = false;
    bool upper_ok = false;
    bool algorithms_ok = false;
    bool ok() const { return lower_ok && upper_ok && algorithms_ok; }
};

BracketReport check_bracket(const CompleteKTree& tree, const VertexRef& u,
                            std::int64_t cap = kOracleCap);

} // namespace linecast
