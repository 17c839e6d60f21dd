#pragma once

#include <optional>
#include <vector>

#include "linecast/ktree.hpp"
#include "linecast/schedule.hpp"

namespace linecast::detail {

enum Role : char { kNone = 0, kCaller = 1, kTarget = 2 };

// One step of line broadcasting on the subtree of levels 0..max_level.
//
// Works bottom-up. Every subtree hands at most one unmatched caller or target
// to its parent, so the calls paired at different nodes never share an edge.
// Callers and targets meeting at a node are paired there, cheapest first.
// Returns nullopt when some subtree is left with two unserved targets.
std::optional<std::vector<Call>> match_step(const CompleteKTree& tree, int max_level,
                                            const std::vector<char>& role);

} // namespace linecast::detail
