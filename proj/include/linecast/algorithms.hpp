#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linecast/bounds.hpp"
#include "linecast/ktree.hpp"
#include "linecast/schedule.hpp"

namespace linecast {

// Stars: every level, parents inform children in ceil(log2(k+1)) steps.
Schedule alg1(const CompleteKTree& tree, const VertexRef& u);
// ToLevel(r-1), then stars at level r-1 with FromLevel folded into their last step.
Schedule alg2(const CompleteKTree& tree, const VertexRef& u);
// ToLevel(r), then FromLevel(r), merged into the last step when time demands it.
Schedule alg3(const CompleteKTree& tree, const VertexRef& u);
// Picks the algorithm by lbckt_case.
Schedule lbckt(const CompleteKTree& tree, const VertexRef& u);
Schedule run_case(const CompleteKTree& tree, const VertexRef& u, DispatchCase alg);

// By name: auto, alg1, alg2, alg3, tolevel:j or fromlevel:j.
Schedule run_named(const CompleteKTree& tree, const VertexRef& u, std::string_view alg);

// Partial broadcasts, validated against their own coverage target.
Schedule tolevel_schedule(const CompleteKTree& tree, int j, const VertexRef& u);
Schedule fromlevel_schedule(const CompleteKTree& tree, int j, const VertexRef& u);

// Vertices a schedule with this algorithm tag must reach; empty means all.
std::vector<VertexId> coverage_for(const CompleteKTree& tree, std::string_view tag, const VertexRef& u);

// Broadcast time limit ceil(log2 n).
int time_limit(const CompleteKTree& tree);

bool has_time_deviation(const Schedule& s);

} // namespace linecast
