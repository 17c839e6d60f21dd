#pragma once

#include <cstdint>
#include <vector>

#include "linecast/ktree.hpp"
#include "linecast/schedule.hpp"

namespace linecast {

// Calls placed at consecutive absolute times starting at start_time.
struct Fragment {
    int start_time = 1;
    std::vector<std::vector<Call>> steps;

    int end_time() const { return start_time + static_cast<int>(steps.size()) - 1; }
    std::int64_t cost() const;
};

void append_fragment(Schedule& s, const Fragment& f);

// Offsets (1-based) of level-j vertices informed after round m:
// {1 + i * k^(j-m) : 0 <= i < k^m}.
std::vector<std::int64_t> s_set(int k, int j, int m);
// Targets first reached in round m: S_1, then S_m \ S_(m-1).
std::vector<std::int64_t> s_prime_set(int k, int j, int m);

struct Round {
    int m = 0;
    std::int64_t stride = 0;           // k^(j-m)
    std::vector<std::int64_t> targets; // S'_m
};

struct RoundPlan {
    int k = 0;
    int j = 0;
    std::vector<Round> rounds;
};

RoundPlan round_plan(int k, int j);

struct UpcallAssignment {
    int i = 0;                     // distance of the call
    std::int64_t t = 0;            // 1..k^(j-i)
    std::int64_t leaf_offset = 0;  // level-j caller
    int target_level = 0;          // j - i
    std::int64_t target_offset = 0;
};

struct UpcallPlan {
    int k = 0;
    int j = 0;
    std::vector<UpcallAssignment> assignments;
};

// Level-j vertex a_i + (t-1)k^i calls its ancestor at level j-i,
// with a_i = 1 + (k^(i-1) - 1)/(k - 1).
UpcallPlan upcall_assignments(int k, int j);

// Informs L_j starting from u. For the root this takes ceil(log2(k^j + 1))
// steps and the informed count doubles every step.
Fragment to_level(const CompleteKTree& tree, int j, const VertexRef& u, int start_time = 1);

// One step in which level-j vertices inform every vertex above level j.
// Throws PreconditionViolated unless all of L_j is in `informed`.
Fragment from_level(const CompleteKTree& tree, int j, const VertexRef& u, int at_time,
                    const InformedSet& informed);

// Vertices ToLevel(j) leaves informed: {u} and all of L_j.
std::vector<VertexId> to_level_coverage(const CompleteKTree& tree, int j, const VertexRef& u);

} // namespace linecast
