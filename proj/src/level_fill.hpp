#pragma once

#include <cstdint>
#include <vector>

#include "linecast/ktree.hpp"
#include "linecast/schedule.hpp"

namespace linecast::detail {

// Step-by-step ToLevel(j). Level-j vertices are informed in base-k
// digit-reversal order: index i picks child (i mod k) at the top, then
// recurses on i / k. The first k^m indices are exactly S_m, and from a root
// originator every prefix is balanced, so each step can double the informed
// count. A level-j originator is rotated to index 0; any other originator
// first hands the message to the nearest level-j vertex.
class LevelFill {
public:
    enum class Order { DigitReversal, Planned };

    LevelFill(const CompleteKTree& tree, int j, const VertexRef& u, Order order = Order::DigitReversal);

    bool done() const { return !prelim_ && filled_ == width_; }
    bool next_is_final() const;
    std::vector<Call> next_step();

    const InformedSet& informed() const { return informed_; }
    VertexId leaf_at(std::int64_t index) const;
    VertexId planned_leaf(std::int64_t index) const;
    int level() const { return j_; }

private:
    const CompleteKTree& tree_;
    int j_;
    VertexRef u_;
    bool root_mode_;
    bool prelim_ = false;
    VertexId anchor_ = 0;
    std::vector<int> rot_; // rot_[d]: digit shift at depth d (1-based)
    std::int64_t width_;
    std::int64_t filled_ = 0;
    InformedSet informed_;
    std::vector<char> role_;
    Order order_;
    int step_ = 0;
    std::vector<std::vector<std::int64_t>> planned_; // planned_[t]: leaf indices informed at step t
};

// Informed-leaf schedule chosen top-down. Every subtree keeps a near-balanced
// share floor(x/k) or ceil(x/k) of its parent's count. At each step the set
// of children holding the larger share is chosen to minimise how many child
// edges carry a call. Returns, per leaf index (child digits read top-down,
// most significant first), the step it is informed; 0 marks the originator
// and `steps` marks the last step.
std::vector<int> plan_fill_steps(int k, int j, int steps, bool root_caller);

} // namespace linecast::detail
