#pragma once

#include <optional>
#include <vector>

#include "linecast/ktree.hpp"
#include "linecast/schedule.hpp"

namespace linecast::detail {

// Finishes a broadcast in exactly `steps` more steps (1 to 3), if possible,
// with the fewest edge uses. Each uninformed vertex is assigned the step that
// informs it by a DP over subtrees whose state is the item (import, export or
// nothing) crossing the subtree's top edge at each remaining step. Subtrees
// with identical informed patterns share one table.
// `required` marks the vertices that must be informed at the end; null means
// every vertex. Other uninformed vertices only relay. Returns nullopt when
// no completion exists or the tree is too wide for the table.
std::optional<std::vector<std::vector<Call>>> solve_tail(const CompleteKTree& tree, const InformedSet& informed,
                                                         int steps, const std::vector<char>* required = nullptr);

} // namespace linecast::detail
