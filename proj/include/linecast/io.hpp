#pragma once

#include <string>
#include <string_view>

#include "linecast/schedule.hpp"

namespace linecast {

// Schedule as JSON: k, r, n, originator, algorithm, steps, totals, valid, deviations.
std::string to_json(const Schedule& s, bool valid);
// Inverse of to_json. Calls keep the path and cost given in the file, so a
// tampered file shows up as MalformedCall when validated. Throws Parse.
Schedule from_json(std::string_view text);

// Human-readable listing, one call per line.
std::string to_trace(const Schedule& s, const ValidationReport& report);

} // namespace linecast
