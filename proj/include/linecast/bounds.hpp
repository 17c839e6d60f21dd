#pragma once

#include <cstdint>
#include <string_view>

#include "linecast/rational.hpp"

namespace linecast {

enum class DispatchCase { Alg1 = 1, Alg2 = 2, Alg3 = 3 };

std::string_view to_string(DispatchCase c);

// Number of vertices of the complete k-ary tree of height r.
std::int64_t tree_size(int k, int r);

Rational farley_bound(int k, int r);
Rational cost_lower_bound(int k, int r, bool leaf_adjust = false);
Rational alg1_upper(int k, int r);
Rational alg2_upper(int k, int r); // r >= 2
Rational alg3_upper(int k, int r);
Rational tolevel_upper(int k, int j);
std::int64_t fromlevel_cost(int k, int j, bool root_originator = true);
std::int64_t fromlevel_cost_closed(int k, int j); // closed form, root originator
std::int64_t eq3_round_cost(int k, int j, int m);

DispatchCase lbckt_case(int k, int r);
Rational dispatched_upper(int k, int r);
Rational upper_for(DispatchCase alg, int k, int r);

struct BoundsReport {
    int k = 0;
    int r = 0;
    std::int64_t n = 0;
    Rational lower;
    Rational alg1;
    Rational alg2; // zero when r == 1
    bool has_alg2 = false;
    Rational alg3;
    Rational farley;
    DispatchCase dispatched = DispatchCase::Alg1;
    Rational dispatched_upper;
};

BoundsReport bounds_report(int k, int r, bool leaf_adjust = false);

} // namespace linecast
