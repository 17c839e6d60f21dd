#include "linecast/bounds.hpp"

#include "linecast/error.hpp"
#include "linecast/ktree.hpp"

namespace linecast {

namespace {

void check_kr(int k, int r) {
    if (k < 2 || r < 1) throw Error(ErrorKind::InvalidParams, "need k >= 2 and r >= 1");
}

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

} // namespace

std::string_view to_string(DispatchCase c) {
    switch (c) {
    case DispatchCase::Alg1: return "alg1";
    case DispatchCase::Alg2: return "alg2";
    case DispatchCase::Alg3: return "alg3";
    }
    return "alg?";
}

std::int64_t tree_size(int k, int r) {
    check_kr(k, r);
    return (checked_pow(k, r + 1) - 1) / (k - 1);
}

Rational farley_bound(int k, int r) {
    std::int64_t n = tree_size(k, r);
    return q(n - 1) * q(ceil_log2(n));
}

Rational cost_lower_bound(int k, int r, bool leaf_adjust) {
    std::int64_t n = tree_size(k, r);
    Rational lk = q(ceil_log2(k));
    Rational coef = q(2) - q(2 * (k - 1), std::int64_t(k) * k) - lk / q(k);
    Rational v = q(n) * coef - q(2, std::int64_t(k) * k) + lk / q(k) - q(1);
    if (leaf_adjust) v = v - q(1);
    return v;
}

Rational alg1_upper(int k, int r) {
    std::int64_t n = tree_size(k, r);
    Rational c = q(ceil_log2(k + 1));
    return (q(2) - c / q(k)) * q(n) + c / q(k) - q(2);
}

Rational alg2_upper(int k, int r) {
    if (r < 2) throw Error(ErrorKind::OutOfRange, "alg2 bound needs r >= 2");
    std::int64_t n = tree_size(k, r);
    Rational c = q(ceil_log2(k + 1));
    Rational kk = q(k);
    Rational coef = q(2) - q(k - 1) * c / (kk * kk) + q(1, std::int64_t(k) * (k - 1));
    return coef * q(n) - q(2 * (r - 1)) + q(k, std::int64_t(k - 1) * (k - 1)) + q(1, k) - c / (kk * kk);
}

Rational alg3_upper(int k, int r) {
    std::int64_t n = tree_size(k, r);
    std::int64_t kr = checked_pow(k, r);
    return (q(2) + q(1, k - 1)) * q(n) + q(2 * std::int64_t(r) * ceil_log2(kr)) - q(2 * ceil_log2(kr + 1)) -
           q(3 * std::int64_t(r)) - q(r + 1, k - 1);
}

Rational tolevel_upper(int k, int j) {
    check_kr(k, j);
    std::int64_t kj = checked_pow(k, j);
    return q(2 * std::int64_t(k) * (kj - 1), k - 1) + q(2 * std::int64_t(j) * ceil_log2(kj)) -
           q(2 * ceil_log2(kj + 1)) - q(2 * std::int64_t(j)) + q(2);
}

std::int64_t fromlevel_cost(int k, int j, bool root_originator) {
    check_kr(k, j);
    std::int64_t s = 0;
    for (int i = 1; i <= j; ++i) s += std::int64_t(i) * checked_pow(k, j - i);
    return root_originator ? s - j : s;
}

std::int64_t fromlevel_cost_closed(int k, int j) {
    check_kr(k, j);
    std::int64_t num = checked_pow(k, j + 1) - std::int64_t(k) * j - k + j;
    return num / (std::int64_t(k - 1) * (k - 1)) - j;
}

std::int64_t eq3_round_cost(int k, int j, int m) {
    if (m < 1 || m > j) throw Error(ErrorKind::OutOfRange, "round index out of range");
    std::int64_t km = checked_pow(k, m), km1 = checked_pow(k, m - 1);
    std::int64_t inner = km - km1 - (ceil_log2(km + 1) - ceil_log2(km1 + 1));
    return 2 * std::int64_t(j - m + 1) * inner;
}

DispatchCase lbckt_case(int k, int r) {
    std::int64_t n = tree_size(k, r);
    int c = ceil_log2(k + 1);
    int t = ceil_log2(n);
    if (std::int64_t(r) * c <= t) return DispatchCase::Alg1;
    if (ceil_log2(n - checked_pow(k, r)) + c <= t) return DispatchCase::Alg2;
    return DispatchCase::Alg3;
}

Rational upper_for(DispatchCase alg, int k, int r) {
    switch (alg) {
    case DispatchCase::Alg1: return alg1_upper(k, r);
    case DispatchCase::Alg2: return alg2_upper(k, r);
    case DispatchCase::Alg3: return alg3_upper(k, r);
    }
    return alg3_upper(k, r);
}

Rational dispatched_upper(int k, int r) { return upper_for(lbckt_case(k, r), k, r); }

BoundsReport bounds_report(int k, int r, bool leaf_adjust) {
    BoundsReport b;
    b.k = k;
    b.r = r;
    b.n = tree_size(k, r);
    b.lower = cost_lower_bound(k, r, leaf_adjust);
    b.alg1 = alg1_upper(k, r);
    b.has_alg2 = r >= 2;
    if (b.has_alg2) b.alg2 = alg2_upper(k, r);
    b.alg3 = alg3_upper(k, r);
    b.farley = farley_bound(k, r);
    b.dispatched = lbckt_case(k, r);
    b.dispatched_upper = upper_for(b.dispatched, k, r);
    return b;
}

} // namespace linecast
