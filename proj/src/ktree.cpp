#include "linecast/ktree.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "linecast/error.hpp"

namespace linecast {

int ceil_log2(std::int64_t x) {
    if (x < 1) throw Error(ErrorKind::InvalidParams, "ceil_log2 needs x >= 1");
    return x == 1 ? 0 : std::bit_width(static_cast<std::uint64_t>(x - 1));
}

std::int64_t checked_pow(std::int64_t k, int e) {
    if (e < 0) throw Error(ErrorKind::InvalidParams, "negative exponent");
    std::int64_t p = 1;
    for (int i = 0; i < e; ++i) {
        if (p > std::numeric_limits<std::int64_t>::max() / k)
            throw Error(ErrorKind::Overflow, "k^" + std::to_string(e) + " overflows");
        p *= k;
    }
    return p;
}

CompleteKTree::CompleteKTree(int k, int r) : k_(k), r_(r) {
    if (k < 2 || r < 1)
        throw Error(ErrorKind::InvalidParams, "need k >= 2 and r >= 1");
    checked_pow(k, r + 1); // (k^(r+1) - 1) / (k - 1) must be representable
    starts_.resize(r + 2);
    starts_[0] = 1;
    std::int64_t width = 1;
    for (int j = 0; j <= r; ++j) {
        starts_[j + 1] = starts_[j] + width;
        width *= k;
    }
    n_ = starts_[r + 1] - 1;
}

std::int64_t CompleteKTree::level_size(int j) const {
    if (j < 0 || j > r_) throw Error(ErrorKind::OutOfRange, "level out of range");
    return starts_[j + 1] - starts_[j];
}

VertexId CompleteKTree::level_start(int j) const {
    if (j < 0 || j > r_) throw Error(ErrorKind::OutOfRange, "level out of range");
    return starts_[j];
}

VertexId CompleteKTree::vertex_id(int level, std::int64_t offset) const {
    if (level < 0 || level > r_ || offset < 1 || offset > level_size(level))
        throw Error(ErrorKind::OutOfRange, "vertex (" + std::to_string(level) + ", " +
                                               std::to_string(offset) + ") not in tree");
    return starts_[level] + offset - 1;
}

void CompleteKTree::require(VertexId v) const {
    if (!contains(v)) throw Error(ErrorKind::OutOfRange, "vertex id " + std::to_string(v) + " not in tree");
}

int CompleteKTree::level_of(VertexId v) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), v);
    return static_cast<int>(it - starts_.begin()) - 1;
}

std::pair<int, std::int64_t> CompleteKTree::locate(VertexId v) const {
    require(v);
    int level = level_of(v);
    return {level, v - starts_[level] + 1};
}

VertexRef CompleteKTree::vertex(VertexId v) const {
    auto [level, offset] = locate(v);
    return VertexRef{level, offset, v};
}

VertexRef CompleteKTree::parent(const VertexRef& v) const {
    require(v.id);
    if (v.id == 1) throw Error(ErrorKind::RootHasNoParent, "root has no parent");
    return vertex(parent_id(v.id));
}

std::vector<VertexRef> CompleteKTree::children(const VertexRef& v) const {
    require(v.id);
    if (level_of(v.id) == r_) throw Error(ErrorKind::LeafHasNoChildren, "leaf has no children");
    std::vector<VertexRef> out;
    out.reserve(k_);
    VertexId first = first_child_id(v.id);
    for (int c = 0; c < k_; ++c) out.push_back(vertex(first + c));
    return out;
}

VertexRef CompleteKTree::ancestor_at_level(const VertexRef& v, int level) const {
    require(v.id);
    int cur = level_of(v.id);
    if (level < 0 || level > cur) throw Error(ErrorKind::OutOfRange, "ancestor level out of range");
    VertexId a = v.id;
    for (; cur > level; --cur) a = parent_id(a);
    return vertex(a);
}

int CompleteKTree::distance(VertexId a, VertexId b) const {
    int la = level_of(a), lb = level_of(b), d = 0;
    while (la > lb) { a = parent_id(a); --la; ++d; }
    while (lb > la) { b = parent_id(b); --lb; ++d; }
    while (a != b) { a = parent_id(a); b = parent_id(b); d += 2; }
    return d;
}

std::vector<VertexId> CompleteKTree::path_ids(VertexId a, VertexId b) const {
    // Up from a to the common ancestor, then down to b. Edges are named by child ids.
    std::vector<VertexId> up, down;
    int la = level_of(a), lb = level_of(b);
    while (la > lb) { up.push_back(a); a = parent_id(a); --la; }
    while (lb > la) { down.push_back(b); b = parent_id(b); --lb; }
    while (a != b) {
        up.push_back(a); a = parent_id(a);
        down.push_back(b); b = parent_id(b);
    }
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

std::vector<Edge> CompleteKTree::path(const VertexRef& a, const VertexRef& b) const {
    require(a.id);
    require(b.id);
    if (a.id == b.id) throw Error(ErrorKind::SameVertex, "path endpoints coincide");
    std::vector<Edge> out;
    for (VertexId e : path_ids(a.id, b.id)) out.push_back(Edge{e});
    return out;
}

std::vector<VertexRef> CompleteKTree::level_vertices(int j) const {
    std::int64_t w = level_size(j);
    std::vector<VertexRef> out;
    out.reserve(static_cast<std::size_t>(w));
    for (std::int64_t o = 1; o <= w; ++o) out.push_back(VertexRef{j, o, starts_[j] + o - 1});
    return out;
}

} // namespace linecast
