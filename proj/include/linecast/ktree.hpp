#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace linecast {

// Vertices are numbered in BFS order starting at 1 for the root.
using VertexId = std::int64_t;

struct VertexRef {
    int level = 0;
    std::int64_t offset = 1; // 1-based position within its level
    VertexId id = 1;

    friend bool operator==(const VertexRef&, const VertexRef&) = default;
    friend auto operator<=>(const VertexRef& a, const VertexRef& b) { return a.id <=> b.id; }
};

// An edge is named by the id of its lower endpoint.
struct Edge {
    VertexId child = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// ceil(log2 x) for x >= 1.
int ceil_log2(std::int64_t x);

// k^e, throwing Overflow when it does not fit in int64.
std::int64_t checked_pow(std::int64_t k, int e);

class CompleteKTree {
public:
    CompleteKTree(int k, int r);

    int k() const { return k_; }
    int height() const { return r_; }
    std::int64_t size() const { return n_; }
    std::int64_t level_size(int j) const;
    VertexId level_start(int j) const; // id of (j, 1)

    bool contains(VertexId v) const { return v >= 1 && v <= n_; }
    VertexId vertex_id(int level, std::int64_t offset) const;
    VertexRef vertex(VertexId v) const;
    VertexRef vertex(int level, std::int64_t offset) const { return vertex(vertex_id(level, offset)); }
    std::pair<int, std::int64_t> locate(VertexId v) const;
    VertexRef root() const { return VertexRef{0, 1, 1}; }

    VertexRef parent(const VertexRef& v) const;
    std::vector<VertexRef> children(const VertexRef& v) const;
    VertexRef ancestor_at_level(const VertexRef& v, int level) const;
    std::vector<Edge> path(const VertexRef& a, const VertexRef& b) const;
    std::vector<VertexRef> level_vertices(int j) const;

    // Unchecked id arithmetic for hot loops.
    int level_of(VertexId v) const;
    VertexId parent_id(VertexId v) const { return (v - 2) / k_ + 1; }
    VertexId first_child_id(VertexId v) const { return (v - 1) * k_ + 2; }
    int distance(VertexId a, VertexId b) const;
    std::vector<VertexId> path_ids(VertexId a, VertexId b) const;

private:
    void require(VertexId v) const;

    int k_;
    int r_;
    std::int64_t n_;
    std::vector<VertexId> starts_; // starts_[j] = first id on level j, starts_[r+1] = n+1
};

} // namespace linecast
