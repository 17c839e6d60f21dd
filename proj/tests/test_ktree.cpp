#include <doctest.h>

#include "linecast/error.hpp"
#include "linecast/ktree.hpp"

using namespace linecast;

namespace {
std::vector<VertexId> ids(const std::vector<VertexRef>& v) {
    std::vector<VertexId> out;
    for (const auto& x : v) out.push_back(x.id);
    return out;
}
std::vector<VertexId> edge_ids(const std::vector<Edge>& v) {
    std::vector<VertexId> out;
    for (const auto& e : v) out.push_back(e.child);
    return out;
}
} // namespace

TEST_CASE("tree sizes") {
    CHECK(CompleteKTree(2, 2).size() == 7);
    CHECK(CompleteKTree(3, 2).size() == 13);
    CHECK(CompleteKTree(2, 1).size() == 3);
    CHECK_THROWS_AS(CompleteKTree(1, 2), Error);
    CHECK_THROWS_AS(CompleteKTree(2, 0), Error);
    CHECK_THROWS_AS(CompleteKTree(2, 80), Error);
}

TEST_CASE("ids and coordinates") {
    CompleteKTree t2(2, 3), t3(3, 2);
    CHECK(t2.vertex_id(2, 3) == 6);
    CHECK(t2.vertex_id(0, 1) == 1);
    CHECK(t3.vertex_id(1, 2) == 3);
    CHECK(t2.locate(6) == std::pair<int, std::int64_t>{2, 3});
    CHECK(t2.locate(1) == std::pair<int, std::int64_t>{0, 1});
    CHECK(t2.locate(7) == std::pair<int, std::int64_t>{2, 4});
    CHECK_THROWS(t2.vertex_id(2, 5));
    CHECK_THROWS(t2.locate(16));
}

TEST_CASE("parents and children") {
    CompleteKTree t2(2, 2), t3(3, 2);
    CHECK(t2.parent(t2.vertex(6)).id == 3);
    CHECK(t3.parent(t3.vertex(4)).id == 1);
    try {
        t2.parent(t2.root());
        FAIL("root has a parent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RootHasNoParent);
    }
    CHECK(ids(t3.children(t3.root())) == std::vector<VertexId>{2, 3, 4});
    CHECK(ids(t2.children(t2.vertex(2))) == std::vector<VertexId>{4, 5});
    try {
        t2.children(t2.vertex(4));
        FAIL("leaf has children");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LeafHasNoChildren);
    }
}

TEST_CASE("ancestors") {
    CompleteKTree t2(2, 2), t3(3, 2);
    CHECK(t2.ancestor_at_level(t2.vertex(7), 0).id == 1);
    CHECK(t2.ancestor_at_level(t2.vertex(7), 1).id == 3);
    CHECK(t3.ancestor_at_level(t3.vertex(5), 1).id == 2);
    CHECK(t2.ancestor_at_level(t2.vertex(7), 2).id == 7);
    CHECK_THROWS(t2.ancestor_at_level(t2.vertex(3), 2));
}

TEST_CASE("paths") {
    CompleteKTree t(2, 2);
    CHECK(edge_ids(t.path(t.vertex(4), t.vertex(5))) == std::vector<VertexId>{4, 5});
    CHECK(edge_ids(t.path(t.vertex(1), t.vertex(7))) == std::vector<VertexId>{3, 7});
    CHECK(edge_ids(t.path(t.vertex(4), t.vertex(7))) == std::vector<VertexId>{4, 2, 3, 7});
    CHECK(t.distance(4, 7) == 4);
    try {
        t.path(t.vertex(3), t.vertex(3));
        FAIL("same vertex");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SameVertex);
    }
}

TEST_CASE("levels") {
    CompleteKTree t2(2, 2), t3(3, 2);
    CHECK(ids(t2.level_vertices(2)) == std::vector<VertexId>{4, 5, 6, 7});
    CHECK(ids(t3.level_vertices(0)) == std::vector<VertexId>{1});
    CHECK(ids(t3.level_vertices(1)) == std::vector<VertexId>{2, 3, 4});
}

TEST_CASE("id arithmetic agrees with coordinates") {
    for (int k = 2; k <= 5; ++k) {
        CompleteKTree t(k, 3);
        for (VertexId v = 2; v <= t.size(); ++v) {
            CHECK(t.parent_id(v) == t.parent(t.vertex(v)).id);
            CHECK(t.level_of(v) == t.vertex(v).level);
        }
    }
}

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(7) == 3);
    CHECK(ceil_log2(8) == 3);
    CHECK(ceil_log2(9) == 4);
    CHECK_THROWS(checked_pow(10, 19));
}
