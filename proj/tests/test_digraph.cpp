#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ecdlab/digraph.hpp"

using ecdlab::Arc;
using ecdlab::Digraph;
using ecdlab::VertexSet;

namespace {

// Running example: arcs 1→0, 1→2, 3→1 on four vertices.  Vertex 1 covers
// {0,1,2}; vertex 3 covers {1,3}; vertices 0 and 2 are sinks.
Digraph spine() { return Digraph(4, {{1, 0}, {1, 2}, {3, 1}}); }

Digraph cycle4() { return Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

}  // namespace

TEST_CASE("construction, counts and arc queries") {
    Digraph d = spine();
    CHECK(d.vertex_count() == 4);
    CHECK(d.arc_count() == 3);
    CHECK(d.has_arc(1, 0));
    CHECK(d.has_arc(3, 1));
    CHECK(!d.has_arc(0, 1));
    CHECK(!d.has_arc(1, 3));

    CHECK(Digraph().vertex_count() == 0);
    CHECK(Digraph(3, {}).arc_count() == 0);
}

TEST_CASE("invalid construction throws") {
    CHECK_THROWS_AS(Digraph(-1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::out_of_range);
    CHECK_THROWS_AS(Digraph(2, {{-1, 0}}), std::out_of_range);
    CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), std::invalid_argument);  // parallel arc
}

TEST_CASE("loops count toward both degrees") {
    Digraph loop(1, {{0, 0}});
    CHECK(loop.arc_count() == 1);
    CHECK(loop.out_degree(0) == 1);
    CHECK(loop.in_degree(0) == 1);
    CHECK(loop.degree(0) == 2);
    ecdlab::VertexClass c = loop.classify(0);
    CHECK(!c.sink);
    CHECK(!c.source);
    CHECK(!c.isolated);
}

TEST_CASE("neighborhoods") {
    Digraph d = spine();
    CHECK(d.out_neighbors(1) == VertexSet::of(4, {0, 2}));
    CHECK(d.in_neighbors(1) == VertexSet::of(4, {3}));
    CHECK(d.closed_out_neighborhood(1) == VertexSet::of(4, {0, 1, 2}));
    CHECK(d.closed_out_neighborhood(0) == VertexSet::of(4, {0}));
    CHECK(d.closed_in_neighborhood(1) == VertexSet::of(4, {1, 3}));
    CHECK(d.closed_in_neighborhood(3) == VertexSet::of(4, {3}));

    Digraph c = cycle4();
    CHECK(c.closed_out_neighborhood(0) == VertexSet::of(4, {0, 1}));

    Digraph single(1, {});
    CHECK(single.closed_out_neighborhood(0) == VertexSet::of(1, {0}));
}

TEST_CASE("vertex classification") {
    Digraph d = spine();
    CHECK(d.classify(0).sink);
    CHECK(d.classify(0).leaf_sink);
    CHECK(d.classify(3).source);
    CHECK(d.classify(3).leaf_source);
    CHECK(!d.classify(1).sink);
    CHECK(!d.classify(1).source);
    CHECK(d.classify(1).ordinary());  // middle of the spine: no flag applies

    // a vertex that only collects arcs from everyone else is still special
    Digraph funnel(3, {{0, 2}, {1, 2}, {2, 0}});
    CHECK(funnel.classify(2).in_universal);
    CHECK(!funnel.classify(2).sink);
    CHECK(!funnel.classify(2).ordinary());

    Digraph iso(1, {});
    ecdlab::VertexClass c = iso.classify(0);
    CHECK(c.isolated);
    CHECK(c.sink);
    CHECK(c.source);

    // star with the center as a source: center is a source, leaves are leaf-sinks
    Digraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.classify(0).source);
    CHECK(star.classify(0).out_universal);
    for (int leaf = 1; leaf <= 3; ++leaf) {
        CHECK(star.classify(leaf).leaf_sink);
        CHECK(!star.classify(leaf).leaf_source);
    }

    // every vertex of a sink-free cycle is ordinary
    for (int v = 0; v < 4; ++v) CHECK(cycle4().classify(v).ordinary());
}

TEST_CASE("arcs come out in canonical order") {
    Digraph d(3, {{2, 0}, {0, 2}, {0, 1}, {2, 1}});
    std::vector<Arc> expect = {{0, 1}, {0, 2}, {2, 0}, {2, 1}};
    CHECK(d.arcs() == expect);
}

TEST_CASE("reverse flips every arc and preserves counts") {
    Digraph d = spine();
    Digraph r = d.reverse();
    CHECK(r.vertex_count() == 4);
    CHECK(r.arc_count() == 3);
    for (auto [u, v] : d.arcs()) CHECK(r.has_arc(v, u));
    CHECK(r.reverse() == d);

    // an arcless digraph is self-reverse
    Digraph e(3, {});
    CHECK(e.reverse() == e);

    // reversal keeps a sink-free cycle sink-free
    Digraph rc = cycle4().reverse();
    for (int v = 0; v < 4; ++v) {
        CHECK(rc.out_degree(v) == 1);
        CHECK(rc.in_degree(v) == 1);
    }

    // reversing a source-centered star yields the sink-centered one
    Digraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    Digraph rs = star.reverse();
    CHECK(rs.classify(0).sink);
    CHECK(rs.classify(0).in_universal);
    for (int leaf = 1; leaf <= 3; ++leaf) CHECK(rs.classify(leaf).leaf_source);
}

TEST_CASE("induced subgraphs") {
    Digraph d = spine();

    // keeping everything is the identity
    Digraph::Induced all = d.induced(VertexSet::full(4));
    CHECK(all.graph == d);
    CHECK(all.vertices == std::vector<int>{0, 1, 2, 3});

    // vertices {0,1} keep only the arc 1→0
    Digraph::Induced two = d.induced(VertexSet::of(4, {0, 1}));
    CHECK(two.graph.vertex_count() == 2);
    CHECK(two.graph.arc_count() == 1);
    CHECK(two.graph.has_arc(1, 0));
    CHECK(two.vertices == std::vector<int>{0, 1});

    // empty selection gives the empty digraph
    Digraph::Induced none = d.induced(VertexSet(4));
    CHECK(none.graph.vertex_count() == 0);
    CHECK(none.vertices.empty());

    // labels compress while old labels stay recoverable
    Digraph::Induced odd = d.induced(VertexSet::of(4, {1, 3}));
    CHECK(odd.vertices == std::vector<int>{1, 3});
    CHECK(odd.graph.has_arc(1, 0));  // the old arc 3→1 under new labels

    CHECK_THROWS_AS(d.induced(VertexSet(3)), std::invalid_argument);
}

TEST_CASE("weak components") {
    CHECK(cycle4().components().size() == 1);
    CHECK(cycle4().components()[0] == VertexSet::full(4));

    Digraph edgeless(3, {});
    std::vector<VertexSet> singles = edgeless.components();
    REQUIRE(singles.size() == 3);
    for (int v = 0; v < 3; ++v) CHECK(singles[v] == VertexSet::of(3, {v}));

    // triangle plus a digon: components of sizes 3 and 2, ordered by smallest member
    Digraph two(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 3}});
    std::vector<VertexSet> comps = two.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::of(5, {0, 1, 2}));
    CHECK(comps[1] == VertexSet::of(5, {3, 4}));

    // weak connectivity ignores arc direction
    Digraph path(3, {{0, 1}, {2, 1}});
    CHECK(path.components().size() == 1);
}

TEST_CASE("from_adjacency matches arc construction") {
    std::vector<VertexSet> rows(3, VertexSet(3));
    rows[0].add(1);
    rows[2].add(0);
    Digraph d = Digraph::from_adjacency(rows);
    CHECK(d == Digraph(3, {{0, 1}, {2, 0}}));
    CHECK(d.in_neighbors(0) == VertexSet::of(3, {2}));

    std::vector<VertexSet> bad = {VertexSet(2), VertexSet(3)};
    CHECK_THROWS_AS(Digraph::from_adjacency(bad), std::invalid_argument);
}
