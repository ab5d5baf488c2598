#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ecdlab/digraph.hpp"
#include "ecdlab/generators.hpp"
#include "ecdlab/harness.hpp"
#include "ecdlab/products.hpp"

using namespace ecdlab;

namespace {

// Two fixed examples: a four-vertex digraph with a dominating middle vertex
// feeding two sinks, and its three-vertex cousin.
Digraph left_example() { return Digraph(4, {{1, 0}, {1, 2}, {3, 1}}); }
Digraph right_example() { return Digraph(3, {{1, 0}, {1, 2}}); }

// does `p` hold exactly the arcs required by the textbook definition of `kind`?
bool arcs_match_definition(ProductKind kind, const Digraph& d, const Digraph& f, const Digraph& p) {
    PairIndex ix{d.vertex_count(), f.vertex_count()};
    if (p.vertex_count() != ix.size()) return false;
    for (int u = 0; u < d.vertex_count(); ++u)
        for (int a = 0; a < f.vertex_count(); ++a)
            for (int v = 0; v < d.vertex_count(); ++v)
                for (int b = 0; b < f.vertex_count(); ++b) {
                    bool darc = d.has_arc(u, v), dsame = u == v;
                    bool farc = f.has_arc(a, b), fsame = a == b;
                    bool want = false;
                    switch (kind) {
                        case ProductKind::cartesian: want = (darc && fsame) || (dsame && farc); break;
                        case ProductKind::direct: want = darc && farc; break;
                        case ProductKind::strong:
                            want = (darc && fsame) || (dsame && farc) || (darc && farc);
                            break;
                        case ProductKind::lexicographic: want = darc || (dsame && farc); break;
                    }
                    if (p.has_arc(ix.flat(u, a), ix.flat(v, b)) != want) return false;
                }
    return true;
}

}  // namespace

TEST_CASE("kind names parse and print") {
    for (ProductKind k : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong,
                          ProductKind::lexicographic})
        CHECK(parse_product_kind(product_kind_name(k)) == k);
    CHECK(parse_product_kind("lex") == ProductKind::lexicographic);
    CHECK_THROWS_AS(parse_product_kind("tensor"), std::invalid_argument);
}

TEST_CASE("pair index round trip") {
    PairIndex ix{3, 5};
    CHECK(ix.size() == 15);
    for (int d = 0; d < 3; ++d)
        for (int f = 0; f < 5; ++f) {
            int x = ix.flat(d, f);
            CHECK(ix.left(x) == d);
            CHECK(ix.right(x) == f);
        }
    CHECK(ix.flat(1, 2) == 7);  // row-major: left coordinate varies slowest
}

TEST_CASE("all four products match their definitions on small pairs") {
    std::vector<Digraph> pool = all_loopless_digraphs(2);
    pool.push_back(left_example());
    pool.push_back(right_example());
    pool.push_back(gen_cycle(uniform_cycle(1)));  // a loop vertex
    for (const Digraph& d : pool)
        for (const Digraph& f : pool)
            for (ProductKind k : {ProductKind::cartesian, ProductKind::direct,
                                  ProductKind::strong, ProductKind::lexicographic})
                CHECK(arcs_match_definition(k, d, f, product(k, d, f)));
}

TEST_CASE("one-vertex arcless factor is a unit on the left") {
    Digraph unit(1, {});
    for (const Digraph& f : all_loopless_digraphs(3)) {
        CHECK(product(ProductKind::cartesian, unit, f) == f);
        CHECK(product(ProductKind::strong, unit, f) == f);
        CHECK(product(ProductKind::lexicographic, unit, f) == f);
        // the direct product with an arcless factor erases every arc
        CHECK(product(ProductKind::direct, unit, f).arc_count() == 0);
    }
}

TEST_CASE("direct product spreads out-neighborhoods multiplicatively") {
    Digraph d = left_example(), e = right_example();
    Digraph p = product(ProductKind::direct, d, e);
    PairIndex ix{4, 3};
    // the pair (dominating vertex of d, middle of e) reaches all four sink pairs
    int hub = ix.flat(1, 1);
    CHECK(p.out_degree(hub) == 4);
    CHECK(p.out_neighbors(hub) ==
          VertexSet::of(12, {ix.flat(0, 0), ix.flat(0, 2), ix.flat(2, 0), ix.flat(2, 2)}));
    // degrees multiply throughout
    for (int u = 0; u < 4; ++u)
        for (int a = 0; a < 3; ++a) {
            CHECK(p.out_degree(ix.flat(u, a)) == d.out_degree(u) * e.out_degree(a));
            CHECK(p.in_degree(ix.flat(u, a)) == d.in_degree(u) * e.in_degree(a));
        }
}

TEST_CASE("strong product is the union of cartesian and direct arcs") {
    Digraph d = left_example(), e = right_example();
    Digraph s = product(ProductKind::strong, d, e);
    Digraph c = product(ProductKind::cartesian, d, e);
    Digraph t = product(ProductKind::direct, d, e);
    CHECK(s.vertex_count() == c.vertex_count());
    for (int u = 0; u < s.vertex_count(); ++u)
        CHECK(s.out_neighbors(u) == (c.out_neighbors(u) | t.out_neighbors(u)));
}

TEST_CASE("lexicographic product of isolated vertices copies the right factor") {
    Digraph three(3, {});
    Digraph c2 = gen_cycle(uniform_cycle(2));
    Digraph p = product(ProductKind::lexicographic, three, c2);
    std::vector<VertexSet> comps = p.components();
    REQUIRE(comps.size() == 3);
    for (const VertexSet& comp : comps) {
        Digraph::Induced part = p.induced(comp);
        CHECK(part.graph == c2);
    }
}

TEST_CASE("layers induce factor copies in the cartesian product") {
    Digraph d = left_example(), e = right_example();
    Digraph c = product(ProductKind::cartesian, d, e);
    PairIndex ix{4, 3};
    // fixing the right coordinate leaves a copy of the left factor
    for (int f = 0; f < 3; ++f) {
        Digraph::Induced copy = c.induced(layer(ix, Side::right, f));
        CHECK(copy.graph == d);
    }
    // fixing the left coordinate leaves a copy of the right factor
    for (int v = 0; v < 4; ++v) {
        Digraph::Induced copy = c.induced(layer(ix, Side::left, v));
        CHECK(copy.graph == e);
    }
    // in the direct product the same layer is arcless at loop-free coordinates
    Digraph t = product(ProductKind::direct, d, e);
    CHECK(t.induced(layer(ix, Side::right, 0)).graph.arc_count() == 0);
}

TEST_CASE("layer and project") {
    PairIndex ix{2, 2};
    CHECK(layer(ix, Side::left, 0) == VertexSet::of(4, {0, 1}));
    CHECK(layer(ix, Side::right, 1) == VertexSet::of(4, {1, 3}));
    CHECK_THROWS_AS(layer(ix, Side::left, 2), std::out_of_range);

    // single right vertex: the one left layer is everything
    PairIndex tall{3, 1};
    CHECK(layer(tall, Side::right, 0) == VertexSet::full(3));

    // singleton projects to its coordinates
    VertexSet one = VertexSet::of(4, {ix.flat(1, 0)});
    CHECK(project(ix, one, Side::left) == VertexSet::of(2, {1}));
    CHECK(project(ix, one, Side::right) == VertexSet::of(2, {0}));

    // the diagonal projects onto all of either side
    VertexSet diag = VertexSet::of(4, {ix.flat(0, 0), ix.flat(1, 1)});
    CHECK(project(ix, diag, Side::left) == VertexSet::full(2));
    CHECK(project(ix, diag, Side::right) == VertexSet::full(2));

    CHECK_THROWS_AS(project(ix, VertexSet(3), Side::left), std::invalid_argument);
}

TEST_CASE("products commute up to coordinate swap") {
    Digraph d = right_example();
    Digraph f = gen_cycle(uniform_cycle(3));
    PairIndex ix{d.vertex_count(), f.vertex_count()};
    PairIndex xi{f.vertex_count(), d.vertex_count()};
    for (ProductKind k : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong}) {
        Digraph p = product(k, d, f);
        Digraph q = product(k, f, d);
        for (auto [x, y] : p.arcs())
            CHECK(q.has_arc(xi.flat(ix.right(x), ix.left(x)), xi.flat(ix.right(y), ix.left(y))));
        CHECK(p.arc_count() == q.arc_count());
    }
}

TEST_CASE("folded products associate to the left") {
    Digraph a = gen_cycle(uniform_cycle(2));
    Digraph b = right_example();
    Digraph c = gen_cycle(uniform_cycle(3));
    for (ProductKind k : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong,
                          ProductKind::lexicographic}) {
        CHECK(product_fold(k, {a}) == a);
        CHECK(product_fold(k, {a, b}) == product(k, a, b));
        CHECK(product_fold(k, {a, b, c}) == product(k, product(k, a, b), c));
    }
    CHECK_THROWS_AS(product_fold(ProductKind::direct, {}), std::invalid_argument);
}
