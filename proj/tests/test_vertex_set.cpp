#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ecdlab/vertex_set.hpp"

using ecdlab::VertexSet;

TEST_CASE("empty universe and default construction") {
    VertexSet d;
    CHECK(d.universe() == 0);
    CHECK(d.empty());
    CHECK(d.count() == 0);
    CHECK(d.first() == -1);
    CHECK(d.to_vector().empty());
    CHECK(d.to_string() == "{}");

    VertexSet z(0);
    CHECK(z == d);
    CHECK_THROWS_AS(VertexSet(-1), std::invalid_argument);
}

TEST_CASE("membership add remove contains") {
    VertexSet s(10);
    CHECK(s.empty());
    s.add(3);
    s.add(7);
    CHECK(!s.empty());
    CHECK(s.count() == 2);
    CHECK(s.contains(3));
    CHECK(s.contains(7));
    CHECK(!s.contains(0));
    s.add(3);  // idempotent
    CHECK(s.count() == 2);
    s.remove(3);
    CHECK(!s.contains(3));
    CHECK(s.count() == 1);
    s.remove(3);  // removing an absent member is a no-op
    CHECK(s.count() == 1);
}

TEST_CASE("out-of-universe access throws") {
    VertexSet s(4);
    CHECK_THROWS_AS(s.add(4), std::out_of_range);
    CHECK_THROWS_AS(s.add(-1), std::out_of_range);
    CHECK_THROWS_AS(s.contains(4), std::out_of_range);
    CHECK_THROWS_AS(s.remove(-1), std::out_of_range);
}

TEST_CASE("factories full, of, from_vector") {
    VertexSet f = VertexSet::full(5);
    CHECK(f.count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(f.contains(v));

    VertexSet o = VertexSet::of(6, {1, 4});
    CHECK(o.count() == 2);
    CHECK(o.contains(1));
    CHECK(o.contains(4));

    VertexSet v = VertexSet::from_vector(6, std::vector<int>{4, 1});
    CHECK(v == o);
    CHECK(VertexSet::full(0).empty());
}

TEST_CASE("set algebra") {
    VertexSet a = VertexSet::of(8, {0, 2, 5});
    VertexSet b = VertexSet::of(8, {2, 3, 5, 7});

    CHECK((a | b) == VertexSet::of(8, {0, 2, 3, 5, 7}));
    CHECK((a & b) == VertexSet::of(8, {2, 5}));
    CHECK((a - b) == VertexSet::of(8, {0}));
    CHECK((b - a) == VertexSet::of(8, {3, 7}));

    CHECK(a.intersects(b));
    CHECK(!VertexSet::of(8, {0}).intersects(VertexSet::of(8, {1})));

    CHECK(VertexSet::of(8, {2, 5}).is_subset_of(a));
    CHECK(!a.is_subset_of(b));
    CHECK(VertexSet(8).is_subset_of(a));  // empty set is a subset of anything

    CHECK(a.complement() == VertexSet::of(8, {1, 3, 4, 6, 7}));
    CHECK(VertexSet(3).complement() == VertexSet::full(3));
}

TEST_CASE("universe mismatch in binary operations throws") {
    VertexSet a(4), b(5);
    CHECK_THROWS_AS((void)a.intersects(b), std::invalid_argument);
    CHECK_THROWS_AS((void)a.is_subset_of(b), std::invalid_argument);
    CHECK_THROWS_AS(a |= b, std::invalid_argument);
    CHECK_THROWS_AS(a &= b, std::invalid_argument);
    CHECK_THROWS_AS(a -= b, std::invalid_argument);
}

TEST_CASE("iteration order is ascending") {
    VertexSet s = VertexSet::of(130, {128, 0, 64, 63, 129});
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 63);
    CHECK(s.next(63) == 64);
    CHECK(s.next(64) == 128);
    CHECK(s.next(128) == 129);
    CHECK(s.next(129) == -1);
    CHECK(s.to_vector() == std::vector<int>{0, 63, 64, 128, 129});
    CHECK(s.to_string() == "{0,63,64,128,129}");
}

TEST_CASE("iteration across word boundaries") {
    // members at every position near the 64-bit word seams
    VertexSet s(200);
    std::vector<int> members = {0, 1, 62, 63, 64, 65, 127, 128, 191, 199};
    for (int v : members) s.add(v);
    CHECK(s.to_vector() == members);
    CHECK(s.count() == int(members.size()));
}

TEST_CASE("lexicographic order of sorted member sequences") {
    auto s = [](std::initializer_list<int> vs) { return VertexSet::of(6, vs); };
    CHECK(s({0, 2}) < s({1}));      // 0 < 1 decides
    CHECK(s({0}) < s({0, 1}));      // prefix is smaller
    CHECK(!(s({0, 1}) < s({0})));
    CHECK(!(s({1, 3}) < s({1, 3})));  // irreflexive
    CHECK(s({}) < s({0}));            // empty set first
    CHECK(!(s({0}) < s({})));

    std::vector<VertexSet> all = {s({1, 3}), s({0, 2}), s({}), s({0}), s({1})};
    std::sort(all.begin(), all.end());
    CHECK(all[0] == s({}));
    CHECK(all[1] == s({0}));
    CHECK(all[2] == s({0, 2}));
    CHECK(all[3] == s({1}));
    CHECK(all[4] == s({1, 3}));
}

TEST_CASE("equality distinguishes universes and members") {
    CHECK(VertexSet(4) != VertexSet(5));
    CHECK(VertexSet::of(4, {1}) != VertexSet::of(4, {2}));
    CHECK(VertexSet::of(4, {1, 2}) == VertexSet::of(4, {2, 1}));
}
