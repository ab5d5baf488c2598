#pragma once

#include <vector>

#include "ecdlab/digraph.hpp"

namespace ecdlab {

enum class ProductKind : unsigned char { cartesian, direct, strong, lexicographic };

const char* product_kind_name(ProductKind k);
ProductKind parse_product_kind(const std::string& name);

// Row-major labeling of vertex pairs: flat(d, f) = d * right_n + f, where d
// indexes the left factor and f the right one.
struct PairIndex {
    int left_n = 0;
    int right_n = 0;

    int size() const { return left_n * right_n; }
    int flat(int d, int f) const { return d * right_n + f; }
    int left(int x) const { return x / right_n; }
    int right(int x) const { return x % right_n; }
};

enum class Side : unsigned char { left, right };

Digraph product(ProductKind kind, const Digraph& d, const Digraph& f);

// n-ary product folded left to right: ((d1 * d2) * d3) * ...
Digraph product_fold(ProductKind kind, const std::vector<Digraph>& factors);

// all pairs whose named side equals the fixed coordinate
VertexSet layer(const PairIndex& ix, Side fixed_side, int fixed);

// coordinates of the members of b on the named side (duplicates collapse)
VertexSet project(const PairIndex& ix, const VertexSet& b, Side onto);

}  // namespace ecdlab
