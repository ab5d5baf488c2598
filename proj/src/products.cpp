#include "ecdlab/products.hpp"

#include <stdexcept>
#include <string>

namespace ecdlab {

const char* product_kind_name(ProductKind k) {
    switch (k) {
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::direct: return "direct";
        case ProductKind::strong: return "strong";
        case ProductKind::lexicographic: return "lexicographic";
    }
    return "?";
}

ProductKind parse_product_kind(const std::string& name) {
    if (name == "cartesian") return ProductKind::cartesian;
    if (name == "direct") return ProductKind::direct;
    if (name == "strong") return ProductKind::strong;
    if (name == "lexicographic" || name == "lex") return ProductKind::lexicographic;
    throw std::invalid_argument("unknown product kind '" + name + "'");
}

Digraph product(ProductKind kind, const Digraph& d, const Digraph& f) {
    if (static_cast<long long>(d.vertex_count()) * f.vertex_count() > (1 << 22))
        throw std::invalid_argument("product: result exceeds the supported vertex count");
    PairIndex ix{d.vertex_count(), f.vertex_count()};
    std::vector<VertexSet> rows(ix.size(), VertexSet(ix.size()));
    auto add_pairs = [&](int dd, int d2, int ff, int f2) { rows[ix.flat(dd, ff)].add(ix.flat(d2, f2)); };

    bool cart_like = kind == ProductKind::cartesian || kind == ProductKind::strong;
    bool dir_like = kind == ProductKind::direct || kind == ProductKind::strong;

    if (cart_like) {
        for (int u = 0; u < d.vertex_count(); ++u)
            for (int v = d.out_neighbors(u).first(); v >= 0; v = d.out_neighbors(u).next(v))
                for (int x = 0; x < f.vertex_count(); ++x) add_pairs(u, v, x, x);
        for (int x = 0; x < d.vertex_count(); ++x)
            for (int u = 0; u < f.vertex_count(); ++u)
                for (int v = f.out_neighbors(u).first(); v >= 0; v = f.out_neighbors(u).next(v)) add_pairs(x, x, u, v);
    }
    if (dir_like) {
        for (int u = 0; u < d.vertex_count(); ++u)
            for (int v = d.out_neighbors(u).first(); v >= 0; v = d.out_neighbors(u).next(v))
                for (int a = 0; a < f.vertex_count(); ++a)
                    for (int b = f.out_neighbors(a).first(); b >= 0; b = f.out_neighbors(a).next(b)) add_pairs(u, v, a, b);
    }
    if (kind == ProductKind::lexicographic) {
        for (int u = 0; u < d.vertex_count(); ++u)
            for (int v = d.out_neighbors(u).first(); v >= 0; v = d.out_neighbors(u).next(v))
                for (int a = 0; a < f.vertex_count(); ++a)
                    for (int b = 0; b < f.vertex_count(); ++b) add_pairs(u, v, a, b);
        for (int x = 0; x < d.vertex_count(); ++x)
            for (int u = 0; u < f.vertex_count(); ++u)
                for (int v = f.out_neighbors(u).first(); v >= 0; v = f.out_neighbors(u).next(v)) add_pairs(x, x, u, v);
    }
    return Digraph::from_adjacency(std::move(rows));
}

Digraph product_fold(ProductKind kind, const std::vector<Digraph>& factors) {
    if (factors.empty()) throw std::invalid_argument("product_fold: no factors");
    Digraph acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = product(kind, acc, factors[i]);
    return acc;
}

VertexSet layer(const PairIndex& ix, Side fixed_side, int fixed) {
    VertexSet s(ix.size());
    if (fixed_side == Side::right) {
        if (fixed < 0 || fixed >= ix.right_n) throw std::out_of_range("layer: coordinate out of range");
        for (int d = 0; d < ix.left_n; ++d) s.add(ix.flat(d, fixed));
    } else {
        if (fixed < 0 || fixed >= ix.left_n) throw std::out_of_range("layer: coordinate out of range");
        for (int f = 0; f < ix.right_n; ++f) s.add(ix.flat(fixed, f));
    }
    return s;
}

VertexSet project(const PairIndex& ix, const VertexSet& b, Side onto) {
    if (b.universe() != ix.size()) throw std::invalid_argument("project: universe mismatch");
    VertexSet s(onto == Side::left ? ix.left_n : ix.right_n);
    for (int x = b.first(); x >= 0; x = b.next(x)) s.add(onto == Side::left ? ix.left(x) : ix.right(x));
    return s;
}

}  // namespace ecdlab
