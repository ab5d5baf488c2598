#include "ecdlab/digraph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ecdlab {

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : n_(n) {
    if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
    out_.assign(n, VertexSet(n));
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("Digraph: arc (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") outside vertex range 0.." + std::to_string(n - 1));
        if (out_[u].contains(v))
            throw std::invalid_argument("Digraph: duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
        out_[u].add(v);
    }
    finish();
}

Digraph Digraph::from_adjacency(std::vector<VertexSet> rows) {
    Digraph d;
    d.n_ = int(rows.size());
    for (auto& r : rows)
        if (r.universe() != d.n_) throw std::invalid_argument("Digraph: adjacency row universe mismatch");
    d.out_ = std::move(rows);
    d.finish();
    return d;
}

void Digraph::finish() {
    in_.assign(n_, VertexSet(n_));
    closed_out_.assign(n_, VertexSet(n_));
    m_ = 0;
    for (int u = 0; u < n_; ++u) {
        m_ += out_[u].count();
        closed_out_[u] = out_[u];
        closed_out_[u].add(u);
        for (int v = out_[u].first(); v >= 0; v = out_[u].next(v)) in_[v].add(u);
    }
}

VertexSet Digraph::closed_in_neighborhood(int v) const {
    VertexSet s = in_.at(v);
    s.add(v);
    return s;
}

VertexClass Digraph::classify(int v) const {
    VertexClass c;
    int dout = out_degree(v), din = in_degree(v);
    c.sink = dout == 0;
    c.source = din == 0;
    c.isolated = dout + din == 0;
    c.leaf_sink = dout + din == 1 && dout == 0;
    c.leaf_source = dout + din == 1 && din == 0;
    c.out_universal = dout == n_ - 1;
    c.in_universal = din == n_ - 1;
    return c;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> r;
    r.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = out_[u].first(); v >= 0; v = out_[u].next(v)) r.emplace_back(u, v);
    return r;
}

Digraph Digraph::reverse() const {
    Digraph d;
    d.n_ = n_;
    d.out_ = in_;
    d.finish();
    return d;
}

Digraph::Induced Digraph::induced(const VertexSet& keep) const {
    if (keep.universe() != n_) throw std::invalid_argument("Digraph::induced: universe mismatch");
    Induced res;
    res.vertices = keep.to_vector();
    int m = int(res.vertices.size());
    std::vector<int> to_new(n_, -1);
    for (int i = 0; i < m; ++i) to_new[res.vertices[i]] = i;
    std::vector<VertexSet> rows(m, VertexSet(m));
    for (int i = 0; i < m; ++i) {
        const VertexSet& row = out_[res.vertices[i]];
        for (int v = row.first(); v >= 0; v = row.next(v))
            if (to_new[v] >= 0) rows[i].add(to_new[v]);
    }
    res.graph = from_adjacency(std::move(rows));
    return res;
}

std::vector<VertexSet> Digraph::components() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int u = 0; u < n_; ++u)
        for (int v = out_[u].first(); v >= 0; v = out_[u].next(v)) {
            int a = find(u), b = find(v);
            if (a != b) parent[a] = b;
        }
    std::vector<int> root_slot(n_, -1);
    std::vector<VertexSet> comps;
    for (int v = 0; v < n_; ++v) {
        int r = find(v);
        if (root_slot[r] < 0) {
            root_slot[r] = int(comps.size());
            comps.emplace_back(n_);
        }
        comps[root_slot[r]].add(v);
    }
    return comps;  // discovery order is ascending by smallest member
}

}  // namespace ecdlab
