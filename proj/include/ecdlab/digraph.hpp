#pragma once

#include <utility>
#include <vector>

#include "ecdlab/vertex_set.hpp"

namespace ecdlab {

using Arc = std::pair<int, int>;

// classification flags for a single vertex; "ordinary" means none of the flags apply
struct VertexClass {
    bool sink = false;           // out-degree 0
    bool source = false;         // in-degree 0
    bool isolated = false;       // degree 0
    bool leaf_sink = false;      // degree 1, the arc comes in
    bool leaf_source = false;    // degree 1, the arc goes out
    bool out_universal = false;  // out-degree n-1
    bool in_universal = false;   // in-degree n-1

    bool ordinary() const {
        return !(sink || source || isolated || leaf_sink || leaf_source || out_universal || in_universal);
    }
};

// Immutable digraph on dense labels 0..n-1. Loops allowed, parallel arcs not.
// A loop contributes one to the out-degree and one to the in-degree of its vertex.
class Digraph {
public:
    Digraph() = default;

    Digraph(int n, const std::vector<Arc>& arcs);

    // adopts prebuilt out-neighborhood rows (one per vertex, universe n)
    static Digraph from_adjacency(std::vector<VertexSet> rows);

    int vertex_count() const { return n_; }
    int arc_count() const { return m_; }

    bool has_arc(int u, int v) const { return out_[u].contains(v); }

    const VertexSet& out_neighbors(int v) const { return out_.at(v); }
    const VertexSet& in_neighbors(int v) const { return in_.at(v); }
    const VertexSet& closed_out_neighborhood(int v) const { return closed_out_.at(v); }
    VertexSet closed_in_neighborhood(int v) const;

    int out_degree(int v) const { return out_.at(v).count(); }
    int in_degree(int v) const { return in_.at(v).count(); }
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    VertexClass classify(int v) const;

    // arcs in canonical order: ascending by tail, then by head
    std::vector<Arc> arcs() const;

    Digraph reverse() const;

    struct Induced;
    Induced induced(const VertexSet& keep) const;

    // weak components (components of the underlying graph), ordered by smallest member
    std::vector<VertexSet> components() const;

    bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::vector<VertexSet> closed_out_;

    void finish();  // derives in_, closed_out_, m_ from out_
};

struct Digraph::Induced {
    Digraph graph;
    std::vector<int> vertices;  // vertices[new_label] = old_label, ascending
};

}  // namespace ecdlab
