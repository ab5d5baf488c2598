#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecdlab/digraph.hpp"
#include "ecdlab/families.hpp"
#include "ecdlab/generators.hpp"
#include "ecdlab/products.hpp"
#include "ecdlab/solver.hpp"
#include "ecdlab/vertex_set.hpp"

namespace ecdlab {

enum class DecisionMethod { theorem, brute_force };

const char* decision_method_name(DecisionMethod m);

/// One source reachable from a vertex by a backward walk, with the length of
/// the directed source-to-vertex path.
struct SourceDistance {
    int source;
    int distance;

    bool operator==(const SourceDistance& o) const {
        return source == o.source && distance == o.distance;
    }
};

/// Structure of the one sink-bearing cycle factor in a direct product of
/// cycles: the building blocks of its ECD set.
struct DirectCycleWitness {
    VertexSet a;  ///< non-source, non-sink vertices at even distance from their source
    VertexSet r;  ///< sources
    VertexSet qp; ///< sinks all of whose neighboring-source distances are even
    std::vector<std::pair<int, std::vector<SourceDistance>>> sink_distances;
};

/// Outcome of a product-ECD decision.  Positive theorem decisions always
/// carry a certificate built constructively and re-verified against the
/// product; negative ones carry a refutation tag naming the failed clause.
/// The witnesses vector holds one family witness per component (or clause)
/// that the positive decision rests on; direct-cycle decisions carry their
/// sink-factor witness separately.
struct DecisionReport {
    bool decision = false;
    DecisionMethod method = DecisionMethod::theorem;
    std::vector<FamilyWitness> witnesses;
    std::optional<DirectCycleWitness> direct_witness;
    std::optional<EcdCertificate> certificate;
    std::string refutation; // empty on positive decisions

    /// JSON object with the decision, method, any witnesses and certificate
    /// (flat product labels), and the refutation tag when negative.
    std::string to_json() const;
};

/// For each directed path that runs from a source to v with no intermediate
/// source, the pair (source, path length).  Sources get {(v, 0)}; a sink
/// inside a cycle gets one entry per side (the same source may appear
/// twice); vertices of a sink-free cycle get an empty list.  The input must
/// be a digraph realizable as an orientation of a cycle or path.
std::vector<SourceDistance> neighboring_source_distances(const Digraph& c, int v);

/// Is D cartesian-product C_k(sink-free) an ECD digraph?  k = 1 reduces to
/// D itself being an ECD digraph; for k >= 2 every weak component of D must
/// lie in family D1 (k even), D2 (k divisible by 3) or D3 (k divisible
/// by 6).  Loops in D are ignored: they surface only as product loops, which
/// never change a closed out-neighborhood, so the loopless core is what the
/// families must recognize.  Positive reports carry per-component witnesses
/// and a verified certificate on the product.
DecisionReport decide_cartesian_cycle(const Digraph& d, const CyclePattern& pattern,
                                      const SearchLimits& limits = SearchLimits::from_env());

/// ECD set of component-times-cycle from a component's family witness, in
/// the product's flat labels (component vertex c and position j map to
/// c*k + j).  The witness family must match k's divisibility.
VertexSet build_ecd_cartesian_cycle(const Digraph& component, const FamilyWitness& witness, int k);

/// Is F cartesian-product K_{1,t} an ECD digraph?  With the center as the
/// source this holds exactly when F is in family D0, independent of t.
/// Other orientations fall back to the exact-cover search on the product
/// (method = brute_force).
DecisionReport decide_cartesian_star(const Digraph& f, const StarOrientation& o,
                                     const SearchLimits& limits = SearchLimits::from_env());

/// ECD set of F cartesian-product K_{1,t} (center source) from a D0
/// witness: witness.s in the center layer plus witness.sp in every leaf
/// layer.  Flat labels: (f, star vertex s) maps to f*(t+1) + s.
VertexSet build_ecd_cartesian_star(const Digraph& f, const D0Witness& witness,
                                   const StarOrientation& o);

/// ECD set for F cartesian-product K_{1,t} under a mixed orientation (t1
/// source leaves, t2 sink leaves), assembled from a partition of V(F) into
/// t1+3 blocks per the unproven structural description: blocks[0..t1-1] are
/// ECD sets of F placed on the source leaves; blocks[t1] covers the center
/// layer; blocks[t1+1] covers the sink leaves; blocks[t1+2] is the rest.
/// Preconditions are checked (throwing std::invalid_argument), and because
/// the description is unproven the result records whether the assembled set
/// actually passed is_ecd_set on the product.
struct MixedStarBuild {
    VertexSet s;
    bool verified;
};
MixedStarBuild build_mixed_star_ecd(const Digraph& f, const std::vector<VertexSet>& blocks,
                                    int t1, int t2);

/// Component structure of a direct product of sink-free cycles: every
/// component is a sink-free cycle of length lcm(k_1..k_t), so there are
/// exactly (k_1*...*k_t)/lcm of them (which equals gcd(k_1,k_2) for two
/// factors).  A single factor is one component of its own length.
struct DirectCycleStructure {
    int components;
    int component_length;
};
DirectCycleStructure direct_cycle_structure(const std::vector<int>& ks);

/// Is the direct product of the given oriented cycles an ECD digraph?
/// At most one factor may carry sinks (otherwise false); with none, the
/// product is ECD iff some length is even or every factor is the one-vertex
/// loop; with one, every sink needs an even-length path from some
/// neighboring source.  Certificates are verified on the product in the
/// original factor order.
DecisionReport decide_direct_cycles(const std::vector<CyclePattern>& patterns,
                                    const SearchLimits& limits = SearchLimits::from_env());

/// The witness of the positive sink-bearing decision, when one exists.
std::optional<DirectCycleWitness> direct_cycle_witness(const std::vector<CyclePattern>& patterns);

/// ECD set of the direct product of cycles, sink-bearing factor last (or
/// absent).  Sink-free: alternate vertices along every component cycle.
/// Sink-bearing: every vertex of the sink-free prefix times the witness's
/// A, R and Q' blocks.
VertexSet build_ecd_direct_cycles(const std::vector<CyclePattern>& patterns,
                                  const DirectCycleWitness& witness);

/// Is the direct product of the given oriented paths an ECD digraph?
/// A single-vertex factor erases every arc, making the product trivially
/// ECD; a lone path is ECD iff each of its two-sided sinks has an
/// even-length path from some neighboring source; otherwise the product is
/// ECD iff no factor contains a two-sided (internal) sink.
DecisionReport decide_direct_paths(const std::vector<PathPattern>& patterns);

/// Is the strong product an ECD digraph?  Holds exactly when both factors
/// are; the certificate is the cross product of the factor ECD sets.
DecisionReport decide_strong(const Digraph& d, const Digraph& f,
                             const SearchLimits& limits = SearchLimits::from_env());

/// Is the lexicographic product an ECD digraph?  Holds when D is arcless
/// and F is ECD (one copy of F's set per D-vertex), or when D is ECD and
/// some vertex of F dominates all of V(F) (S_D paired with the lowest such
/// vertex).  That factorwise test assumes D is loopless — a loop expands
/// into two-way arcs across its fiber — so a left factor with a loop is
/// decided by exact-cover search on the product instead (method reports
/// brute-force).
DecisionReport decide_lex(const Digraph& d, const Digraph& f,
                          const SearchLimits& limits = SearchLimits::from_env());

} // namespace ecdlab
