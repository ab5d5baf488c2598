#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ecdlab/digraph.hpp"
#include "ecdlab/solver.hpp"
#include "ecdlab/vertex_set.hpp"

namespace ecdlab {

/// The structural digraph families used by the Cartesian-product deciders.
enum class Family { d1, d2, d3, d0 };

const char* family_name(Family family);
Family parse_family(const std::string& name); // "d1" | "d2" | "d3" | "d0" (case-insensitive)

/// Membership witness for family D1: {W, Z, Vp} partitions V, W is an ECD
/// set of induced(W ∪ Vp), Z is an ECD set of induced(Z ∪ Vp), and no arc
/// joins W and Z in either direction.  The single loopless vertex is the
/// trivial member (W = {v}, Z and Vp empty, trivial flag set).
struct D1Witness {
    VertexSet w;
    VertexSet z;
    VertexSet vp;
    bool trivial = false;
};

/// Membership witness for family D2: {U1, U2, U3} partitions V, every arc
/// runs U1→U2, U2→U3 or U3→U1, and each vertex has exactly one in-neighbor
/// (in the preceding block).  Equivalently U1 is an ECD set of
/// induced(U1 ∪ U2), U2 of induced(U2 ∪ U3), U3 of induced(U3 ∪ U1), with
/// no other arcs.
struct D2Witness {
    VertexSet u1;
    VertexSet u2;
    VertexSet u3;
};

/// Membership witness for family D3: V splits into part1 inducing a D1
/// member and part2 inducing a D2 member; at least one arc crosses from
/// part1 to part2, every such arc starts in the D1 witness's Vp block, and
/// no arc crosses backwards.  Nested witnesses use the original labels.
struct D3Witness {
    VertexSet part1;
    VertexSet part2;
    D1Witness d1;
    D2Witness d2;
};

/// Membership witness for family D0 (star-factor characterization): S is an
/// ECD set of F, Sp is an ECD set of induced(V − S), and no arc starts in
/// Sp and ends in S.
struct D0Witness {
    VertexSet s;
    VertexSet sp;
};

struct FamilyWitness {
    Family family;
    std::variant<D1Witness, D2Witness, D3Witness, D0Witness> data;

    const D1Witness& as_d1() const { return std::get<D1Witness>(data); }
    const D2Witness& as_d2() const { return std::get<D2Witness>(data); }
    const D3Witness& as_d3() const { return std::get<D3Witness>(data); }
    const D0Witness& as_d0() const { return std::get<D0Witness>(data); }

    /// JSON text: family tag plus the witness's block arrays.
    std::string to_json() const;
};

/// First witness of membership in the given family, in a deterministic
/// canonical enumeration order (D1: W/Z deduplicated by smallest member;
/// D2: vertex 0 placed in U1; D3: part1 subsets in increasing bitmask
/// order; D0: certificate enumeration order), or none if D is not a member.
/// D1/D2/D3 throw bound_error above limits.family_bound; D0 inherits the
/// solver's enumeration bound.
std::optional<FamilyWitness> recognize(Family family, const Digraph& d,
                                       const SearchLimits& limits = SearchLimits::from_env());

/// D1 recognition with the extra requirement that a given vertex set lies
/// inside the witness's Vp block — this is how the D3 recognizer pins the
/// cross-arc sources.  Exposed for the product deciders.
std::optional<D1Witness> recognize_d1_requiring(
    const Digraph& d, const VertexSet& require_in_vp,
    const SearchLimits& limits = SearchLimits::from_env());

/// A constructed family member together with the witness the construction
/// guarantees.
struct ConstructedMember {
    Digraph graph;
    FamilyWitness witness;
};

/// Build a D1 member from a seed digraph Dp and two partitions of its
/// vertex set.  The result keeps the seed's labels 0..n-1 and appends
/// w_i = n+i for the blocks of pi1 (i = 0..p-1) and z_j = n+p+j for the
/// blocks of pi2; arcs are A(Dp) plus w_i → each vertex of its block,
/// z_j → each vertex of its block, plus the optional extra arcs b, which
/// must start in V(Dp) and end in the new W ∪ Z labels.
ConstructedMember construct_d1(const Digraph& dp, const std::vector<std::vector<int>>& pi1,
                               const std::vector<std::vector<int>>& pi2,
                               const std::vector<Arc>& b = {});

/// Build a D2 member from block sizes and dominator maps.  Labels: U1 is
/// 0..n1-1, U2 is n1..n1+n2-1, U3 follows.  dominator_in_u1[j] is the local
/// U1 index dominating the j-th U2 vertex, and cyclically for the other two
/// maps; the only arcs are these dominator arcs.
ConstructedMember construct_d2(int n1, int n2, int n3, const std::vector<int>& dominator_in_u1,
                               const std::vector<int>& dominator_in_u2,
                               const std::vector<int>& dominator_in_u3);

/// Two-stage D0 construction.  Stage 1 partitions V(D) into the blocks of
/// w_partition and appends w_i = n+i with arcs w_i → its block, plus the
/// optional arcs b (from V(D) into the new w labels).  Stage 2 partitions
/// the stage-1 vertex set into the blocks of z_partition and appends
/// z_j = n+p+j with arcs z_j → its block, plus b_prime (from V(D) into the
/// new z labels).  An arcless D short-circuits to D itself (witness S = V,
/// Sp = ∅); otherwise the witness is S = {z_j}, Sp = {w_i}.
ConstructedMember construct_dpr(const Digraph& d, const std::vector<std::vector<int>>& w_partition,
                                const std::vector<Arc>& b,
                                const std::vector<std::vector<int>>& z_partition,
                                const std::vector<Arc>& b_prime);

} // namespace ecdlab
