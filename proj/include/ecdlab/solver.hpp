#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecdlab/digraph.hpp"
#include "ecdlab/vertex_set.hpp"

namespace ecdlab {

/// Size caps for the exponential searches, overridable per call site.
///
/// Resolution order everywhere: explicit function argument beats the
/// ECDLAB_BOUNDS environment variable, which beats these defaults.
struct SearchLimits {
    int enum_bound = 24;    ///< max vertices for full enumeration / gamma search
    int search_bound = 64;  ///< max vertices for single-solution search
    int family_bound = 12;  ///< max vertices for family partition search

    /// Defaults merged with the ECDLAB_BOUNDS environment variable, e.g.
    /// ECDLAB_BOUNDS="enum=24,search=64,family=12" (any subset of keys).
    /// Malformed entries raise std::invalid_argument.
    static SearchLimits from_env();
};

/// Thrown when an instance exceeds the applicable search bound.
class bound_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Witness that S is an efficient closed domination (ECD) set: the closed
/// out-neighborhoods of the members of S partition the vertex set, so every
/// vertex has exactly one dominator (members dominate themselves).
struct EcdCertificate {
    VertexSet s;                ///< the ECD set
    std::vector<int> dominator; ///< dominator[v] = the unique s in S with v in N+[s]

    /// JSON text with exactly the keys "s" and "dominator".
    std::string to_json() const;
};

struct DominationNumbers {
    int gamma;   ///< minimum size of a dominating set (closed out-neighborhoods)
    int gamma_a; ///< absorbing variant: domination number of the reverse digraph
};

/// True iff every vertex of R lies in the closed out-neighborhood of some
/// vertex of Q (Q covers R).
bool covers(const Digraph& d, const VertexSet& q, const VertexSet& r);

/// True iff S dominates all of V(D): covers(d, s, V).
bool is_dominating_set(const Digraph& d, const VertexSet& s);

/// True iff the closed out-neighborhoods of S partition V(D).
bool is_ecd_set(const Digraph& d, const VertexSet& s);

/// Certificate form of is_ecd_set: the dominator map on success.
std::optional<EcdCertificate> certify_ecd_set(const Digraph& d, const VertexSet& s);

/// First ECD set in deterministic search order, or none if the digraph has
/// no ECD set.  Exact-cover backtracking: repeatedly pick the uncovered
/// vertex with the fewest viable dominator candidates (lowest label on ties)
/// and branch over its candidates in ascending label order.
/// Throws bound_error when vertex_count exceeds limits.search_bound.
std::optional<EcdCertificate> find_ecd_set(const Digraph& d,
                                           const SearchLimits& limits = SearchLimits::from_env());

/// All ECD sets, sorted lexicographically as sorted member lists.
/// Throws bound_error when vertex_count exceeds limits.enum_bound.
std::vector<VertexSet> enumerate_ecd_sets(const Digraph& d,
                                          const SearchLimits& limits = SearchLimits::from_env());

/// Domination number and its absorbing counterpart, by increasing-size
/// exhaustive search.  Throws bound_error above limits.enum_bound.
DominationNumbers domination_number(const Digraph& d,
                                    const SearchLimits& limits = SearchLimits::from_env());

/// Efficient closed absorption: ECD set of the reverse digraph, reported in
/// the original labelling (the in-neighborhood analogue).
std::optional<EcdCertificate> find_eca_set(const Digraph& d,
                                           const SearchLimits& limits = SearchLimits::from_env());

} // namespace ecdlab
