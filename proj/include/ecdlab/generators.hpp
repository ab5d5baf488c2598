#pragma once

#include <string>
#include <vector>

#include "ecdlab/digraph.hpp"

namespace ecdlab {

// Orientation of one cycle edge. Edge i joins positions i and (i+1) mod k;
// cw directs it i -> i+1, ccw the other way.
enum class Turn : unsigned char { cw, ccw };

struct CyclePattern {
    std::vector<Turn> word;

    int k() const { return int(word.size()); }
    int source_count() const;  // equals the sink count
    // true when the realized digraph is not a directed cycle (k=2 with opposite
    // orientations collapses both edges onto one arc)
    bool degenerate() const;
    std::string to_string() const;
};

// Orientation of one path edge. Edge i joins positions i and i+1;
// fwd directs it i -> i+1, bwd the other way.
enum class Step : unsigned char { fwd, bwd };

struct PathPattern {
    std::vector<Step> word;  // k-1 symbols for a path on k vertices

    int k() const { return int(word.size()) + 1; }
    // a sink with arcs from both sides, i.e. an adjacent fwd,bwd pair
    bool has_internal_sink() const;
    std::string to_string() const;
};

enum class StarMode : unsigned char { center_source, center_sink, mixed };

// Star K_{1,t} with the center labeled 0 and leaves 1..t. In mixed mode the
// first t1 leaves point at the center and the remaining t2 = t - t1 leaves
// are pointed at by it.
struct StarOrientation {
    StarMode mode = StarMode::center_source;
    int t = 1;
    int t1 = 0;

    int t2() const { return mode == StarMode::mixed ? t - t1 : 0; }
};

// word parsers accept concatenated tokens ("cwccwcw", "fwdbwd"); commas and
// spaces between tokens are ignored
CyclePattern parse_cycle_word(const std::string& text);
PathPattern parse_path_word(const std::string& text);
StarMode parse_star_mode(const std::string& text);  // "center-source" | "center-sink" | "mixed"
CyclePattern uniform_cycle(int k);  // all cw, the sink-free cycle

Digraph gen_cycle(const CyclePattern& p);
Digraph gen_path(const PathPattern& p);
Digraph gen_star(const StarOrientation& s);

// Orients a symmetric loopless graph so that the given independent dominating
// set becomes an efficient closed dominating set: scanning members of s in
// ascending order, each neighbor not yet dominated receives the arc from s,
// every other edge at a member points back at it, and edges with both ends
// outside s are directed from the lower label to the higher.
Digraph orient_from_independent_set(const Digraph& sym, const VertexSet& s);

}  // namespace ecdlab
