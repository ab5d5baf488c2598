#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecdlab/digraph.hpp"
#include "ecdlab/generators.hpp"
#include "ecdlab/solver.hpp"

namespace ecdlab {

// Cross-validation suites.  Each one pits a theorem-backed decider against the
// exact-cover oracle over a deterministic corpus and re-verifies every
// certificate the decider emits.
enum class Suite {
    strong,           // decide_strong over all small factor pairs
    lex,              // decide_lex over all small factor pairs
    cartesian_cycle,  // decide_cartesian_cycle: small factors x cycle lengths,
                      // constructed family members, multi-component mixes
    cartesian_star,   // decide_cartesian_star (center-source orientation)
    direct_cycles,    // decide_direct_cycles over canonical orientation words
    direct_paths,     // decide_direct_paths over all orientation words
    orientation,      // orient_from_independent_set on random graphs
    mixed_star,       // two-leaf-class star sweep; disagreements are findings
    structure,        // component count/length of direct products of cycles
};

const char* suite_name(Suite suite);
Suite parse_suite(const std::string& text);  // throws std::invalid_argument

// What to validate and how hard to push.  A fixed seed makes the corpus,
// and therefore the untimed report, reproducible byte for byte.
struct CorpusSpec {
    Suite suite = Suite::strong;
    int max_n = 0;               // vertex bound for exhaustive factor sweeps;
                                 // 0 = suite default
    int k_min = 0;               // smallest cycle length; 0 = suite default
    int k_max = 0;               // largest cycle length; 0 = suite default
    std::vector<int> ts = {1, 2, 3};  // star leaf counts (cartesian_star)
    int samples = 0;             // random/constructed instances; 0 = default
    std::uint64_t seed = 2024;   // corpus seed
    int workers = 1;             // worker threads
    bool timing = false;         // fill the wall-time column
    SearchLimits limits = SearchLimits::from_env();
};

// One corpus instance after validation.  String fields mirror the TSV cells;
// "-" marks a value that does not apply or was out of bounds.
struct ValidationRow {
    std::string key;        // unique instance key; rows are sorted by it
    std::string theorem;    // "true", "false", or "error"
    std::string oracle;     // "true", "false", "error", or "-"
    std::string s_size;     // |S| of the emitted certificate, or "-"
    std::string gamma;      // domination number of the instance, or "-"
    std::string wall_ms;    // wall time in ms, or "-" when timing is off
    bool mismatch = false;      // theorem and oracle disagree (hard failure)
    bool finding = false;       // disagreement in an unproven direction
    bool cert_failure = false;  // emitted certificate failed re-verification
    bool bound_exceeded = false;
    std::string note;       // error text or finding description
};

struct ValidationReport {
    std::vector<ValidationRow> rows;

    int instances() const { return static_cast<int>(rows.size()); }
    int mismatches() const;
    int findings() const;
    int cert_failures() const;
    int bound_exceeded() const;

    // Tab-separated table: instance key, theorem decision, oracle decision,
    // |S|, domination number, wall time.  Header row first.
    std::string to_tsv() const;
    std::string summary() const;  // one human-readable line of counts
};

// Runs the suite described by `corpus`.  Instances are fanned out to
// `corpus.workers` threads and the rows re-sorted by key, so the report is
// deterministic for a fixed spec.  Per-instance resource exhaustion is
// recorded in the row, not thrown.
ValidationReport cross_validate(const CorpusSpec& corpus);

// --- corpus building blocks (also used by the test suites) ---

// Every loopless digraph on n labelled vertices, ordered by adjacency mask.
std::vector<Digraph> all_loopless_digraphs(int n);

// Short unique code for a digraph: vertex count plus adjacency mask in hex.
std::string digraph_code(const Digraph& d);

// All cycle orientation words of length k that are lexicographically minimal
// among their rotations, excluding the degenerate length-2 alternation.
std::vector<CyclePattern> canonical_cycle_words(int k);

// All path orientation words for a path on n vertices (n >= 1).
std::vector<PathPattern> all_path_words(int n);

// Disjoint union; vertices of `b` are shifted past those of `a`.
Digraph disjoint_union(const Digraph& a, const Digraph& b);

// Seeded loopless random digraph on n vertices with arc probability p.
Digraph random_digraph(std::uint64_t seed, int n, double p);

// Seeded random symmetric loopless digraph (a graph), edge probability p.
Digraph random_graph(std::uint64_t seed, int n, double p);

// Greedy maximal independent set of a symmetric digraph, taken in ascending
// vertex order.  Maximal independent sets are independent dominating sets.
VertexSet greedy_independent_dominating_set(const Digraph& g);

}  // namespace ecdlab
