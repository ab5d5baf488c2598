#include "ecdlab/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace ecdlab {

SearchLimits SearchLimits::from_env() {
    SearchLimits limits;
    const char* raw = std::getenv("ECDLAB_BOUNDS");
    if (raw == nullptr || *raw == '\0') return limits;
    std::string text(raw);
    std::istringstream stream(text);
    std::string entry;
    while (std::getline(stream, entry, ',')) {
        if (entry.empty()) continue;
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("ECDLAB_BOUNDS: expected key=value, got '" + entry + "'");
        std::string key = entry.substr(0, eq);
        std::string value = entry.substr(eq + 1);
        int parsed = 0;
        try {
            size_t used = 0;
            parsed = std::stoi(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("ECDLAB_BOUNDS: bad value in '" + entry + "'");
        }
        if (parsed <= 0)
            throw std::invalid_argument("ECDLAB_BOUNDS: bounds must be positive, got '" + entry + "'");
        if (key == "enum") {
            limits.enum_bound = parsed;
        } else if (key == "search") {
            limits.search_bound = parsed;
        } else if (key == "family") {
            limits.family_bound = parsed;
        } else {
            throw std::invalid_argument("ECDLAB_BOUNDS: unknown key '" + key + "'");
        }
    }
    return limits;
}

std::string EcdCertificate::to_json() const {
    std::ostringstream out;
    out << "{\"s\": [";
    bool first = true;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (!first) out << ", ";
        out << v;
        first = false;
    }
    out << "], \"dominator\": [";
    for (size_t v = 0; v < dominator.size(); ++v) {
        if (v > 0) out << ", ";
        out << dominator[v];
    }
    out << "]}";
    return out.str();
}

bool covers(const Digraph& d, const VertexSet& q, const VertexSet& r) {
    VertexSet reached(d.vertex_count());
    for (int v = q.first(); v >= 0; v = q.next(v)) reached |= d.closed_out_neighborhood(v);
    return r.is_subset_of(reached);
}

bool is_dominating_set(const Digraph& d, const VertexSet& s) {
    return covers(d, s, VertexSet::full(d.vertex_count()));
}

std::optional<EcdCertificate> certify_ecd_set(const Digraph& d, const VertexSet& s) {
    const int n = d.vertex_count();
    std::vector<int> dominator(static_cast<size_t>(n), -1);
    VertexSet covered(n);
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        const VertexSet& ball = d.closed_out_neighborhood(v);
        if (ball.intersects(covered)) return std::nullopt; // overlap: not a partition
        covered |= ball;
        for (int u = ball.first(); u >= 0; u = ball.next(u)) dominator[static_cast<size_t>(u)] = v;
    }
    if (covered != VertexSet::full(n)) return std::nullopt; // some vertex uncovered
    return EcdCertificate{s, std::move(dominator)};
}

bool is_ecd_set(const Digraph& d, const VertexSet& s) {
    return certify_ecd_set(d, s).has_value();
}

namespace {

/// Exact-cover backtracking core.  Selects the uncovered vertex with the
/// fewest viable dominator candidates (a candidate w for u has u in N+[w]
/// and N+[w] disjoint from the covered region), branching in ascending
/// label order.  Invokes emit() for each complete cover; emit returns true
/// to keep searching, false to stop.
class ExactCover {
  public:
    ExactCover(const Digraph& d, std::function<bool(const VertexSet&)> emit)
        : d_(d), n_(d.vertex_count()), covered_(d.vertex_count()), chosen_(d.vertex_count()),
          emit_(std::move(emit)) {}

    bool run() { return descend(); }

  private:
    // Returns false when the search should stop entirely.
    bool descend() {
        if (covered_ == VertexSet::full(n_)) return emit_(chosen_);

        // Most-constrained uncovered vertex, lowest label on ties.
        int pivot = -1;
        std::vector<int> pivot_candidates;
        VertexSet uncovered = covered_.complement();
        for (int u = uncovered.first(); u >= 0; u = uncovered.next(u)) {
            std::vector<int> candidates = viable_dominators(u);
            if (candidates.empty()) return true; // dead branch, keep searching elsewhere
            if (pivot < 0 || candidates.size() < pivot_candidates.size()) {
                pivot = u;
                pivot_candidates = std::move(candidates);
                if (pivot_candidates.size() == 1) break;
            }
        }

        for (int w : pivot_candidates) {
            const VertexSet& ball = d_.closed_out_neighborhood(w);
            covered_ |= ball;
            chosen_.add(w);
            bool keep_going = descend();
            chosen_.remove(w);
            covered_ -= ball;
            if (!keep_going) return false;
        }
        return true;
    }

    std::vector<int> viable_dominators(int u) const {
        std::vector<int> result;
        const VertexSet& sources = d_.closed_in_neighborhood(u);
        for (int w = sources.first(); w >= 0; w = sources.next(w)) {
            if (!d_.closed_out_neighborhood(w).intersects(covered_)) result.push_back(w);
        }
        return result;
    }

    const Digraph& d_;
    int n_;
    VertexSet covered_;
    VertexSet chosen_;
    std::function<bool(const VertexSet&)> emit_;
};

} // namespace

std::optional<EcdCertificate> find_ecd_set(const Digraph& d, const SearchLimits& limits) {
    if (d.vertex_count() > limits.search_bound)
        throw bound_error("find_ecd_set: " + std::to_string(d.vertex_count()) +
                          " vertices exceeds search bound " + std::to_string(limits.search_bound));
    std::optional<VertexSet> found;
    ExactCover search(d, [&](const VertexSet& s) {
        found = s;
        return false; // first solution only
    });
    search.run();
    if (!found) return std::nullopt;
    return certify_ecd_set(d, *found);
}

std::vector<VertexSet> enumerate_ecd_sets(const Digraph& d, const SearchLimits& limits) {
    if (d.vertex_count() > limits.enum_bound)
        throw bound_error("enumerate_ecd_sets: " + std::to_string(d.vertex_count()) +
                          " vertices exceeds enumeration bound " + std::to_string(limits.enum_bound));
    std::vector<VertexSet> all;
    ExactCover search(d, [&](const VertexSet& s) {
        all.push_back(s);
        return true;
    });
    search.run();
    std::sort(all.begin(), all.end());
    return all;
}

namespace {

/// True iff some dominating set of size exactly `size` extends `chosen`,
/// branching on the closed in-neighborhood of the lowest uncovered vertex
/// (every dominating set must cover it from there).
bool dominating_set_of_size(const Digraph& d, int size, VertexSet& chosen, VertexSet& covered) {
    if (covered == VertexSet::full(d.vertex_count())) return true;
    if (size == 0) return false;
    int u = covered.complement().first();
    const VertexSet& sources = d.closed_in_neighborhood(u);
    for (int w = sources.first(); w >= 0; w = sources.next(w)) {
        if (chosen.contains(w)) continue;
        VertexSet saved = covered;
        covered |= d.closed_out_neighborhood(w);
        chosen.add(w);
        bool ok = dominating_set_of_size(d, size - 1, chosen, covered);
        chosen.remove(w);
        covered = saved;
        if (ok) return true;
    }
    return false;
}

int gamma_of(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) return 0;
    for (int size = 1; size <= n; ++size) {
        VertexSet chosen(n);
        VertexSet covered(n);
        if (dominating_set_of_size(d, size, chosen, covered)) return size;
    }
    return n; // unreachable: V always dominates
}

} // namespace

DominationNumbers domination_number(const Digraph& d, const SearchLimits& limits) {
    if (d.vertex_count() > limits.enum_bound)
        throw bound_error("domination_number: " + std::to_string(d.vertex_count()) +
                          " vertices exceeds enumeration bound " + std::to_string(limits.enum_bound));
    return DominationNumbers{gamma_of(d), gamma_of(d.reverse())};
}

std::optional<EcdCertificate> find_eca_set(const Digraph& d, const SearchLimits& limits) {
    return find_ecd_set(d.reverse(), limits);
}

} // namespace ecdlab
