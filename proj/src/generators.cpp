#include "ecdlab/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecdlab {

int CyclePattern::source_count() const {
    int k = int(word.size());
    if (k <= 1) return 0;
    int p = 0;
    for (int i = 0; i < k; ++i) {
        // position i is a source when edge i-1 points away (ccw) and edge i points away (cw)
        Turn before = word[(i + k - 1) % k];
        if (before == Turn::ccw && word[i] == Turn::cw) ++p;
    }
    return p;
}

bool CyclePattern::degenerate() const {
    return word.size() == 2 && word[0] != word[1];
}

std::string CyclePattern::to_string() const {
    std::string s;
    for (Turn t : word) s += t == Turn::cw ? "cw" : "ccw";
    return s;
}

bool PathPattern::has_internal_sink() const {
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] == Step::fwd && word[i + 1] == Step::bwd) return true;
    return false;
}

std::string PathPattern::to_string() const {
    if (word.empty()) return "p1";
    std::string s;
    for (Step t : word) s += t == Step::fwd ? "fwd" : "bwd";
    return s;
}

namespace {

std::string strip_separators(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ',' && c != ' ' && c != '-') s += c;
    return s;
}

}  // namespace

CyclePattern parse_cycle_word(const std::string& text) {
    std::string s = strip_separators(text);
    CyclePattern p;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s.compare(i, 3, "ccw") == 0) {
            p.word.push_back(Turn::ccw);
            i += 3;
        } else if (s.compare(i, 2, "cw") == 0) {
            p.word.push_back(Turn::cw);
            i += 2;
        } else {
            throw std::invalid_argument("cycle word: unexpected token at position " + std::to_string(i) + " in '" + text + "'");
        }
    }
    if (p.word.empty()) throw std::invalid_argument("cycle word: empty");
    return p;
}

PathPattern parse_path_word(const std::string& text) {
    std::string s = strip_separators(text);
    PathPattern p;
    if (s == "p1") return p;  // single vertex, no edges
    std::size_t i = 0;
    while (i < s.size()) {
        if (s.compare(i, 3, "fwd") == 0) {
            p.word.push_back(Step::fwd);
            i += 3;
        } else if (s.compare(i, 3, "bwd") == 0) {
            p.word.push_back(Step::bwd);
            i += 3;
        } else {
            throw std::invalid_argument("path word: unexpected token at position " + std::to_string(i) + " in '" + text + "'");
        }
    }
    return p;
}

StarMode parse_star_mode(const std::string& text) {
    if (text == "center-source") return StarMode::center_source;
    if (text == "center-sink") return StarMode::center_sink;
    if (text == "mixed") return StarMode::mixed;
    throw std::invalid_argument("unknown star mode '" + text + "'");
}

CyclePattern uniform_cycle(int k) {
    if (k < 1) throw std::invalid_argument("cycle length must be positive");
    CyclePattern p;
    p.word.assign(k, Turn::cw);
    return p;
}

Digraph gen_cycle(const CyclePattern& p) {
    int k = p.k();
    if (k < 1) throw std::invalid_argument("cycle length must be positive");
    std::vector<VertexSet> rows(k, VertexSet(k));
    for (int i = 0; i < k; ++i) {
        int a = i, b = (i + 1) % k;
        if (p.word[i] == Turn::cw)
            rows[a].add(b);
        else
            rows[b].add(a);
    }
    return Digraph::from_adjacency(std::move(rows));
}

Digraph gen_path(const PathPattern& p) {
    int k = p.k();
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < k; ++i) {
        if (p.word[i] == Step::fwd)
            arcs.emplace_back(i, i + 1);
        else
            arcs.emplace_back(i + 1, i);
    }
    return Digraph(k, arcs);
}

Digraph gen_star(const StarOrientation& s) {
    if (s.t < 1) throw std::invalid_argument("star needs at least one leaf");
    if (s.mode == StarMode::mixed && (s.t1 < 1 || s.t1 >= s.t))
        throw std::invalid_argument("mixed star needs 1 <= t1 < t");
    std::vector<Arc> arcs;
    for (int i = 1; i <= s.t; ++i) {
        bool toward_center = s.mode == StarMode::center_sink || (s.mode == StarMode::mixed && i <= s.t1);
        if (toward_center)
            arcs.emplace_back(i, 0);
        else
            arcs.emplace_back(0, i);
    }
    return Digraph(s.t + 1, arcs);
}

Digraph orient_from_independent_set(const Digraph& sym, const VertexSet& s) {
    int n = sym.vertex_count();
    if (s.universe() != n) throw std::invalid_argument("orient: universe mismatch");
    for (int u = 0; u < n; ++u) {
        if (sym.has_arc(u, u)) throw std::invalid_argument("orient: input has a loop");
        for (int v = sym.out_neighbors(u).first(); v >= 0; v = sym.out_neighbors(u).next(v))
            if (!sym.has_arc(v, u)) throw std::invalid_argument("orient: input is not symmetric");
    }
    for (int u = s.first(); u >= 0; u = s.next(u))
        if (s.intersects(sym.out_neighbors(u)))
            throw std::invalid_argument("orient: set is not independent");
    VertexSet dominated = s;
    for (int u = s.first(); u >= 0; u = s.next(u)) dominated |= sym.out_neighbors(u);
    if (dominated != VertexSet::full(n)) throw std::invalid_argument("orient: set is not dominating");

    std::vector<VertexSet> rows(n, VertexSet(n));
    VertexSet taken(n);  // vertices already given their one in-neighbor from s
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        const VertexSet& nbr = sym.out_neighbors(u);
        for (int v = nbr.first(); v >= 0; v = nbr.next(v)) {
            if (!taken.contains(v)) {
                rows[u].add(v);
                taken.add(v);
            } else {
                rows[v].add(u);
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        if (s.contains(u)) continue;
        const VertexSet& nbr = sym.out_neighbors(u);
        for (int v = nbr.first(); v >= 0; v = nbr.next(v))
            if (!s.contains(v) && u < v) rows[u].add(v);
    }
    return Digraph::from_adjacency(std::move(rows));
}

}  // namespace ecdlab
