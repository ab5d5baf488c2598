#include "ecdlab/edgelist.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace ecdlab {

namespace {

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

bool parse_two_ints(const std::string& line, long& a, long& b) {
    std::istringstream ss(line);
    std::string tail;
    if (!(ss >> a >> b)) return false;
    if (ss >> tail) return false;
    return true;
}

}  // namespace

Digraph parse_edgelist(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    int header_line = 0;
    std::vector<Arc> arcs;
    std::vector<VertexSet> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        long a, b;
        if (!parse_two_ints(line, a, b)) throw parse_error(lineno, "expected two integers, got '" + line + "'");
        if (n < 0) {
            if (a < 0 || b < 0) throw parse_error(lineno, "malformed header: counts must be nonnegative");
            n = a;
            m = b;
            header_line = lineno;
            rows.assign(std::size_t(n), VertexSet(int(n)));
            continue;
        }
        if (long(arcs.size()) >= m) throw parse_error(lineno, "more than the declared " + std::to_string(m) + " arcs");
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw parse_error(lineno, "arc endpoint out of range 0.." + std::to_string(n - 1));
        if (rows[std::size_t(a)].contains(int(b)))
            throw parse_error(lineno, "duplicate arc " + std::to_string(a) + " " + std::to_string(b));
        rows[std::size_t(a)].add(int(b));
        arcs.emplace_back(int(a), int(b));
    }
    if (n < 0) throw parse_error(lineno ? lineno : 1, "missing header line");
    if (long(arcs.size()) != m)
        throw parse_error(header_line, "header declares " + std::to_string(m) + " arcs, found " + std::to_string(arcs.size()));
    return Digraph(int(n), arcs);
}

Digraph parse_edgelist(const std::string& text) {
    std::istringstream ss(text);
    return parse_edgelist(ss);
}

std::string serialize_edgelist(const Digraph& d) {
    std::string out = std::to_string(d.vertex_count()) + " " + std::to_string(d.arc_count()) + "\n";
    for (auto [u, v] : d.arcs()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace ecdlab
