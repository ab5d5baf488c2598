#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ecdlab/digraph.hpp"

namespace ecdlab {

// input error with the 1-based line it occurred on
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Plain text arc list. First significant line holds "n m", followed by m lines
// "u v". Lines starting with '#' and blank lines are skipped. parse and
// serialize round-trip exactly; serialized arcs appear in canonical order
// (ascending tail, then head).
Digraph parse_edgelist(const std::string& text);
Digraph parse_edgelist(std::istream& in);
std::string serialize_edgelist(const Digraph& d);

}  // namespace ecdlab
