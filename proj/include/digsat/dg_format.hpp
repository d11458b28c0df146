#pragma once

#include <stdexcept>
#include <string>

#include "digsat/digraph.hpp"

namespace digsat {

// Parse failure with the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
};

// .dg text format:
//   optional '#' comment lines anywhere
//   header "n <decimal>"
//   one "u v" arc per line, single space, 0 <= u,v < n, u != v
// The writer emits arcs sorted ascending by (u,v) with LF endings; the
// reader accepts arcs in any order but rejects duplicates and loops.
Digraph parse_dg(const std::string& text);
std::string serialize_dg(const Digraph& d);

Digraph read_dg_file(const std::string& path);
void write_dg_file(const std::string& path, const Digraph& d);

// Graphviz export: one digraph block, every vertex as a node statement,
// arcs as "u -> v;".
std::string to_dot(const Digraph& d);

}  // namespace digsat
