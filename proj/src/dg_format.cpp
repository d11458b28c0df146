#include "digsat/dg_format.hpp"

#include <fstream>
#include <sstream>

namespace digsat {

namespace {

// Strict non-negative decimal; rejects signs, blanks and trailing junk.
bool parse_int(const std::string& s, int& out) {
  if (s.empty() || s.size() > 9) return false;
  long long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = static_cast<int>(v);
  return true;
}

}  // namespace

Digraph parse_dg(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  Digraph d;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    if (!have_header) {
      if (line.size() < 3 || line[0] != 'n' || line[1] != ' ')
        throw ParseError(line_no, "expected header \"n <count>\"");
      int n = 0;
      if (!parse_int(line.substr(2), n)) throw ParseError(line_no, "bad vertex count");
      d = Digraph(n);
      have_header = true;
      continue;
    }
    std::size_t sp = line.find(' ');
    if (sp == std::string::npos || sp == 0 || sp + 1 >= line.size())
      throw ParseError(line_no, "expected arc line \"u v\"");
    int u = 0, v = 0;
    if (!parse_int(line.substr(0, sp), u) || !parse_int(line.substr(sp + 1), v))
      throw ParseError(line_no, "expected arc line \"u v\"");
    if (u == v) throw ParseError(line_no, "loop arc");
    if (u >= d.order() || v >= d.order()) throw ParseError(line_no, "vertex out of range");
    if (d.has_arc(u, v)) throw ParseError(line_no, "duplicate arc");
    d.add_arc(u, v);
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header \"n <count>\"");
  return d;
}

std::string serialize_dg(const Digraph& d) {
  std::string out = "n " + std::to_string(d.order()) + "\n";
  for (const Arc& a : d.arcs())
    out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
  return out;
}

Digraph read_dg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dg(buf.str());
}

void write_dg_file(const std::string& path, const Digraph& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << serialize_dg(d);
}

std::string to_dot(const Digraph& d) {
  std::string out = "digraph D {\n";
  for (int v = 0; v < d.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Arc& a : d.arcs())
    out += "  " + std::to_string(a.from) + " -> " + std::to_string(a.to) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace digsat
