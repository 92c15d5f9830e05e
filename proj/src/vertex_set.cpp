#include "exdir/vertex_set.hpp"

#include <sstream>

#include "exdir/errors.hpp"

namespace exdir {

VertexSet VertexSet::parse(int n, const std::string& text) {
  VertexSet s(n);
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad vertex list entry: '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw ParseError("bad vertex list entry: '" + item + "'");
    if (v < 0 || v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range");
    s = s.with(v);
  }
  if (s.empty()) throw ParseError("empty vertex list");
  return s;
}

bool VertexSet::lex_less(const VertexSet& o) const {
  std::uint32_t a = bits_, b = o.bits_;
  while (a != 0 && b != 0) {
    int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : vertices()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace exdir
