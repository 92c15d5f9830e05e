#include "exdir/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "exdir/errors.hpp"

namespace exdir {

Graph Graph::from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges) {
  if (n < 1 || n > kMaxVertices)
    throw ParseError("vertex count " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxVertices));
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge endpoint out of range: " + std::to_string(u) + " " +
                       std::to_string(v));
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParseError("duplicate edge");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

  // Connectivity: the game value is undefined on disconnected graphs.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.adj_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw ParseError("graph is disconnected");
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::string Graph::edge_list() const {
  std::string out = std::to_string(n_) + "\n";
  for (auto [u, v] : edges_)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string Graph::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : edge_list()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_n = false;
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_n) {
      if (!(fields >> n)) throw ParseError("line " + std::to_string(lineno) + ": bad vertex count");
      std::string rest;
      if (fields >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
      have_n = true;
      continue;
    }
    int u, v;
    if (!(fields >> u >> v))
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
    std::string rest;
    if (fields >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    edges.emplace_back(u, v);
  }
  if (!have_n) throw ParseError("missing vertex count line");
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace exdir
