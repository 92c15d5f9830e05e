#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exdir/vertex_set.hpp"

namespace exdir {

/// Simple connected undirected graph on vertices 0..n-1.  Immutable after
/// construction; construction validates simplicity and connectivity, so a
/// Graph value is always usable by the game machinery (every vertex has a
/// finite distance to every other).
class Graph {
 public:
  /// Builds and validates.  Edges may be given in any order/orientation;
  /// they are stored canonically (u < v, sorted lexicographically).
  /// Throws ParseError on self loops, duplicates, out-of-range endpoints,
  /// disconnected input, or n outside 1..kMaxVertices.
  static Graph from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  bool is_tree() const { return edge_count() == n_ - 1; }

  /// Canonical edge-list document: vertex count line, then one "u v" line
  /// per edge in sorted order.  parse_edge_list of the output reproduces
  /// an identical Graph.
  std::string edge_list() const;

  /// FNV-1a 64 digest of the canonical edge list, as 16 hex chars.
  std::string hash() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  Graph() = default;
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Parses an edge-list document: first non-comment line is the vertex
/// count, each further non-comment line is "u v".  Lines starting with '#'
/// and blank lines are ignored.  Rejects disconnected graphs.
Graph parse_edge_list(const std::string& text);

}  // namespace exdir
