#pragma once

#include <vector>

#include "exdir/graph.hpp"
#include "exdir/vertex_set.hpp"

namespace exdir {

/// All-pairs geodesic distances (hop counts) plus the derived eccentricity,
/// diameter, radius and center data.  Built by one BFS per vertex.
///
/// Connectivity gives the spectrum property used throughout: for every u,
/// the set of realized distances {dist(u,x) : x in V} is exactly
/// {0,1,...,ecc(u)}.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int n() const { return n_; }
  int dist(Vertex u, Vertex v) const { return dist_[static_cast<size_t>(u) * n_ + v]; }
  int ecc(Vertex v) const { return ecc_[v]; }
  int diameter() const { return diameter_; }
  int radius() const { return radius_; }
  const VertexSet& centers() const { return centers_; }

  /// All vertices at distance exactly d from v.  N_0(v) = {v}; empty when
  /// d > ecc(v).
  VertexSet sphere(Vertex v, int d) const;

  /// True iff u lies on some geodesic realizing the diameter, i.e. there
  /// are a,b with dist(a,b) = diameter and dist(a,u) + dist(u,b) = diameter.
  /// In trees this is exactly membership in a longest path.
  bool on_diameter_path(Vertex u) const { return diam_path_.contains(u); }

  /// Minimum distance from v to a vertex on some diameter geodesic.
  /// Zero iff v itself lies on one.
  int ell(Vertex v) const;

 private:
  int n_ = 0;
  int diameter_ = 0;
  int radius_ = 0;
  std::vector<int> dist_;
  std::vector<int> ecc_;
  VertexSet centers_;
  VertexSet diam_path_;
};

inline DistanceMatrix apsp(const Graph& g) { return DistanceMatrix(g); }

}  // namespace exdir
