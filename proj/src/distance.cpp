#include "exdir/distance.hpp"

#include <algorithm>
#include <limits>

namespace exdir {

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.n()), dist_(static_cast<size_t>(g.n()) * g.n(), -1), ecc_(g.n(), 0),
      centers_(g.n()), diam_path_(g.n()) {
  std::vector<Vertex> queue(n_);
  for (Vertex s = 0; s < n_; ++s) {
    int* row = &dist_[static_cast<size_t>(s) * n_];
    row[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u))
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
    }
    ecc_[s] = *std::max_element(row, row + n_);
  }
  diameter_ = *std::max_element(ecc_.begin(), ecc_.end());
  radius_ = *std::min_element(ecc_.begin(), ecc_.end());
  for (Vertex v = 0; v < n_; ++v)
    if (ecc_[v] == radius_) centers_ = centers_.with(v);

  // Vertices sitting on some diameter-realizing geodesic.
  for (Vertex u = 0; u < n_; ++u) {
    bool on = false;
    for (Vertex a = 0; a < n_ && !on; ++a) {
      if (ecc_[a] < diameter_) continue;
      for (Vertex b = a; b < n_ && !on; ++b)
        if (dist(a, b) == diameter_ && dist(a, u) + dist(u, b) == diameter_) on = true;
    }
    if (on) diam_path_ = diam_path_.with(u);
  }
}

VertexSet DistanceMatrix::sphere(Vertex v, int d) const {
  VertexSet out(n_);
  if (d < 0) throw std::invalid_argument("sphere: negative distance");
  for (Vertex w = 0; w < n_; ++w)
    if (dist(v, w) == d) out = out.with(w);
  return out;
}

int DistanceMatrix::ell(Vertex v) const {
  int best = std::numeric_limits<int>::max();
  for (Vertex u : diam_path_.vertices()) best = std::min(best, dist(v, u));
  return best;
}

}  // namespace exdir
