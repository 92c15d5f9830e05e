#include "exdir/formulas.hpp"

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "exdir/families.hpp"

namespace exdir {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

int sign(int x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

void add_leg(std::vector<std::pair<int, int>>& pts, std::pair<int, int> to) {
  auto [cx, cy] = pts.back();
  int sx = sign(to.first - cx), sy = sign(to.second - cy);
  assert(sx == 0 || sy == 0);  // legs are axis aligned
  while (pts.back() != to) {
    cx += sx;
    cy += sy;
    pts.emplace_back(cx, cy);
  }
}

}  // namespace

int f_star_cycle(int n) {
  require(n >= 3, "f_star_cycle: n >= 3 required");
  if ((n & (n - 1)) == 0) return n;
  for (int p = 3;; p += 2)
    if (n % p == 0) return n / p * (p - 1);
}

int tree_value(const Graph& g, Vertex v) {
  require(g.is_tree(), "tree_value: input is not a tree");
  require(v >= 0 && v < g.n(), "tree_value: bad vertex");
  DistanceMatrix dm(g);
  return dm.diameter() + dm.ell(v) + 1;
}

int tree_lower_bound(const Graph& g) {
  require(g.is_tree(), "tree_lower_bound: input is not a tree");
  return DistanceMatrix(g).diameter() + 1;
}

bool lattice_in_refined_boundary(int n, Vertex v) {
  require(n >= 2 && n % 2 == 0, "refined boundary set needs an even square lattice");
  require(v >= 0 && v < n * n, "bad lattice vertex");
  int col = v % n + 1, row = v / n + 1;
  if (row == 1 || row == n) return true;
  return col == n - 1 && row >= 3 && row <= n - 2;
}

BoundPair lattice_bounds(int n, int m, Vertex v) {
  require(n >= 2 && m >= 2, "lattice_bounds: n, m >= 2 required");
  if (n % 2 == 1 || m % 2 == 1) {
    int exact = n + m - 1;
    return {exact, exact, true};
  }
  int lower = n + m;
  int upper = std::max(n, m) + 2 * std::min(n, m) - 2;
  if (n == m && v >= 0 && lattice_in_refined_boundary(n, v))
    upper = std::min(upper, 3 * n - 4);
  return {lower, upper, lower == upper};
}

int ecc_lower_bound(const DistanceMatrix& dm, const VertexSet& a_set) {
  require(!a_set.empty(), "ecc_lower_bound: empty set");
  int best = dm.n();
  for (Vertex v : a_set.vertices()) best = std::min(best, dm.ecc(v));
  return best + 1;
}

VertexSet lattice_closed_witness(int n, int m, Vertex v) {
  require(n >= 2 && m >= 2, "lattice_closed_witness: n, m >= 2 required");
  require(v >= 0 && v < n * m, "lattice_closed_witness: bad vertex");
  VertexSet out(n * m);
  int vx = v % n + 1, vy = v / n + 1;

  if (n % 2 == 0 && m % 2 == 0) {
    // Two short boundary lines plus v's long line.
    if (n >= m) {
      for (int row = 1; row <= m; ++row) {
        out = out.with(lattice_index(n, m, 1, row));
        out = out.with(lattice_index(n, m, n, row));
      }
      for (int col = 1; col <= n; ++col) out = out.with(lattice_index(n, m, col, vy));
    } else {
      for (int col = 1; col <= n; ++col) {
        out = out.with(lattice_index(n, m, col, 1));
        out = out.with(lattice_index(n, m, col, m));
      }
      for (int row = 1; row <= m; ++row) out = out.with(lattice_index(n, m, vx, row));
    }
    return out;
  }

  // One side odd: staircase from the antipode b of the farthest corner a,
  // through v and the central vertices, to a.
  int ax = 2 * vx <= n + 1 ? n : 1, ay = 2 * vy <= m + 1 ? m : 1;
  int bx = n + 1 - ax, by = m + 1 - ay;
  std::vector<std::pair<int, int>> pts = {{bx, by}};
  add_leg(pts, {vx, by});
  add_leg(pts, {vx, vy});
  if (n % 2 == 1) {
    int cx = (n + 1) / 2;
    add_leg(pts, {cx, vy});
    if (m % 2 == 1) {
      add_leg(pts, {cx, ay});
      add_leg(pts, {ax, ay});
    } else {
      int far_center_row = ay == m ? m / 2 + 1 : m / 2;
      add_leg(pts, {cx, far_center_row});
      add_leg(pts, {ax, far_center_row});
      add_leg(pts, {ax, ay});
    }
  } else {
    int cy = (m + 1) / 2;
    add_leg(pts, {vx, cy});
    add_leg(pts, {ax, cy});
    add_leg(pts, {ax, ay});
  }
  assert(static_cast<int>(pts.size()) == n + m - 1);
  for (auto [col, row] : pts) out = out.with(lattice_index(n, m, col, row));
  return out;
}

}  // namespace exdir
