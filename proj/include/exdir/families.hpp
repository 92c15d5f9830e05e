#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exdir/graph.hpp"

namespace exdir {

enum class Family { kPath, kCycle, kComplete, kStar, kLattice, kLollipop, kSpider, kRandTree };

/// A graph family instance.  Text forms accepted by parse():
///   path:9  cycle:7  complete:5  star:4  lattice:4x5  lollipop:8,3
///   spider:4;5,5  randtree:10,42
struct FamilySpec {
  Family family = Family::kPath;
  int a = 0;               // n, b (lollipop), or handle length (spider)
  int b = 0;               // m (lattice) or k (lollipop)
  std::vector<int> legs;   // spider leg lengths
  std::uint32_t seed = 0;  // randtree seed

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

/// Deterministic labeled generator for a FamilySpec.  Throws
/// std::invalid_argument on parameter violations.
Graph generate(const FamilySpec& spec);

// Direct constructors.  Vertex labelings are part of the contract so tests
// and the CLI can address named vertices.

Graph make_path(int n);      // 0-1-...-(n-1)
Graph make_cycle(int n);     // 0-1-...-(n-1)-0, n >= 3
Graph make_complete(int n);
Graph make_star(int k);      // center 0, leaves 1..k

/// n columns by m rows; cell (col,row) with col in 1..n, row in 1..m has
/// index (row-1)*n + (col-1); edges join orthogonally adjacent cells.
Graph make_lattice(int n, int m);
/// 0-based index of lattice cell (col,row).
int lattice_index(int n, int m, int col, int row);

/// Complete graph on b-k+2 vertices (0..b-k+1) plus a pendant path of k-2
/// further vertices attached at clique vertex b-k+1.  Requires 2 <= k <= b.
Graph make_lollipop(int b, int k);

/// Handle path 0-1-...-h (0 is the handle tip, h is the center), plus one
/// path of legs[i] edges from the center per entry.  Leg vertices are
/// numbered consecutively after the handle.  handle may be 0 (tip = center).
Graph make_spider(int handle, const std::vector<int>& legs);

/// Random tree from a seeded Pruefer sequence; reproducible per (n, seed).
Graph make_random_tree(int n, std::uint32_t seed);

}  // namespace exdir
