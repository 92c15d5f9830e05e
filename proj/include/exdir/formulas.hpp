#pragma once

#include "exdir/distance.hpp"
#include "exdir/graph.hpp"
#include "exdir/vertex_set.hpp"

namespace exdir {

struct BoundPair {
  int lower = 0;
  int upper = 0;
  bool exact = false;  // lower == upper
};

/// Game value of the n-cycle: n when n is a power of two, otherwise
/// n(p-1)/p with p the smallest odd prime factor of n.  Requires n >= 3.
int f_star_cycle(int n);

/// Game value on a tree: diameter + ell(v) + 1, where ell is the distance
/// from v to the nearest vertex on a longest path.  Rejects non-trees.
int tree_value(const Graph& g, Vertex v);

/// diameter + 1; every start in a tree reaches at least this.
int tree_lower_bound(const Graph& g);

/// Bounds for the n-by-m lattice (n, m >= 2, either order; the lattice is
/// transposition symmetric).  Exact n+m-1 when a side is odd.  When both
/// sides are even: lower n+m, upper 2*min+max-2, refined to 3n-4 on the
/// square lattice when v lies in the refined boundary set (pass v = -1 for
/// no vertex refinement).
BoundPair lattice_bounds(int n, int m, Vertex v = -1);

/// Membership in the refined boundary set of the even square lattice
/// L(n,n): full bottom and top rows plus the cells (col n-1, row r) for
/// 3 <= r <= n-2.  That set is closed and has 3n-4 vertices.
bool lattice_in_refined_boundary(int n, Vertex v);

/// min over v in a_set of ecc(v), plus 1.  A lower bound on the game value
/// whenever the Explorer can force a visit to a_set (always true for V).
int ecc_lower_bound(const DistanceMatrix& dm, const VertexSet& a_set);

/// A concrete closed set containing v witnessing the lattice upper bound.
///
/// Odd case: a monotone corner-to-antipodal-corner staircase through v and
/// the central vertices, of size n+m-1.  Route, writing a for the corner
/// farthest from v and b for its antipode: b, along b's row to v's column,
/// along v's column to v, then
///   - n odd, m odd: along v's row to the center column, up it to a's row,
///     then along a's row;
///   - n odd, m even: along v's row to the center column, up it to the far
///     center row, along that row to a's column, then along a's column;
///   - n even, m odd: along v's column to the center row, along it to a's
///     column, then along a's column.
///
/// Even-even case: the two short boundary lines plus v's long line
/// (size 2*min + max - 2).
VertexSet lattice_closed_witness(int n, int m, Vertex v);

}  // namespace exdir
