#pragma once

#include <vector>

#include "exdir/distance.hpp"
#include "exdir/vertex_set.hpp"

namespace exdir {

// Closed sets: a nonempty U is closed when from every u in U, every
// distance the whole graph realizes from u (that is 0..ecc(u)) is realized
// within U itself.  The Director can confine the token to a closed set
// forever, which is what ties these sets to the game value.

/// Spectrum check: {dist(u,x) : x in u_set} == {0..ecc(u)} for every member.
/// Throws std::invalid_argument on an empty set (by definition not closed).
bool is_closed(const DistanceMatrix& dm, const VertexSet& u_set);

/// Result of iteratively removing the escape layer X_i = vertices of U_i
/// from which the Explorer can force a visit outside the original set.
struct PeelResult {
  VertexSet core;                 // unique maximal closed subset; may be empty
  std::vector<VertexSet> layers;  // X_1, X_2, ...; all nonempty, disjoint

  /// Layer index (1-based) of v, or 0 when v is in the core.
  /// -1 when v was not part of the peeled set.
  std::vector<int> escape_depth;
};

PeelResult peel(const DistanceMatrix& dm, const VertexSet& u_set);

struct ClosedSearchResult {
  int size = 0;
  VertexSet witness;
};

// Exhaustive searches refuse above this unless the caller raises the cap
// explicitly; the hard enumeration ceiling is 24 regardless.
inline constexpr int kDefaultSearchCap = 14;
inline constexpr int kMaxSearchVertices = 24;

/// Smallest-cardinality closed set.  Sizes are scanned upward from
/// radius+1; within a size, candidates are enumerated in lexicographic
/// member order, so the returned witness is the lexicographically smallest
/// minimum closed set.  Pruning uses the fact that a closed set containing
/// u has at least ecc(u)+1 members.
ClosedSearchResult min_closed_size(const DistanceMatrix& dm, int cap = kDefaultSearchCap);

/// Same search restricted to sets containing v.
ClosedSearchResult min_closed_containing(const DistanceMatrix& dm, Vertex v,
                                         int cap = kDefaultSearchCap);

}  // namespace exdir
