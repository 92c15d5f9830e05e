#include <map>

#include "doctest.h"
#include "exdir/closed.hpp"
#include "exdir/families.hpp"
#include "exdir/formulas.hpp"
#include "exdir/solver.hpp"

using namespace exdir;

TEST_CASE("cycle closed form") {
  // n -> f*(n), including both power-of-two and smallest-odd-prime branches.
  const std::map<int, int> expected = {{3, 2},  {4, 4}, {5, 4},  {6, 4},  {7, 6},
                                       {8, 8},  {9, 6}, {10, 8}, {11, 10}, {12, 8},
                                       {15, 10}, {16, 16}, {21, 14}, {25, 20}};
  for (auto [n, value] : expected) CHECK(f_star_cycle(n) == value);
  CHECK_THROWS_AS(f_star_cycle(2), std::invalid_argument);
}

TEST_CASE("tree value and lower bound") {
  for (int n = 2; n <= 8; ++n)
    for (Vertex v = 0; v < n; ++v) CHECK(tree_value(make_path(n), v) == n);

  Graph star = make_star(4);
  CHECK(tree_value(star, 1) == 3);  // leaf start: diameter 2, ell 0
  CHECK(tree_value(star, 0) == 3);  // the center also sits on longest paths

  Graph spider = make_spider(4, {5, 5});
  CHECK(tree_value(spider, 0) == 15);

  CHECK(tree_lower_bound(make_path(5)) == 5);
  CHECK(tree_lower_bound(make_star(3)) == 3);
  CHECK(tree_lower_bound(spider) == 11);

  CHECK_THROWS_AS(tree_value(make_cycle(4), 0), std::invalid_argument);
  CHECK_THROWS_AS(tree_lower_bound(make_complete(4)), std::invalid_argument);
}

TEST_CASE("lattice bounds") {
  BoundPair odd = lattice_bounds(5, 5);
  CHECK(odd.exact);
  CHECK(odd.lower == 9);

  BoundPair mixed = lattice_bounds(6, 4);
  CHECK_FALSE(mixed.exact);
  CHECK(mixed.lower == 10);
  CHECK(mixed.upper == 12);

  // Transposed input is the same lattice.
  BoundPair swapped = lattice_bounds(4, 6);
  CHECK(swapped.lower == 10);
  CHECK(swapped.upper == 12);

  // Square even lattice with a refined-boundary start.
  Vertex in_b = lattice_index(6, 6, 2, 1);
  CHECK(lattice_in_refined_boundary(6, in_b));
  BoundPair refined = lattice_bounds(6, 6, in_b);
  CHECK(refined.lower == 12);
  CHECK(refined.upper == 14);
  Vertex out_b = lattice_index(6, 6, 2, 3);
  CHECK_FALSE(lattice_in_refined_boundary(6, out_b));
  CHECK(lattice_bounds(6, 6, out_b).upper == 16);

  // L(4,2) has coinciding bounds.
  BoundPair tight = lattice_bounds(4, 2);
  CHECK(tight.exact);
  CHECK(tight.lower == 6);

  int b_size = 0;
  for (Vertex v = 0; v < 36; ++v) b_size += lattice_in_refined_boundary(6, v);
  CHECK(b_size == 3 * 6 - 4);

  CHECK_THROWS_AS(lattice_bounds(1, 5), std::invalid_argument);
}

TEST_CASE("eccentricity lower bound") {
  DistanceMatrix p5(make_path(5));
  CHECK(ecc_lower_bound(p5, VertexSet::full(5)) == p5.radius() + 1);
  CHECK(ecc_lower_bound(p5, VertexSet::of(5, {0, 4})) == 5);
  DistanceMatrix c6(make_cycle(6));
  CHECK(ecc_lower_bound(c6, VertexSet::of(6, {0})) == 4);
  CHECK_THROWS_AS(ecc_lower_bound(c6, VertexSet(6)), std::invalid_argument);
}

TEST_CASE("lattice closed witnesses reproduce the reference routes") {
  // L(5,5), v = (2,1): staircase along row 1, up the center column, along
  // the top row; 9 vertices.
  VertexSet w55 = lattice_closed_witness(5, 5, lattice_index(5, 5, 2, 1));
  CHECK(w55 == VertexSet::from_vertices(25, {0, 1, 2, 7, 12, 17, 22, 23, 24}));
  CHECK(is_closed(DistanceMatrix(make_lattice(5, 5)), w55));

  // L(5,4), v = (2,3): bends at v's column, v's row, the center column,
  // the far center row, and a's column; 8 vertices.
  VertexSet w54 = lattice_closed_witness(5, 4, lattice_index(5, 4, 2, 3));
  CHECK(w54 == VertexSet::from_vertices(20, {4, 7, 8, 9, 11, 12, 15, 16}));
  CHECK(is_closed(DistanceMatrix(make_lattice(5, 4)), w54));

  // Even-even: short boundary lines plus v's long line.
  for (Vertex v = 0; v < 24; ++v) {
    VertexSet w = lattice_closed_witness(6, 4, v);
    CHECK(w.size() == 12);
    CHECK(w.contains(v));
    CHECK(is_closed(DistanceMatrix(make_lattice(6, 4)), w));
  }

  for (Vertex v = 0; v < 4; ++v)
    CHECK(lattice_closed_witness(2, 2, v) == VertexSet::full(4));
}

TEST_CASE("witness sizes match the bound they certify") {
  for (int n = 2; n <= 8; ++n)
    for (int m = 2; m <= 8; ++m) {
      if (n * m > kMaxVertices) continue;
      DistanceMatrix dm(make_lattice(n, m));
      BoundPair bounds = lattice_bounds(n, m);
      for (Vertex v = 0; v < n * m; ++v) {
        VertexSet w = lattice_closed_witness(n, m, v);
        CHECK(is_closed(dm, w));
        CHECK(w.contains(v));
        if (bounds.exact)
          CHECK(w.size() == bounds.lower);
        else
          CHECK(w.size() == bounds.upper);
      }
    }
}

TEST_CASE("cycle formula agrees with the closed-set bridge") {
  for (int n = 3; n <= 12; ++n) {
    DistanceMatrix dm(make_cycle(n));
    CHECK(min_closed_size(dm, n).size == f_star_cycle(n));
  }
}
