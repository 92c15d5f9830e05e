#include <random>

#include "doctest.h"
#include "exdir/closed.hpp"
#include "exdir/errors.hpp"
#include "exdir/families.hpp"
#include "exdir/verify.hpp"

using namespace exdir;

TEST_CASE("is_closed spectrum examples") {
  DistanceMatrix c4(make_cycle(4));
  CHECK_FALSE(is_closed(c4, VertexSet::of(4, {0, 2})));  // distance 1 unrealized
  CHECK(is_closed(c4, VertexSet::full(4)));

  DistanceMatrix c6(make_cycle(6));
  CHECK(is_closed(c6, VertexSet::of(6, {0, 1, 3, 4})));
  CHECK_FALSE(is_closed(c6, VertexSet::of(6, {0, 1, 2, 3})));
  CHECK(is_closed(c6, VertexSet::full(6)));

  CHECK_THROWS_AS(is_closed(c6, VertexSet(6)), std::invalid_argument);
}

TEST_CASE("peel examples") {
  DistanceMatrix p4(make_path(4));
  PeelResult r = peel(p4, VertexSet::of(4, {0, 1}));
  CHECK(r.core.empty());
  REQUIRE(r.layers.size() == 1);
  CHECK(r.layers[0] == VertexSet::of(4, {0, 1}));
  CHECK(r.escape_depth[0] == 1);
  CHECK(r.escape_depth[2] == -1);  // not part of the input

  PeelResult whole = peel(p4, VertexSet::full(4));
  CHECK(whole.core == VertexSet::full(4));
  CHECK(whole.layers.empty());
  CHECK(whole.escape_depth[1] == 0);

  DistanceMatrix c6(make_cycle(6));
  PeelResult c = peel(c6, VertexSet::of(6, {0, 1, 2, 3, 4}));
  REQUIRE(c.layers.size() == 1);
  CHECK(c.layers[0] == VertexSet::of(6, {2}));
  CHECK(c.core == VertexSet::of(6, {0, 1, 3, 4}));

  CHECK_THROWS_AS(peel(c6, VertexSet(6)), std::invalid_argument);
}

TEST_CASE("minimum closed set search") {
  DistanceMatrix k5(make_complete(5));
  auto r = min_closed_size(k5);
  CHECK(r.size == 2);
  CHECK(r.witness == VertexSet::of(5, {0, 1}));  // lexicographically smallest pair

  DistanceMatrix c6(make_cycle(6));
  auto rc = min_closed_size(c6);
  CHECK(rc.size == 4);
  CHECK(rc.witness == VertexSet::of(6, {0, 1, 3, 4}));

  for (int n = 2; n <= 6; ++n) {
    DistanceMatrix pn(make_path(n));
    CHECK(min_closed_size(pn).size == n);
  }
}

TEST_CASE("minimum closed set containing a vertex") {
  DistanceMatrix k5(make_complete(5));
  auto r = min_closed_containing(k5, 0);
  CHECK(r.size == 2);
  CHECK(r.witness == VertexSet::of(5, {0, 1}));
  auto r3 = min_closed_containing(k5, 3);
  CHECK(r3.size == 2);
  CHECK(r3.witness.contains(3));

  DistanceMatrix p4(make_path(4));
  CHECK(min_closed_containing(p4, 0).size == 4);

  DistanceMatrix c6(make_cycle(6));
  auto rc = min_closed_containing(c6, 0);
  CHECK(rc.size == 4);
  CHECK(rc.witness == VertexSet::of(6, {0, 1, 3, 4}));
}

TEST_CASE("searches refuse above the cap unless raised") {
  DistanceMatrix big(make_path(15));
  CHECK_THROWS_AS(min_closed_size(big), CapError);
  CHECK_THROWS_AS(min_closed_containing(big, 0), CapError);
  CHECK(min_closed_size(big, 15).size == 15);  // explicit override
  CHECK(is_closed(big, VertexSet::full(15)));  // membership checks have no cap
}

namespace {

// Exhaustive reference facts about closed subsets of u_mask.
struct SubsetScan {
  std::uint32_t closed_union = 0;
  bool all_closed_inside_core = true;
};

SubsetScan scan_subsets(const DistanceMatrix& dm, std::uint32_t u_mask, std::uint32_t core) {
  SubsetScan out;
  int n = dm.n();
  for (std::uint32_t sub = u_mask; sub != 0; sub = (sub - 1) & u_mask) {
    if (is_closed(dm, VertexSet(n, sub))) {
      out.closed_union |= sub;
      if ((sub & ~core) != 0) out.all_closed_inside_core = false;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("peel core is the union of all closed subsets (exhaustive, n <= 6)") {
  std::mt19937 rng(23);
  for (int n = 2; n <= 6; ++n) {
    for (int iter = 0; iter < 12; ++iter) {
      Graph g = random_connected_graph(n, rng);
      DistanceMatrix dm(g);
      std::uniform_int_distribution<std::uint32_t> masks(1, (1u << n) - 1);
      for (int s = 0; s < 10; ++s) {
        std::uint32_t u_mask = masks(rng);
        PeelResult r = peel(dm, VertexSet(n, u_mask));
        SubsetScan scan = scan_subsets(dm, u_mask, r.core.bits());
        CHECK(scan.closed_union == r.core.bits());
        CHECK(scan.all_closed_inside_core);
        // is_closed(U) iff peel(U).core == U.
        CHECK(is_closed(dm, VertexSet(n, u_mask)) == (r.core.bits() == u_mask));
        // Layers partition U minus the core and are nonempty.
        std::uint32_t acc = r.core.bits();
        for (const auto& layer : r.layers) {
          CHECK_FALSE(layer.empty());
          CHECK((acc & layer.bits()) == 0);
          acc |= layer.bits();
        }
        CHECK(acc == u_mask);
      }
    }
  }
}

TEST_CASE("search witnesses are closed, minimal, and bounded by the radius") {
  std::mt19937 rng(29);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_connected_graph(n, rng);
    DistanceMatrix dm(g);
    auto r = min_closed_size(dm);
    CHECK(is_closed(dm, r.witness));
    CHECK(r.size == r.witness.size());
    CHECK(r.size >= dm.radius() + 1);
    // Removing any member of a minimum witness breaks closedness.
    if (r.size > 1)
      for (Vertex v : r.witness.vertices())
        CHECK_FALSE(is_closed(dm, r.witness.without(v)));
    // No strictly smaller subset is closed.
    SubsetScan scan = scan_subsets(dm, (1u << n) - 1, (1u << n) - 1);
    int smallest = n;
    for (std::uint32_t sub = (1u << n) - 1; sub != 0; sub = (sub - 1) & ((1u << n) - 1))
      if (is_closed(dm, VertexSet(n, sub))) smallest = std::min(smallest, VertexSet(n, sub).size());
    CHECK(smallest == r.size);

    Vertex v = static_cast<Vertex>(rng() % n);
    auto rc = min_closed_containing(dm, v);
    CHECK(is_closed(dm, rc.witness));
    CHECK(rc.witness.contains(v));
    CHECK(rc.size >= r.size);
  }
}
