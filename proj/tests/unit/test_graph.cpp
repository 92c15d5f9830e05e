#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "exdir/distance.hpp"
#include "exdir/errors.hpp"
#include "exdir/families.hpp"
#include "exdir/graph.hpp"

using namespace exdir;

TEST_CASE("parse_edge_list accepts the documented format") {
  Graph g = parse_edge_list("2\n0 1\n");
  CHECK(g.n() == 2);
  CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}});

  Graph c4 = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(c4.n() == 4);
  CHECK(c4.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(c4.neighbors(v).size() == 2);

  Graph with_noise = parse_edge_list("# cycle\n\n3\n0 1\n # more\n1 2\n");
  CHECK(with_noise.n() == 3);
  CHECK(with_noise.edge_count() == 2);
}

TEST_CASE("parse_edge_list rejects bad input") {
  CHECK_THROWS_AS(parse_edge_list("3\n0 1\n"), ParseError);        // vertex 2 isolated
  CHECK_THROWS_AS(parse_edge_list("2\n0\n"), ParseError);          // malformed line
  CHECK_THROWS_AS(parse_edge_list("2\n0 5\n"), ParseError);        // out of range
  CHECK_THROWS_AS(parse_edge_list("2\n0 0\n0 1\n"), ParseError);   // self-loop
  CHECK_THROWS_AS(parse_edge_list("2\n0 1\n1 0\n"), ParseError);   // duplicate
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);                // no count
  CHECK_THROWS_AS(parse_edge_list("33\n0 1\n"), ParseError);       // above cap
  CHECK_THROWS_AS(parse_edge_list("2\n0 1 9\n"), ParseError);      // trailing tokens
}

TEST_CASE("family generators produce the documented labelings") {
  Graph l22 = make_lattice(2, 2);
  CHECK(l22.n() == 4);
  CHECK(l22.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(l22.neighbors(v).size() == 2);  // a 4-cycle

  Graph lol = make_lollipop(6, 4);
  CHECK(lol.n() == 6);
  CHECK(lol.edge_count() == 6 + 2);  // K_4 plus a 2-vertex pendant path
  CHECK(lol.has_edge(3, 4));
  CHECK(lol.has_edge(4, 5));
  CHECK_FALSE(lol.has_edge(3, 5));

  Graph spider = make_spider(4, {5, 5});
  CHECK(spider.n() == 15);
  CHECK(spider.neighbors(0).size() == 1);  // handle tip a
  CHECK(spider.neighbors(4).size() == 3);  // the center joins handle and two legs
  CHECK(spider.is_tree());

  Graph star = make_star(4);
  CHECK(star.n() == 5);
  CHECK(star.neighbors(0).size() == 4);

  CHECK(make_lollipop(6, 2) == make_complete(6));
  CHECK(make_lollipop(6, 6) == make_path(6));
}

TEST_CASE("family parameter violations are rejected") {
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(make_lollipop(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_lollipop(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_spider(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_spider(2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_lattice(0, 3), std::invalid_argument);
}

TEST_CASE("family spec strings round-trip") {
  for (const char* text : {"path:9", "cycle:7", "complete:5", "star:4", "lattice:4x5",
                           "lollipop:8,3", "spider:4;5,5", "randtree:10,42"}) {
    FamilySpec spec = FamilySpec::parse(text);
    CHECK(spec.to_string() == text);
    CHECK(generate(spec).n() >= 1);
  }
  CHECK_THROWS_AS(FamilySpec::parse("blob:3"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("cycle"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("lattice:4"), ParseError);
}

TEST_CASE("random trees are reproducible per seed") {
  Graph a = make_random_tree(10, 42);
  Graph b = make_random_tree(10, 42);
  CHECK(a == b);
  CHECK(a.is_tree());
  bool any_diff = false;
  for (std::uint32_t seed = 0; seed < 8; ++seed)
    any_diff = any_diff || !(make_random_tree(10, seed) == a);
  CHECK(any_diff);
}

TEST_CASE("apsp distances and derived data") {
  DistanceMatrix p3(make_path(3));
  CHECK(p3.dist(0, 2) == 2);
  CHECK(p3.diameter() == 2);
  CHECK(p3.radius() == 1);
  CHECK(p3.centers() == VertexSet::of(3, {1}));

  DistanceMatrix c4(make_cycle(4));
  CHECK(c4.dist(0, 2) == 2);
  for (Vertex v = 0; v < 4; ++v) CHECK(c4.ecc(v) == 2);

  DistanceMatrix l55(make_lattice(5, 5));
  CHECK(l55.dist(lattice_index(5, 5, 1, 1), lattice_index(5, 5, 5, 5)) == 8);
  CHECK(l55.ecc(lattice_index(5, 5, 1, 1)) == 8);
}

TEST_CASE("sphere examples") {
  DistanceMatrix c6(make_cycle(6));
  CHECK(c6.sphere(0, 3) == VertexSet::of(6, {3}));
  DistanceMatrix p4(make_path(4));
  CHECK(p4.sphere(1, 2) == VertexSet::of(4, {3}));
  DistanceMatrix l22(make_lattice(2, 2));
  CHECK(l22.sphere(0, 1) == VertexSet::of(4, {1, 2}));
  CHECK(l22.sphere(0, 0) == VertexSet::of(4, {0}));
  CHECK(l22.sphere(0, 3).empty());
}

TEST_CASE("diameter-path membership and ell") {
  DistanceMatrix p4(make_path(4));
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(p4.on_diameter_path(v));
    CHECK(p4.ell(v) == 0);
  }

  DistanceMatrix spider(make_spider(4, {5, 5}));
  CHECK_FALSE(spider.on_diameter_path(0));  // the handle tip a
  CHECK(spider.on_diameter_path(4));        // the center
  CHECK(spider.ell(0) == 4);

  DistanceMatrix star(make_star(3));
  CHECK(star.on_diameter_path(0));
  DistanceMatrix star4(make_star(4));
  CHECK(star4.ell(1) == 0);
}

TEST_CASE("distance invariants hold on random graphs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size_dist(2, 9);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = make_random_tree(size_dist(rng), rng());
    // Densify some instances with extra edges while keeping simplicity.
    std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
    std::uniform_int_distribution<int> vd(0, g.n() - 1);
    for (int tries = 0; tries < g.n(); ++tries) {
      Vertex u = vd(rng), v = vd(rng);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) == edges.end())
        edges.emplace_back(u, v);
    }
    Graph dense = Graph::from_edges(g.n(), edges);

    for (const Graph* gp : {&g, &dense}) {
      DistanceMatrix dm(*gp);
      int n = gp->n();
      for (Vertex u = 0; u < n; ++u) {
        std::set<int> spectrum;
        for (Vertex v = 0; v < n; ++v) {
          CHECK(dm.dist(u, v) == dm.dist(v, u));
          CHECK((dm.dist(u, v) == 0) == (u == v));
          for (Vertex w = 0; w < n; ++w)
            CHECK(dm.dist(u, v) <= dm.dist(u, w) + dm.dist(w, v));
          spectrum.insert(dm.dist(u, v));
        }
        // Connectivity forces every distance 0..ecc(u) to be realized.
        CHECK(static_cast<int>(spectrum.size()) == dm.ecc(u) + 1);
        // Spheres partition V over d = 0..ecc(u).
        int total = 0;
        for (int d = 0; d <= dm.ecc(u); ++d) total += dm.sphere(u, d).size();
        CHECK(total == n);
      }
    }
  }
}

TEST_CASE("emit then parse round-trips") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 25; ++iter) {
    Graph g = make_random_tree(2 + static_cast<int>(rng() % 10), rng());
    Graph back = parse_edge_list(g.edge_list());
    CHECK(back == g);
    CHECK(back.hash() == g.hash());
  }
}

TEST_CASE("tree diameter-path vertices induce a connected subgraph") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 50; ++iter) {
    Graph t = make_random_tree(2 + static_cast<int>(rng() % 9), rng());
    DistanceMatrix dm(t);
    auto members = VertexSet(t.n());
    for (Vertex v = 0; v < t.n(); ++v)
      if (dm.on_diameter_path(v)) members = members.with(v);
    REQUIRE_FALSE(members.empty());
    // BFS within the member set.
    auto verts = members.vertices();
    VertexSet seen = VertexSet::of(t.n(), {verts.front()});
    std::vector<Vertex> stack = {verts.front()};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : t.neighbors(u))
        if (members.contains(w) && !seen.contains(w)) {
          seen = seen.with(w);
          stack.push_back(w);
        }
    }
    CHECK(seen == members);
  }
}

TEST_CASE("vertex set basics") {
  VertexSet s = VertexSet::of(6, {0, 1, 3, 4});
  CHECK(s.size() == 4);
  CHECK(s.to_string() == "{0,1,3,4}");
  CHECK(VertexSet::parse(6, "0,1,3,4") == s);
  CHECK(s.complement() == VertexSet::of(6, {2, 5}));
  CHECK(VertexSet::of(6, {0, 3}).lex_less(VertexSet::of(6, {1, 2})));
  CHECK_FALSE(VertexSet::of(6, {1, 2}).lex_less(VertexSet::of(6, {0, 3})));
  CHECK(VertexSet::of(6, {0}).lex_less(VertexSet::of(6, {0, 1})));
  CHECK_THROWS_AS(VertexSet::parse(4, "0,9"), ParseError);
  CHECK_THROWS_AS(VertexSet::parse(4, ""), ParseError);
}
