#include <random>

#include "doctest.h"
#include "exdir/errors.hpp"
#include "exdir/families.hpp"
#include "exdir/nonadaptive.hpp"
#include "exdir/solver.hpp"
#include "exdir/verify.hpp"

using namespace exdir;

TEST_CASE("sequence text round-trips") {
  CHECK(parse_sequence("1,3,2,3,2") == std::vector<int>{1, 3, 2, 3, 2});
  CHECK(sequence_to_string({1, 3, 2}) == "1,3,2");
  CHECK(parse_sequence("") == std::vector<int>{});
  CHECK_THROWS_AS(parse_sequence("1,x"), ParseError);
  CHECK_THROWS_AS(parse_sequence("0,1"), ParseError);
}

TEST_CASE("score examples") {
  Graph p4 = make_path(4);
  CHECK(score(p4, 0, {1, 2, 1}).score == 4);
  CHECK(score(p4, 0, {1, 1, 1, 1}).score == 2);  // the Director oscillates
  CHECK(score(p4, 0, {}).score == 1);

  auto invalid = score(p4, 0, {9});
  CHECK_FALSE(invalid.valid());
  CHECK(*invalid.invalid_step == 1);

  // Legal first steps, but one Director line reaches a vertex where the
  // third call exceeds the eccentricity.
  auto later = score(p4, 0, {1, 1, 3});
  CHECK_FALSE(later.valid());
  CHECK(*later.invalid_step == 3);

  CHECK_THROWS_AS(score(p4, 0, {0}), std::invalid_argument);
  CHECK_THROWS_AS(score(make_path(15), 0, {1}), CapError);
}

TEST_CASE("even path sequences") {
  CHECK(even_path_sequence(1) == std::vector<int>{1});
  CHECK(even_path_sequence(2) == std::vector<int>{1, 2, 1});
  CHECK(even_path_sequence(3) == std::vector<int>{1, 3, 2, 3, 2});
  CHECK_THROWS_AS(even_path_sequence(0), std::invalid_argument);

  auto run = forced_run(make_path(6), 0, even_path_sequence(3));
  CHECK(run.all_forced());
  CHECK(run.trace == std::vector<Vertex>{0, 1, 4, 2, 5, 3});
}

TEST_CASE("odd path sequences") {
  CHECK(odd_path_sequence(2, 1) == std::vector<int>{3, 1, 3, 2});
  CHECK(odd_path_sequence(2, 0) == std::vector<int>{3, 2, 3, 2});
  CHECK(odd_path_sequence(2, 2) == std::vector<int>{2, 3, 2, 3});
  CHECK_THROWS_AS(odd_path_sequence(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(odd_path_sequence(0, 0), std::invalid_argument);

  auto run = forced_run(make_path(5), 1, odd_path_sequence(2, 1));
  CHECK(run.all_forced());
  CHECK(run.trace == std::vector<Vertex>{1, 4, 3, 0, 2});

  auto run0 = forced_run(make_path(5), 0, odd_path_sequence(2, 0));
  CHECK(run0.all_forced());
  CHECK(run0.trace == std::vector<Vertex>{0, 3, 1, 4, 2});
}

TEST_CASE("qualifies_centered") {
  CHECK(qualifies_centered(make_spider(0, {2, 2, 2}), 2));   // a leg tip
  CHECK_FALSE(qualifies_centered(make_path(4), 0));          // bi-centered
  CHECK_FALSE(qualifies_centered(make_path(4), 1));
  Graph spider = make_spider(4, {5, 5});
  CHECK_FALSE(qualifies_centered(spider, 0));  // a sits off every longest path
  CHECK(qualifies_centered(spider, 4));        // the center itself is on one
  CHECK_THROWS_AS(qualifies_centered(make_cycle(4), 0), std::invalid_argument);
}

TEST_CASE("centered tree sequences on spiders and paths") {
  Graph s222 = make_spider(0, {2, 2, 2});
  auto seq = centered_tree_sequence(s222, 2);
  CHECK(seq == std::vector<int>{1, 3, 1, 3, 2});
  CHECK(score(s222, 2, seq).score == 5);

  Graph s333 = make_spider(0, {3, 3, 3});
  auto seq3 = centered_tree_sequence(s333, 3);
  CHECK(seq3 == std::vector<int>{1, 5, 1, 5, 2, 4, 2, 4, 3});
  CHECK(score(s333, 3, seq3).score == 7);

  auto seqp5 = centered_tree_sequence(make_path(5), 0);
  CHECK(seqp5 == std::vector<int>{1, 3, 1, 3, 2});
  CHECK(score(make_path(5), 0, seqp5).score == 5);
  CHECK(GameSolver(make_path(5)).solve(0) == 5);

  CHECK_THROWS_AS(centered_tree_sequence(make_path(4), 0), std::invalid_argument);
}

TEST_CASE("the eccentricity prefix preserves the optimal score") {
  // Starts on a longest path that are not endpoints of one.
  Graph s333 = make_spider(0, {3, 3, 3});
  for (Vertex v : {0, 1, 2}) {  // center, leg depth 1, leg depth 2
    auto seq = centered_tree_sequence(s333, v);
    DistanceMatrix dm(s333);
    if (dm.ecc(v) < dm.diameter()) CHECK(seq.front() == dm.ecc(v));
    auto sc = score(s333, v, seq);
    CHECK(sc.valid());
    CHECK(sc.score == 7);
    CHECK(GameSolver(s333).solve(v) == 7);
  }
}

TEST_CASE("small-diameter qualifying trees fall back to search") {
  Graph star = make_star(3);  // diameter 2, unique center
  for (Vertex v = 0; v < star.n(); ++v) {
    REQUIRE(qualifies_centered(star, v));
    auto seq = centered_tree_sequence(star, v);
    CHECK(score(star, v, seq).score == GameSolver(star).solve(v));
  }
}

TEST_CASE("forced runs") {
  auto run = forced_run(make_path(4), 0, {1, 2, 1});
  CHECK(run.trace == std::vector<Vertex>{0, 1, 3, 2});
  CHECK(run.all_forced());
  CHECK_FALSE(run.first_unforced().has_value());

  auto branchy = forced_run(make_path(5), 2, {2, 1});
  CHECK_FALSE(branchy.forced[0]);
  CHECK(*branchy.first_unforced() == 1);
  CHECK(branchy.trace[1] == 0);  // smallest-index reply by default

  auto steered = forced_run(make_path(5), 2, {2, 1}, {4});
  CHECK(steered.trace[1] == 4);
  CHECK_THROWS_AS(forced_run(make_path(5), 2, {2}, {1}), std::invalid_argument);

  auto illegal = forced_run(make_path(4), 0, {1, 9});
  CHECK(*illegal.invalid_step == 2);
  CHECK(illegal.trace == std::vector<Vertex>{0, 1});
}

TEST_CASE("perfect-sequence search") {
  auto p4 = search_perfect_sequence(make_path(4), 0, 5);
  REQUIRE(p4.has_value());
  CHECK(*p4 == std::vector<int>{1, 2, 1});

  auto p2 = search_perfect_sequence(make_path(2), 0, 1);
  REQUIRE(p2.has_value());
  CHECK(*p2 == std::vector<int>{1});

  CHECK_FALSE(search_perfect_sequence(make_path(4), 0, 2).has_value());
  CHECK_THROWS_AS(search_perfect_sequence(make_path(4), 0, 99), std::invalid_argument);
}

TEST_CASE("nonadaptive never beats the adaptive optimum") {
  std::mt19937 rng(53);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_connected_graph(n, rng);
    GameSolver solver(g, SolverOptions{n});
    DistanceMatrix dm(g);
    Vertex start = static_cast<Vertex>(rng() % n);
    int fd = solver.solve(start);
    std::uniform_int_distribution<int> dist_pick(1, std::max(1, dm.diameter()));
    std::uniform_int_distribution<int> len_pick(0, 6);
    for (int s = 0; s < 15; ++s) {
      std::vector<int> seq(len_pick(rng));
      for (int& d : seq) d = dist_pick(rng);
      auto sc = score(g, start, seq, n);
      if (!sc.valid()) continue;
      CHECK(sc.score <= fd);
      // Weak monotonicity under prefix extension.
      std::vector<int> prefix(seq.begin(), seq.begin() + seq.size() / 2);
      auto sp = score(g, start, prefix, n);
      REQUIRE(sp.valid());  // prefixes of valid sequences stay valid
      CHECK(sc.score >= sp.score);
    }
  }
}
