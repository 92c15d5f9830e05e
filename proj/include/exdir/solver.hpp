#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exdir/distance.hpp"
#include "exdir/graph.hpp"
#include "exdir/vertex_set.hpp"

namespace exdir {

inline constexpr int kDefaultSolverCap = 14;
inline constexpr int kMaxSolverVertices = 24;

struct SolverOptions {
  // Raising the cap doubles the value store per extra vertex
  // (roughly n * 2^n bytes; n = 20 is ~21 MiB, n = 24 is ~403 MiB).
  int cap = kDefaultSolverCap;
};

struct GameState {
  VertexSet visited;  // always contains token
  Vertex token = 0;
};

struct TraceStep {
  int distance = 0;       // Explorer's call
  Vertex vertex = 0;      // Director's reply
  int visited_count = 0;  // after the move
};

/// Exact solver for the Explorer-Director game.
///
/// States sharing a visited set form a layer; play leaves a layer exactly
/// when a new vertex is visited, so layer values depend only on strictly
/// larger visited sets.  Within a layer the value is the least fixed point,
/// above the confinement payoff |U|, of
///
///   T(val)(u) = max over d in 1..ecc(u) of
///               min over w in sphere(u,d) of
///               (w in U ? val(w) : value(U+w, w))
///
/// iterated synchronously until stable.  Any play confined to U forever
/// yields |U| visited vertices and every exit yields at least |U|+1, which
/// is why the maximizing Explorer's value is the least fixed point above
/// the confinement payoff.
///
/// Layers are solved lazily and memoized; only visited sets containing the
/// queried start vertex are ever materialized.  One solver instance may be
/// queried for many starts and shares all solved layers between them.
/// A single instance is not thread safe; distinct instances share nothing.
class GameSolver {
 public:
  explicit GameSolver(Graph g, SolverOptions opt = {});

  const Graph& graph() const { return g_; }
  const DistanceMatrix& distances() const { return dm_; }

  /// f_d(G, start).
  int solve(Vertex start);

  /// Final visited count under optimal play from an arbitrary state.
  int value(const VertexSet& visited, Vertex token);

  /// True when the Explorer can no longer force a new visit
  /// (equivalently, the token sits in the peel core of the visited set).
  bool game_over(const VertexSet& visited, Vertex token);

  /// Optimal Explorer call.  Among the distances that preserve the game
  /// value, returns the smallest one that also makes progress in the
  /// fixed-point sense, so repeated play is guaranteed to reach an exit.
  int explorer_move(const VertexSet& visited, Vertex token);

  /// Optimal Director reply: smallest vertex index minimizing the value.
  Vertex director_move(const VertexSet& visited, Vertex token, int distance);

  /// Both players follow the policy until no forced progress remains.
  /// The final visited count equals solve(start).
  std::vector<TraceStep> optimal_trace(Vertex start);

  GameState start_state(Vertex start) const;

  /// Diagnostics: largest sweep count any layer needed; always within
  /// |U|*(n-|U|)+1 for the layer.
  int max_sweeps_observed() const { return max_sweeps_; }
  std::int64_t solved_layer_count() const { return solved_count_; }

  /// Bytes of value storage for an n-vertex instance.
  static std::size_t memory_estimate(int n) {
    return (static_cast<std::size_t>(n) << n) + (std::size_t(1) << n) / 8;
  }

 private:
  struct LayerHistories {
    // Per member: the (sweep, value) increase points of the iteration.
    std::vector<std::vector<std::pair<int, int>>> points;
  };

  std::size_t state_index(std::uint32_t mask, Vertex token) const {
    return static_cast<std::size_t>(mask) * n_ + token;
  }
  bool layer_solved(std::uint32_t mask) const {
    return (solved_[mask >> 6] >> (mask & 63)) & 1u;
  }
  void ensure_layer(std::uint32_t mask);
  void iterate_layer(std::uint32_t mask, LayerHistories* capture);
  int value_raw(std::uint32_t mask, Vertex token);
  void check_state(const VertexSet& visited, Vertex token) const;
  static int rank_of(const std::vector<std::pair<int, int>>& points, int threshold);

  Graph g_;
  DistanceMatrix dm_;
  int n_;
  SolverOptions opt_;
  std::vector<std::vector<std::vector<Vertex>>> spheres_;  // [v][d], ascending
  std::vector<std::int8_t> values_;                        // state_index -> value
  std::vector<std::uint64_t> solved_;                      // bit per visited mask
  std::int64_t solved_count_ = 0;
  int max_sweeps_ = 0;

  // Scratch reused by iterate_layer (never live across recursion).
  std::vector<Vertex> lm_;
  std::vector<int> lmi_;
  struct MoveOption {
    std::int8_t min_exit;
    int begin, end;
  };
  std::vector<MoveOption> lopt_;
  std::vector<std::uint8_t> lbranch_;
  std::vector<std::int8_t> lcur_, lnext_;
};

struct PlayStepResult {
  GameState state;
  int distance = 0;
  Vertex reply = 0;
  bool over = false;  // no forced progress remains from the new state
  int value = 0;      // game value of the new state
};

/// One engine step.  A missing distance or reply is substituted by the
/// solver's policy.  Illegal explicit moves throw std::invalid_argument.
/// Moves played after the game is over are legal but cannot raise the
/// score; the returned flag lets callers mark them as non-scoring.
PlayStepResult play_step(GameSolver& solver, const GameState& state,
                         std::optional<int> distance, std::optional<Vertex> reply);

/// Independent test oracle: depth-limited minimax over the explicit game
/// tree.  Within a layer of size k the horizon is capped at k*(n-k)+1
/// moves before the value defaults to k (the Explorer either forces an
/// exit within the bound or never will).  Only for n <= 7.
class BruteOracle {
 public:
  explicit BruteOracle(const Graph& g);
  int value(Vertex start);

 private:
  int rec(std::uint32_t mask, Vertex token, int budget);
  int entry_budget(int layer_size) const { return layer_size * (n_ - layer_size) + 1; }

  DistanceMatrix dm_;
  int n_;
  int max_budget_;
  std::vector<std::vector<std::vector<Vertex>>> spheres_;
  std::vector<std::int8_t> memo_;
};

int brute_oracle(const Graph& g, Vertex start);

}  // namespace exdir
