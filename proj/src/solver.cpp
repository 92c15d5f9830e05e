#include "exdir/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "exdir/errors.hpp"

namespace exdir {

namespace {

std::vector<std::vector<std::vector<Vertex>>> build_spheres(const DistanceMatrix& dm) {
  int n = dm.n();
  std::vector<std::vector<std::vector<Vertex>>> spheres(n);
  for (Vertex v = 0; v < n; ++v) {
    spheres[v].resize(dm.ecc(v) + 1);
    for (Vertex w = 0; w < n; ++w) spheres[v][dm.dist(v, w)].push_back(w);
  }
  return spheres;
}

}  // namespace

GameSolver::GameSolver(Graph g, SolverOptions opt)
    : g_(std::move(g)), dm_(g_), n_(g_.n()), opt_(opt) {
  if (opt_.cap > kMaxSolverVertices) opt_.cap = kMaxSolverVertices;
  if (n_ > opt_.cap)
    throw CapError("solver cap exceeded: n=" + std::to_string(n_) + " > cap " +
                   std::to_string(opt_.cap) + " (value store needs about " +
                   std::to_string(memory_estimate(n_) >> 20) + " MiB; raise the cap to allow)");
  spheres_ = build_spheres(dm_);
  values_.assign(static_cast<std::size_t>(n_) << n_, 0);
  solved_.assign(((std::size_t(1) << n_) + 63) / 64, 0);
  lmi_.assign(n_, -1);
}

GameState GameSolver::start_state(Vertex start) const {
  if (start < 0 || start >= n_) throw std::invalid_argument("bad start vertex");
  return GameState{VertexSet::of(n_, {start}), start};
}

int GameSolver::solve(Vertex start) {
  if (start < 0 || start >= n_) throw std::invalid_argument("bad start vertex");
  return value_raw(1u << start, start);
}

void GameSolver::check_state(const VertexSet& visited, Vertex token) const {
  if (visited.universe() != n_) throw std::invalid_argument("visited set universe mismatch");
  if (!visited.contains(token)) throw std::invalid_argument("token must be a visited vertex");
}

int GameSolver::value(const VertexSet& visited, Vertex token) {
  check_state(visited, token);
  return value_raw(visited.bits(), token);
}

int GameSolver::value_raw(std::uint32_t mask, Vertex token) {
  ensure_layer(mask);
  return values_[state_index(mask, token)];
}

bool GameSolver::game_over(const VertexSet& visited, Vertex token) {
  return value(visited, token) == visited.size();
}

void GameSolver::ensure_layer(std::uint32_t mask) {
  if (layer_solved(mask)) return;
  // Exit layers first; afterwards the in-layer fixed point only reads
  // already-final exit values.
  for (std::uint32_t b = mask; b != 0; b &= b - 1) {
    Vertex u = std::countr_zero(b);
    for (int d = 1; d <= dm_.ecc(u); ++d)
      for (Vertex w : spheres_[u][d])
        if (!((mask >> w) & 1u)) {
          std::uint32_t next = mask | (1u << w);
          if (!layer_solved(next)) ensure_layer(next);
        }
  }
  iterate_layer(mask, nullptr);
  solved_[mask >> 6] |= std::uint64_t(1) << (mask & 63);
  ++solved_count_;
}

void GameSolver::iterate_layer(std::uint32_t mask, LayerHistories* capture) {
  lm_.clear();
  for (std::uint32_t b = mask; b != 0; b &= b - 1) {
    Vertex u = std::countr_zero(b);
    lmi_[u] = static_cast<int>(lm_.size());
    lm_.push_back(u);
  }
  const int k = static_cast<int>(lm_.size());
  const int sweep_bound = k * (n_ - k) + 1;

  lopt_.clear();
  lbranch_.clear();
  for (Vertex u : lm_) {
    for (int d = 1; d <= dm_.ecc(u); ++d) {
      MoveOption opt{std::numeric_limits<std::int8_t>::max(),
                     static_cast<int>(lbranch_.size()), 0};
      for (Vertex w : spheres_[u][d]) {
        if ((mask >> w) & 1u) {
          lbranch_.push_back(static_cast<std::uint8_t>(lmi_[w]));
        } else {
          std::int8_t ev = values_[state_index(mask | (1u << w), w)];
          opt.min_exit = std::min(opt.min_exit, ev);
        }
      }
      opt.end = static_cast<int>(lbranch_.size());
      lopt_.push_back(opt);
    }
  }

  if (capture) capture->points.assign(k, {});
  lcur_.assign(k, static_cast<std::int8_t>(k));
  lnext_.resize(k);
  int sweeps = 0;
  while (true) {
    ++sweeps;
    bool changed = false;
    std::size_t oi = 0;
    for (int mi = 0; mi < k; ++mi) {
      Vertex u = lm_[mi];
      int best = k;  // no legal call (only the 1-vertex graph) confines
      for (int d = 1; d <= dm_.ecc(u); ++d) {
        const MoveOption& o = lopt_[oi++];
        int worst = o.min_exit;
        for (int bi = o.begin; bi < o.end; ++bi)
          worst = std::min<int>(worst, lcur_[lbranch_[bi]]);
        best = std::max(best, worst);
      }
      lnext_[mi] = static_cast<std::int8_t>(best);
      if (lnext_[mi] != lcur_[mi]) {
        changed = true;
        if (capture) capture->points[mi].emplace_back(sweeps, best);
      }
    }
    std::swap(lcur_, lnext_);
    if (!changed) break;
    if (sweeps > sweep_bound)
      throw std::logic_error("value iteration exceeded its sweep bound");
  }
  max_sweeps_ = std::max(max_sweeps_, sweeps);

  if (!capture)
    for (int mi = 0; mi < k; ++mi) values_[state_index(mask, lm_[mi])] = lcur_[mi];
}

int GameSolver::rank_of(const std::vector<std::pair<int, int>>& points, int threshold) {
  for (auto [sweep, val] : points)
    if (val >= threshold) return sweep;
  return std::numeric_limits<int>::max();
}

int GameSolver::explorer_move(const VertexSet& visited, Vertex token) {
  check_state(visited, token);
  if (dm_.ecc(token) == 0) throw std::invalid_argument("no legal distance exists");
  std::uint32_t mask = visited.bits();
  int vstar = value_raw(mask, token);
  int k = visited.size();
  if (vstar == k) return 1;  // game over; every call is equally futile

  LayerHistories hist;
  iterate_layer(mask, &hist);  // recompute with increase points
  int own_rank = rank_of(hist.points[lmi_[token]], vstar);
  for (int d = 1; d <= dm_.ecc(token); ++d) {
    bool ok = true;
    for (Vertex w : spheres_[token][d]) {
      if ((mask >> w) & 1u) {
        if (rank_of(hist.points[lmi_[w]], vstar) > own_rank - 1) {
          ok = false;
          break;
        }
      } else if (values_[state_index(mask | (1u << w), w)] < vstar) {
        ok = false;
        break;
      }
    }
    if (ok) return d;
  }
  throw std::logic_error("no value-preserving progress move found");
}

Vertex GameSolver::director_move(const VertexSet& visited, Vertex token, int distance) {
  check_state(visited, token);
  if (distance < 1 || distance > dm_.ecc(token))
    throw std::invalid_argument("illegal distance " + std::to_string(distance) +
                                " (legal: 1.." + std::to_string(dm_.ecc(token)) + ")");
  std::uint32_t mask = visited.bits();
  ensure_layer(mask);
  // Among the value-minimizing replies, prefer unvisited vertices, then the
  // smallest index.  Ties carry equal game value either way; preferring
  // fresh vertices keeps optimal traces free of futile revisits.
  int best = std::numeric_limits<int>::max();
  Vertex best_w = -1;
  bool best_fresh = false;
  for (Vertex w : spheres_[token][distance]) {
    bool fresh = !((mask >> w) & 1u);
    int val = fresh ? values_[state_index(mask | (1u << w), w)]
                    : values_[state_index(mask, w)];
    if (val < best || (val == best && fresh && !best_fresh)) {
      best = val;
      best_w = w;
      best_fresh = fresh;
    }
  }
  return best_w;
}

std::vector<TraceStep> GameSolver::optimal_trace(Vertex start) {
  if (start < 0 || start >= n_) throw std::invalid_argument("bad start vertex");
  VertexSet visited = VertexSet::of(n_, {start});
  Vertex token = start;
  std::vector<TraceStep> trace;
  const int guard_max = n_ * (n_ * n_ / 4 + 2) + 8;
  int guard = 0;
  while (value(visited, token) > visited.size()) {
    int d = explorer_move(visited, token);
    Vertex w = director_move(visited, token, d);
    visited = visited.with(w);
    token = w;
    trace.push_back({d, w, visited.size()});
    if (++guard > guard_max) throw std::logic_error("optimal trace failed to terminate");
  }
  return trace;
}

PlayStepResult play_step(GameSolver& solver, const GameState& state,
                         std::optional<int> distance, std::optional<Vertex> reply) {
  const DistanceMatrix& dm = solver.distances();
  int d;
  if (distance) {
    d = *distance;
    if (d < 1 || d > dm.ecc(state.token))
      throw std::invalid_argument("illegal distance " + std::to_string(d) + " (legal: 1.." +
                                  std::to_string(dm.ecc(state.token)) + ")");
  } else {
    d = solver.explorer_move(state.visited, state.token);
  }
  Vertex w;
  if (reply) {
    w = *reply;
    if (w < 0 || w >= dm.n() || dm.dist(state.token, w) != d)
      throw std::invalid_argument("illegal reply: vertex " + std::to_string(w) +
                                  " is not at distance " + std::to_string(d));
  } else {
    w = solver.director_move(state.visited, state.token, d);
  }
  PlayStepResult out;
  out.state = GameState{state.visited.with(w), w};
  out.distance = d;
  out.reply = w;
  out.value = solver.value(out.state.visited, out.state.token);
  out.over = out.value == out.state.visited.size();
  return out;
}

BruteOracle::BruteOracle(const Graph& g) : dm_(g), n_(g.n()) {
  if (n_ > 7) throw CapError("brute_oracle: n <= 7 required");
  max_budget_ = n_ * n_ / 4 + 1;
  spheres_ = build_spheres(dm_);
  memo_.assign((static_cast<std::size_t>(1) << n_) * n_ * (max_budget_ + 1), -1);
}

int BruteOracle::value(Vertex start) {
  if (start < 0 || start >= n_) throw std::invalid_argument("bad start vertex");
  return rec(1u << start, start, entry_budget(1));
}

int BruteOracle::rec(std::uint32_t mask, Vertex token, int budget) {
  int count = std::popcount(mask);
  if (budget == 0) return count;
  std::size_t key = (static_cast<std::size_t>(mask) * n_ + token) * (max_budget_ + 1) + budget;
  if (memo_[key] >= 0) return memo_[key];

  int best = count;
  for (int d = 1; d <= dm_.ecc(token); ++d) {
    int worst = std::numeric_limits<int>::max();
    for (Vertex w : spheres_[token][d]) {
      int val;
      if ((mask >> w) & 1u) {
        val = rec(mask, w, budget - 1);
      } else {
        std::uint32_t next = mask | (1u << w);
        val = rec(next, w, entry_budget(std::popcount(next)));
      }
      worst = std::min(worst, val);
      if (worst <= best) break;  // this call cannot beat the best so far
    }
    best = std::max(best, worst);
  }
  memo_[key] = static_cast<std::int8_t>(best);
  return best;
}

int brute_oracle(const Graph& g, Vertex start) { return BruteOracle(g).value(start); }

}  // namespace exdir
