#include "exdir/nonadaptive.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include "exdir/closed.hpp"
#include "exdir/distance.hpp"
#include "exdir/errors.hpp"

namespace exdir {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_sequence(const std::vector<int>& seq) {
  for (int d : seq) require(d >= 1, "sequence entries must be positive distances");
}

// Minimax evaluator for a fixed sequence.  Results are encoded as
// score >= 1 for valid lines and -(step) for the earliest illegal call.
struct Scorer {
  const DistanceMatrix& dm;
  const std::vector<int>& seq;
  int n;
  std::unordered_map<std::uint64_t, int> memo;

  int run(Vertex start) { return rec(0, 1u << start, start); }

  int rec(size_t idx, std::uint32_t mask, Vertex token) {
    if (idx == seq.size()) return std::popcount(mask);
    std::uint64_t key = (static_cast<std::uint64_t>(idx) << 37) |
                        (static_cast<std::uint64_t>(mask) << 5) | static_cast<unsigned>(token);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int d = seq[idx];
    int result;
    if (d > dm.ecc(token)) {
      result = -static_cast<int>(idx) - 1;
    } else {
      int best = std::numeric_limits<int>::max();
      int earliest_invalid = 0;
      for (Vertex w = 0; w < n; ++w) {
        if (dm.dist(token, w) != d) continue;
        int r = rec(idx + 1, mask | (1u << w), w);
        if (r < 0)
          earliest_invalid = earliest_invalid == 0 ? r : std::max(earliest_invalid, r);
        else
          best = std::min(best, r);
      }
      result = earliest_invalid != 0 ? earliest_invalid : best;
    }
    memo.emplace(key, result);
    return result;
  }
};

}  // namespace

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> seq;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    std::string item = text.substr(pos, next == std::string::npos ? next : next - pos);
    size_t used = 0;
    int d;
    try {
      d = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad sequence entry: '" + item + "'");
    }
    if (used != item.size() || d < 1) throw ParseError("bad sequence entry: '" + item + "'");
    seq.push_back(d);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return seq;
}

std::string sequence_to_string(const std::vector<int>& seq) {
  std::string out;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(seq[i]);
  }
  return out;
}

ScoreResult score(const Graph& g, Vertex start, const std::vector<int>& seq, int cap) {
  require(start >= 0 && start < g.n(), "score: bad start vertex");
  check_sequence(seq);
  if (g.n() > cap)
    throw CapError("score: n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
  DistanceMatrix dm(g);
  Scorer scorer{dm, seq, g.n(), {}};
  int r = scorer.run(start);
  if (r < 0) return {0, -r};
  return {r, std::nullopt};
}

std::vector<int> even_path_sequence(int k) {
  require(k >= 1, "even_path_sequence: k >= 1 required");
  std::vector<int> seq = {1};
  for (int i = 0; i < k - 1; ++i) {
    seq.push_back(k);
    seq.push_back(k - 1);
  }
  return seq;
}

std::vector<int> odd_path_sequence(int k, int x) {
  require(k >= 1, "odd_path_sequence: k >= 1 required");
  require(x >= 0 && x <= k, "odd_path_sequence: 0 <= x <= k required");
  if (x == k) {
    // Center start: fix the first call to k (two symmetric replies), then
    // run the endpoint strategy without its final step.
    std::vector<int> seq = odd_path_sequence(k, 0);
    seq.pop_back();
    seq.insert(seq.begin(), k);
    return seq;
  }
  std::vector<int> seq;
  for (int i = 0; i < k - 1 - x; ++i) {
    seq.push_back(k + 1);
    seq.push_back(k);
  }
  seq.push_back(k + 1);
  seq.push_back(k - x);
  if (x >= 1) {
    for (int t = 0; t < 2 * x - 1; ++t) seq.push_back(t % 2 == 0 ? k + 1 : k);
    seq.push_back(k);
  }
  return seq;
}

bool qualifies_centered(const Graph& g, Vertex v) {
  require(g.is_tree(), "qualifies_centered: input is not a tree");
  require(v >= 0 && v < g.n(), "qualifies_centered: bad vertex");
  DistanceMatrix dm(g);
  if (dm.centers().size() != 1) return false;
  if (!dm.on_diameter_path(v)) return false;
  if (g.n() == 1) return true;
  Vertex c = dm.centers().vertices()[0];

  // Count longest-path endpoints (ecc == diameter) per component of g - c.
  std::vector<int> comp(g.n(), -1);
  comp[c] = -2;
  int num_comps = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<Vertex> stack = {s};
    comp[s] = num_comps;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (comp[w] == -1) {
          comp[w] = num_comps;
          stack.push_back(w);
        }
    }
    ++num_comps;
  }
  std::vector<int> endpoints(num_comps, 0);
  for (Vertex u = 0; u < g.n(); ++u)
    if (u != c && dm.ecc(u) == dm.diameter() && ++endpoints[comp[u]] > 1) return false;
  return true;
}

std::vector<int> centered_tree_sequence(const Graph& g, Vertex v, int cap) {
  require(qualifies_centered(g, v), "centered_tree_sequence: start does not qualify");
  DistanceMatrix dm(g);
  int diam = dm.diameter(), rad = dm.radius();
  if (diam <= 3) {
    auto found = search_perfect_sequence(g, v, 8, cap);
    if (!found) throw std::runtime_error("no short perfect sequence for small-diameter tree");
    return *found;
  }
  std::vector<int> seq;
  if (dm.ecc(v) < diam) seq.push_back(dm.ecc(v));  // reach an endpoint first
  for (int i = 1; i <= rad - 1; ++i)
    for (int rep = 0; rep < 2; ++rep) {
      seq.push_back(i);
      seq.push_back(diam - i);
    }
  seq.push_back(rad);
  return seq;
}

ForcedRun forced_run(const Graph& g, Vertex start, const std::vector<int>& seq,
                     const std::vector<Vertex>& choices) {
  require(start >= 0 && start < g.n(), "forced_run: bad start vertex");
  check_sequence(seq);
  DistanceMatrix dm(g);
  ForcedRun out;
  out.trace.push_back(start);
  Vertex token = start;
  size_t choice_i = 0;
  for (size_t i = 0; i < seq.size(); ++i) {
    int d = seq[i];
    if (d > dm.ecc(token)) {
      out.invalid_step = static_cast<int>(i) + 1;
      break;
    }
    auto replies = dm.sphere(token, d).vertices();
    bool is_forced = replies.size() == 1;
    Vertex w = replies.front();
    if (!is_forced && choice_i < choices.size()) {
      w = choices[choice_i++];
      require(std::find(replies.begin(), replies.end(), w) != replies.end(),
              "forced_run: override is not a legal reply");
    }
    out.forced.push_back(is_forced);
    out.trace.push_back(w);
    token = w;
  }
  return out;
}

std::optional<std::vector<int>> search_perfect_sequence(const Graph& g, Vertex start,
                                                        int max_len, int cap) {
  require(start >= 0 && start < g.n(), "search_perfect_sequence: bad start vertex");
  require(max_len >= 0 && max_len <= 16, "search_perfect_sequence: max_len in 0..16 required");
  GameSolver solver(g, {cap});
  const int target = solver.solve(start);
  const DistanceMatrix& dm = solver.distances();
  const int n = g.n();
  const int max_d = dm.diameter();

  using State = std::pair<std::uint32_t, Vertex>;
  std::vector<std::vector<State>> level(max_len + 1);
  level[0] = {{1u << start, start}};
  std::vector<int> seq;

  // Depth-first over sequences of the current length, distances ascending,
  // so the first hit is the lexicographically smallest.
  auto dfs = [&](auto&& self, int depth, int len) -> bool {
    if (depth == len) {
      int worst = std::numeric_limits<int>::max();
      for (const auto& [mask, token] : level[depth])
        worst = std::min(worst, std::popcount(mask));
      return worst == target;
    }
    for (int d = 1; d <= max_d; ++d) {
      bool legal = true;
      auto& next = level[depth + 1];
      next.clear();
      for (const auto& [mask, token] : level[depth]) {
        if (d > dm.ecc(token)) {
          legal = false;  // some line makes this call illegal: reject
          break;
        }
        for (Vertex w = 0; w < n; ++w)
          if (dm.dist(token, w) == d) next.emplace_back(mask | (1u << w), w);
      }
      if (!legal) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      int worst = std::numeric_limits<int>::max();
      for (const auto& [mask, token] : next) worst = std::min(worst, std::popcount(mask));
      // Even one new visit per remaining step cannot lift the worst line.
      if (worst + (len - depth - 1) < target) continue;
      seq.push_back(d);
      if (self(self, depth + 1, len)) return true;
      seq.pop_back();
    }
    return false;
  };

  for (int len = 0; len <= max_len; ++len) {
    seq.clear();
    if (dfs(dfs, 0, len)) return seq;
  }
  return std::nullopt;
}

}  // namespace exdir
