#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exdir/graph.hpp"
#include "exdir/solver.hpp"

namespace exdir {

// Strategy sequences serialize as comma separated distances, e.g. "1,3,2,3,2".
std::vector<int> parse_sequence(const std::string& text);
std::string sequence_to_string(const std::vector<int>& seq);

struct ScoreResult {
  int score = 0;
  // 1-based index of the earliest step at which some Director line makes
  // the declared distance illegal (exceeding ecc of the token position).
  // Such sequences are rejected rather than scored.
  std::optional<int> invalid_step;
  bool valid() const { return !invalid_step.has_value(); }
};

/// f_d^S(G, v): the minimum over all Director reply lines of the final
/// visited count when the Explorer is committed to the sequence.
/// Exhaustive minimax over (position-in-sequence, token, visited) states.
ScoreResult score(const Graph& g, Vertex start, const std::vector<int>& seq,
                  int cap = kDefaultSolverCap);

/// Path on 2k vertices, start at endpoint v_0: [1] then (k, k-1) repeated
/// k-1 times.  Every step is forced and the run visits each vertex once.
std::vector<int> even_path_sequence(int k);

/// Path on 2k+1 vertices v_0..v_2k, start at v_x with 0 <= x <= k (mirror
/// the labeling first for x > k).  Two phases of alternating k+1 and k
/// calls with a k-x pivot between them; from the center (x = k) the first
/// call is fixed to k, giving two symmetric replies, and the final step is
/// omitted.  Length 2k.
std::vector<int> odd_path_sequence(int k, int x);

/// True iff g is a tree with a unique center c, every component of g - c
/// contains at most one endpoint of a longest path, and v lies on some
/// longest path.
bool qualifies_centered(const Graph& g, Vertex v);

/// Optimal nonadaptive strategy for qualifying centered trees: with
/// L = diameter and R = radius, the blocks (i, L-i, i, L-i) for
/// i = 1..R-1 followed by R, prefixed with ecc(v) when v lies on a longest
/// path without being an endpoint of one.  Scores L+1 from endpoint
/// starts.  Diameters <= 3 fall back to search_perfect_sequence.
std::vector<int> centered_tree_sequence(const Graph& g, Vertex v, int cap = kDefaultSolverCap);

struct ForcedRun {
  std::vector<Vertex> trace;        // visited order, including the start
  std::vector<bool> forced;         // per executed step: reply set was a singleton
  std::optional<int> invalid_step;  // 1-based; execution stops on an illegal call

  bool all_forced() const {
    for (bool f : forced)
      if (!f) return false;
    return true;
  }
  std::optional<int> first_unforced() const {
    for (size_t i = 0; i < forced.size(); ++i)
      if (!forced[i]) return static_cast<int>(i) + 1;
    return std::nullopt;
  }
};

/// Executes the sequence, recording the Director's reply freedom at every
/// step.  Non-forced steps follow the smallest-index reply unless a choice
/// list supplies overrides (consumed in order); this lets tests drive each
/// branch of a near-forced run.
ForcedRun forced_run(const Graph& g, Vertex start, const std::vector<int>& seq,
                     const std::vector<Vertex>& choices = {});

/// Smallest-length (then lexicographically smallest) sequence whose score
/// equals solve(g, start), or nullopt when none of length <= max_len
/// achieves it.  Enumeration with sound pruning: a prefix is dropped when
/// some line already made an illegal call or when even one new visit per
/// remaining step cannot lift the worst line to the target.
std::optional<std::vector<int>> search_perfect_sequence(const Graph& g, Vertex start,
                                                        int max_len = 8,
                                                        int cap = kDefaultSolverCap);

}  // namespace exdir
