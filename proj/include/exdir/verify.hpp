#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "exdir/graph.hpp"

namespace exdir {

struct CaseResult {
  std::string group;  // stable machine tag, e.g. "bridge", "oracle"
  std::string name;
  bool pass = false;
  std::string detail;  // expected vs actual on failure, brief note otherwise
};

/// One theorem-check suite run.  Besides its own cases, a suite counts two
/// cross-cutting properties over every (graph, start) it solves: the final
/// visited set of the optimal trace contains a nonempty closed core, and
/// radius+1 <= f_d <= |smallest closed set containing the start|.
struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  long trace_checks = 0, trace_ok = 0;
  long sandwich_checks = 0, sandwich_ok = 0;

  bool all_passed() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return trace_checks == trace_ok && sandwich_checks == sandwich_ok;
  }
  int passed() const {
    int k = 0;
    for (const auto& c : cases) k += c.pass;
    return k;
  }
  bool group_passed(const std::string& group) const {
    bool any = false;
    for (const auto& c : cases)
      if (c.group == group) {
        any = true;
        if (!c.pass) return false;
      }
    return any;
  }
};

struct VerifyOptions {
  int max_n = 0;           // 0: suite default (cycles 12, trees 10, paths k<=8)
  int count = 0;           // 0: suite default (trees 200, sampled 6-vertex 300)
  std::uint32_t seed = 42;
  int workers = 1;         // case-level fan-out; report order is deterministic
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt = {});

SuiteResult run_cycles(const VerifyOptions& opt = {});
SuiteResult run_trees(const VerifyOptions& opt = {});
SuiteResult run_lattices(const VerifyOptions& opt = {});
SuiteResult run_closed(const VerifyOptions& opt = {});
SuiteResult run_paths(const VerifyOptions& opt = {});
SuiteResult run_centered(const VerifyOptions& opt = {});
SuiteResult run_counterexample(const VerifyOptions& opt = {});
SuiteResult run_lollipop(const VerifyOptions& opt = {});

/// All labeled connected graphs on n vertices (n <= 7 enumerable at desk
/// scale; n = 6 yields 26704).
std::vector<Graph> all_connected_graphs(int n);

/// Uniform edge probability 1/2, resampled until connected.
Graph random_connected_graph(int n, std::mt19937& rng);

}  // namespace exdir
