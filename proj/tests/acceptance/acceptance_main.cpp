// Acceptance suite: the theorem checks the engine must pass, one line per
// criterion.  Exit code 0 only when every criterion holds.

#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "exdir/formulas.hpp"
#include "exdir/verify.hpp"

using namespace exdir;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool pass;
  std::string detail;
};

std::string counts(const SuiteResult& s, const std::string& group) {
  int total = 0, ok = 0;
  for (const auto& c : s.cases)
    if (group.empty() || c.group == group) {
      ++total;
      ok += c.pass;
    }
  return std::to_string(ok) + "/" + std::to_string(total) + " cases";
}

std::string first_failure(const SuiteResult& s, const std::string& group) {
  for (const auto& c : s.cases)
    if ((group.empty() || c.group == group) && !c.pass) return c.name + ": " + c.detail;
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions opt;
  opt.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) opt.workers = std::atoi(argv[++i]);
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      opt.seed = static_cast<std::uint32_t>(std::strtoul(argv[++i], nullptr, 10));
  }

  std::printf("running acceptance suites (workers=%d, seed=%u)...\n", opt.workers, opt.seed);
  SuiteResult cycles = run_cycles(opt);
  SuiteResult trees = run_trees(opt);
  SuiteResult lattices = run_lattices(opt);
  SuiteResult closed = run_closed(opt);
  SuiteResult paths = run_paths(opt);
  SuiteResult centered = run_centered(opt);
  SuiteResult counterexample = run_counterexample(opt);
  SuiteResult lollipop = run_lollipop(opt);

  std::vector<Criterion> criteria;

  // 1. Cycle formula, frozen expected values.
  {
    const std::map<int, int> frozen = {{3, 2}, {4, 4}, {5, 4},  {6, 4},  {7, 6},
                                       {8, 8}, {9, 6}, {10, 8}, {11, 10}, {12, 8}};
    bool table_ok = true;
    for (auto [n, v] : frozen) table_ok = table_ok && f_star_cycle(n) == v;
    bool pass = table_ok && cycles.group_passed("cycles");
    criteria.push_back({1, "cycle values match the closed form, n = 3..12", pass,
                        table_ok ? counts(cycles, "cycles") : "frozen value table mismatch"});
  }

  // 2. Tree theorem on seeded random trees, every start.
  criteria.push_back({2, "random trees: solve = diameter + ell + 1 at every start",
                      trees.group_passed("trees"),
                      trees.group_passed("trees") ? counts(trees, "trees")
                                                  : first_failure(trees, "trees")});

  // 3. Lattice values.
  criteria.push_back({3, "lattice values: odd sides exact, L_2,2, L_4,2, L_4,4 boundary",
                      lattices.group_passed("lattices"),
                      lattices.group_passed("lattices") ? counts(lattices, "lattices")
                                                        : first_failure(lattices, "lattices")});

  // 4. Closed-set bridge.
  criteria.push_back({4, "min over starts of solve = minimum closed-set size (n <= 6)",
                      closed.group_passed("bridge"),
                      closed.group_passed("bridge") ? counts(closed, "bridge")
                                                    : first_failure(closed, "bridge")});

  // 5. Closed-subset theorem over every optimal trace from suites 1-4.
  {
    long checks = cycles.trace_checks + trees.trace_checks + lattices.trace_checks +
                  closed.trace_checks;
    long ok = cycles.trace_ok + trees.trace_ok + lattices.trace_ok + closed.trace_ok;
    criteria.push_back({5, "every optimal trace ends on a set with a nonempty closed core",
                        checks > 0 && checks == ok,
                        std::to_string(ok) + "/" + std::to_string(checks) + " traces"});
  }

  // 6. Oracle equivalence.
  criteria.push_back({6, "solve = brute oracle (all n <= 6, 50 random n = 7)",
                      closed.group_passed("oracle"),
                      closed.group_passed("oracle") ? counts(closed, "oracle")
                                                    : first_failure(closed, "oracle")});

  // 7. Path strategies.
  criteria.push_back({7, "path sequences force exact single visits, k = 1..8",
                      paths.group_passed("paths"),
                      paths.group_passed("paths") ? counts(paths, "paths")
                                                  : first_failure(paths, "paths")});

  // 8. Centered-tree strategy.
  criteria.push_back({8, "spider tips: nonadaptive score = diameter + 1 = solve",
                      centered.group_passed("centered"),
                      centered.group_passed("centered") ? counts(centered, "centered")
                                                        : first_failure(centered, "centered")});

  // 9. Counterexample.
  criteria.push_back(
      {9, "spider(4;5,5): solve = 15, all-ones <= 2, no short perfect sequence",
       counterexample.group_passed("counterexample"),
       counterexample.group_passed("counterexample")
           ? counts(counterexample, "counterexample")
           : first_failure(counterexample, "counterexample")});

  // 10. Lollipop family.
  criteria.push_back({10, "lollipop(6,k) realizes every value k = 2..6",
                      lollipop.group_passed("lollipop"),
                      lollipop.group_passed("lollipop") ? counts(lollipop, "lollipop")
                                                        : first_failure(lollipop, "lollipop")});

  // 11. Bound sandwich over every (graph, start) from suites 1-4.
  {
    long checks = cycles.sandwich_checks + trees.sandwich_checks + lattices.sandwich_checks +
                  closed.sandwich_checks;
    long ok = cycles.sandwich_ok + trees.sandwich_ok + lattices.sandwich_ok + closed.sandwich_ok;
    criteria.push_back({11, "radius+1 <= solve <= smallest closed set containing the start",
                        checks > 0 && checks == ok,
                        std::to_string(ok) + "/" + std::to_string(checks) + " starts"});
  }

  bool all = true;
  for (const auto& c : criteria) {
    std::printf("criterion %2d %s  %s (%s)\n", c.id, c.pass ? "PASS" : "FAIL", c.title.c_str(),
                c.detail.c_str());
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
