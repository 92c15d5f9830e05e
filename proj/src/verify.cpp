#include "exdir/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <memory>
#include <thread>

#include "exdir/closed.hpp"
#include "exdir/families.hpp"
#include "exdir/formulas.hpp"
#include "exdir/nonadaptive.hpp"
#include "exdir/solver.hpp"

namespace exdir {

namespace {

struct CaseOutput {
  CaseResult result;
  long tc = 0, tok = 0, sc = 0, sok = 0;
};

using Job = std::function<CaseOutput()>;

void expect(CaseOutput& o, bool cond, const std::string& detail) {
  if (!cond) {
    o.result.pass = false;
    if (!o.result.detail.empty()) o.result.detail += "; ";
    o.result.detail += detail;
  }
}

Job checked_job(std::string group, std::string name, std::function<void(CaseOutput&)> body) {
  return [group = std::move(group), name = std::move(name), body = std::move(body)] {
    CaseOutput o;
    o.result.group = group;
    o.result.name = name;
    o.result.pass = true;
    try {
      body(o);
    } catch (const std::exception& e) {
      o.result.pass = false;
      o.result.detail = std::string("exception: ") + e.what();
    }
    return o;
  };
}

std::vector<CaseOutput> run_jobs(const std::vector<Job>& jobs, int workers) {
  std::vector<CaseOutput> out(jobs.size());
  if (workers <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
    return out;
  }
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) out[i] = jobs[i]();
  };
  std::vector<std::thread> pool;
  int count = std::min<int>(workers, static_cast<int>(jobs.size()));
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return out;
}

void finish(SuiteResult& suite, std::vector<CaseOutput> outs) {
  for (auto& o : outs) {
    suite.trace_checks += o.tc;
    suite.trace_ok += o.tok;
    suite.sandwich_checks += o.sc;
    suite.sandwich_ok += o.sok;
    suite.cases.push_back(std::move(o.result));
  }
}

// Per-graph machinery shared across starts within one case.
struct GraphProbe {
  Graph g;
  GameSolver solver;

  explicit GraphProbe(Graph graph) : g(std::move(graph)), solver(g, SolverOptions{g.n()}) {}

  const DistanceMatrix& dm() const { return solver.distances(); }

  // f_d plus the two cross-cutting properties: the optimal trace ends in a
  // visited set with a nonempty closed core, and the value sits between
  // radius+1 and the smallest closed set containing the start.
  int solve_checked(Vertex start, CaseOutput& o) {
    int fd = solver.solve(start);
    auto trace = solver.optimal_trace(start);
    VertexSet visited = VertexSet::of(g.n(), {start});
    for (const auto& step : trace) visited = visited.with(step.vertex);
    bool trace_good = visited.size() == fd && !peel(dm(), visited).core.empty();
    ++o.tc;
    o.tok += trace_good;
    auto containing = min_closed_containing(dm(), start, g.n());
    bool sandwich_good = dm().radius() + 1 <= fd && fd <= containing.size;
    ++o.sc;
    o.sok += sandwich_good;
    return fd;
  }
};

std::string plural(long k, const std::string& what) {
  return std::to_string(k) + " " + what + (k == 1 ? "" : "s");
}

}  // namespace

std::vector<Graph> all_connected_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("all_connected_graphs: n in 1..7 required");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  int num_pairs = static_cast<int>(pairs.size());
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << num_pairs); ++mask) {
    std::uint32_t adj[7] = {};
    for (int e = 0; e < num_pairs; ++e)
      if ((mask >> e) & 1u) {
        adj[pairs[e].first] |= 1u << pairs[e].second;
        adj[pairs[e].second] |= 1u << pairs[e].first;
      }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier != 0) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t fresh = adj[v] & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    if (seen != (1u << n) - 1u) continue;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int e = 0; e < num_pairs; ++e)
      if ((mask >> e) & 1u) edges.push_back(pairs[e]);
    out.push_back(Graph::from_edges(n, std::move(edges)));
  }
  return out;
}

Graph random_connected_graph(int n, std::mt19937& rng) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("random_connected_graph: bad n");
  std::bernoulli_distribution coin(0.5);
  while (true) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    try {
      return Graph::from_edges(n, std::move(edges));
    } catch (const std::exception&) {
      // disconnected; resample
    }
  }
}

SuiteResult run_cycles(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "cycles";
  int max_n = opt.max_n ? opt.max_n : 12;
  std::vector<Job> jobs;
  for (int n = 3; n <= max_n; ++n) {
    jobs.push_back(checked_job("cycles", "f_d(C_" + std::to_string(n) + ") = f*", [n](CaseOutput& o) {
      GraphProbe probe(make_cycle(n));
      int fd = probe.solve_checked(0, o);
      int expected = f_star_cycle(n);
      expect(o, fd == expected,
             "expected " + std::to_string(expected) + ", got " + std::to_string(fd));
      if (o.result.pass) o.result.detail = "f_d = " + std::to_string(fd);
    }));
    jobs.push_back(checked_job(
        "cycles-bridge", "min_closed(C_" + std::to_string(n) + ") = f*", [n](CaseOutput& o) {
          DistanceMatrix dm(make_cycle(n));
          auto mc = min_closed_size(dm, n);
          int expected = f_star_cycle(n);
          expect(o, mc.size == expected,
                 "expected " + std::to_string(expected) + ", got " + std::to_string(mc.size));
          expect(o, is_closed(dm, mc.witness), "witness not closed");
          if (o.result.pass) o.result.detail = "witness " + mc.witness.to_string();
        }));
  }
  finish(suite, run_jobs(jobs, opt.workers));
  return suite;
}

SuiteResult run_trees(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "trees";
  int max_n = opt.max_n ? opt.max_n : 10;
  int count = opt.count ? opt.count : 200;
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<int> size_dist(2, max_n);
  std::vector<Job> jobs;
  for (int i = 0; i < count; ++i) {
    int n = size_dist(rng);
    std::uint32_t seed = rng();
    jobs.push_back(checked_job(
        "trees", "tree #" + std::to_string(i) + " (n=" + std::to_string(n) + ")",
        [n, seed](CaseOutput& o) {
          Graph t = make_random_tree(n, seed);
          GraphProbe probe(t);
          int lb = tree_lower_bound(t);
          for (Vertex v = 0; v < t.n(); ++v) {
            int fd = probe.solve_checked(v, o);
            int tv = tree_value(t, v);
            expect(o, fd == tv,
                   "start " + std::to_string(v) + ": solver " + std::to_string(fd) +
                       " vs formula " + std::to_string(tv));
            bool on_path = probe.dm().ell(v) == 0;
            expect(o, tv >= lb && (tv == lb) == on_path,
                   "start " + std::to_string(v) + ": lower bound mismatch");
          }
        }));
  }
  finish(suite, run_jobs(jobs, opt.workers));
  return suite;
}

SuiteResult run_lattices(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "lattices";
  std::vector<Job> jobs;

  struct Exact {
    int n, m, expected;
  };
  for (Exact c : {Exact{2, 3, 4}, Exact{3, 3, 5}, Exact{4, 3, 6}, Exact{2, 2, 4}, Exact{4, 2, 6}}) {
    jobs.push_back(checked_job(
        "lattices",
        "f_d(L_" + std::to_string(c.n) + "," + std::to_string(c.m) + ") all starts",
        [c](CaseOutput& o) {
          GraphProbe probe(make_lattice(c.n, c.m));
          BoundPair bounds = lattice_bounds(c.n, c.m);
          for (Vertex v = 0; v < c.n * c.m; ++v) {
            int fd = probe.solve_checked(v, o);
            expect(o, fd == c.expected,
                   "start " + std::to_string(v) + ": expected " + std::to_string(c.expected) +
                       ", got " + std::to_string(fd));
            expect(o, fd >= bounds.lower && fd <= bounds.upper,
                   "start " + std::to_string(v) + ": outside bounds");
          }
          if (o.result.pass) o.result.detail = "f_d = " + std::to_string(c.expected);
        }));
  }

  jobs.push_back(checked_job("lattices", "f_d(L_4,4) boundary starts = 8", [](CaseOutput& o) {
    GraphProbe probe(make_lattice(4, 4));
    for (Vertex v = 0; v < 16; ++v) {
      int col = v % 4 + 1, row = v / 4 + 1;
      if (col != 1 && col != 4 && row != 1 && row != 4) continue;
      int fd = probe.solve_checked(v, o);
      expect(o, fd == 8,
             "start " + std::to_string(v) + ": expected 8, got " + std::to_string(fd));
      BoundPair bounds = lattice_bounds(4, 4, v);
      expect(o, fd >= bounds.lower && fd <= bounds.upper,
             "start " + std::to_string(v) + ": outside bounds");
    }
  }));

  jobs.push_back(checked_job("lattices-witness", "closed witnesses, all n,m <= 24 cells", [](CaseOutput& o) {
    long checked = 0;
    for (int n = 2; n <= 12; ++n)
      for (int m = 2; m <= 12; ++m) {
        if (n * m > kMaxVertices) continue;
        DistanceMatrix dm(make_lattice(n, m));
        bool odd = n % 2 == 1 || m % 2 == 1;
        int want_size = odd ? n + m - 1 : std::max(n, m) + 2 * std::min(n, m) - 2;
        for (Vertex v = 0; v < n * m; ++v) {
          VertexSet w = lattice_closed_witness(n, m, v);
          ++checked;
          expect(o, w.contains(v), "witness misses v");
          expect(o, w.size() == want_size,
                 "L_" + std::to_string(n) + "," + std::to_string(m) + " v=" + std::to_string(v) +
                     ": size " + std::to_string(w.size()) + " != " + std::to_string(want_size));
          expect(o, is_closed(dm, w),
                 "L_" + std::to_string(n) + "," + std::to_string(m) + " v=" + std::to_string(v) +
                     ": witness not closed");
        }
      }
    if (o.result.pass) o.result.detail = plural(checked, "witness") + " closed";
  }));

  finish(suite, run_jobs(jobs, opt.workers));
  return suite;
}

SuiteResult run_closed(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "closed";
  int sample6 = opt.count ? opt.count : 300;
  std::vector<Job> jobs;

  // Bridge: min over starts of f_d equals the minimum closed-set size.
  for (int n = 1; n <= 5; ++n) {
    jobs.push_back(checked_job(
        "bridge", "bridge: all connected graphs n=" + std::to_string(n), [n](CaseOutput& o) {
          auto graphs = all_connected_graphs(n);
          for (const auto& g : graphs) {
            GraphProbe probe(g);
            int best = std::numeric_limits<int>::max();
            for (Vertex v = 0; v < n; ++v) best = std::min(best, probe.solve_checked(v, o));
            auto mc = min_closed_size(probe.dm(), n);
            expect(o, best == mc.size,
                   g.hash() + ": min f_d " + std::to_string(best) + " vs min closed " +
                       std::to_string(mc.size));
            expect(o, is_closed(probe.dm(), mc.witness), g.hash() + ": witness not closed");
          }
          if (o.result.pass) o.result.detail = plural(graphs.size(), "graph");
        }));
  }

  auto all6 = std::make_shared<std::vector<Graph>>(all_connected_graphs(6));

  {
    std::mt19937 rng(opt.seed);
    std::vector<int> sample_idx;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(all6->size()) - 1);
    for (int i = 0; i < sample6; ++i) sample_idx.push_back(pick(rng));
    std::sort(sample_idx.begin(), sample_idx.end());
    sample_idx.erase(std::unique(sample_idx.begin(), sample_idx.end()), sample_idx.end());
    const int shards = 4;
    for (int s = 0; s < shards; ++s) {
      std::vector<int> part;
      for (size_t i = s; i < sample_idx.size(); i += shards) part.push_back(sample_idx[i]);
      jobs.push_back(checked_job(
          "bridge", "bridge: sampled n=6 graphs [" + std::to_string(s + 1) + "/4]",
          [all6, part](CaseOutput& o) {
            for (int idx : part) {
              const Graph& g = (*all6)[idx];
              GraphProbe probe(g);
              int best = std::numeric_limits<int>::max();
              for (Vertex v = 0; v < 6; ++v) best = std::min(best, probe.solve_checked(v, o));
              auto mc = min_closed_size(probe.dm(), 6);
              expect(o, best == mc.size,
                     g.hash() + ": min f_d " + std::to_string(best) + " vs min closed " +
                         std::to_string(mc.size));
            }
            if (o.result.pass) o.result.detail = plural(part.size(), "graph");
          }));
    }
  }

  // Oracle equivalence on the exhaustive small corpus.
  for (int n = 1; n <= 5; ++n) {
    jobs.push_back(checked_job(
        "oracle", "oracle: all connected graphs n=" + std::to_string(n), [n](CaseOutput& o) {
          auto graphs = all_connected_graphs(n);
          for (const auto& g : graphs) {
            GameSolver solver(g, SolverOptions{g.n()});
            BruteOracle oracle(g);
            for (Vertex v = 0; v < n; ++v)
              expect(o, solver.solve(v) == oracle.value(v),
                     g.hash() + " start " + std::to_string(v) + ": solver " +
                         std::to_string(solver.solve(v)) + " vs oracle " +
                         std::to_string(oracle.value(v)));
          }
          if (o.result.pass) o.result.detail = plural(graphs.size(), "graph");
        }));
  }
  {
    const int shards = 16;
    for (int s = 0; s < shards; ++s) {
      jobs.push_back(checked_job(
          "oracle",
          "oracle: all connected graphs n=6 [" + std::to_string(s + 1) + "/" +
              std::to_string(shards) + "]",
          [all6, s, shards](CaseOutput& o) {
            long count = 0;
            for (size_t i = s; i < all6->size(); i += shards, ++count) {
              const Graph& g = (*all6)[i];
              GameSolver solver(g, SolverOptions{6});
              BruteOracle oracle(g);
              for (Vertex v = 0; v < 6; ++v)
                expect(o, solver.solve(v) == oracle.value(v),
                       g.hash() + " start " + std::to_string(v) + ": solver/oracle mismatch");
            }
            if (o.result.pass) o.result.detail = plural(count, "graph");
          }));
    }
  }
  {
    std::mt19937 rng(opt.seed + 1);
    std::vector<Graph> sevens;
    for (int i = 0; i < 50; ++i) sevens.push_back(random_connected_graph(7, rng));
    auto shared7 = std::make_shared<std::vector<Graph>>(std::move(sevens));
    const int shards = 4;
    for (int s = 0; s < shards; ++s) {
      jobs.push_back(checked_job(
          "oracle", "oracle: 50 random n=7 graphs [" + std::to_string(s + 1) + "/4]",
          [shared7, s, shards](CaseOutput& o) {
            long count = 0;
            for (size_t i = s; i < shared7->size(); i += shards, ++count) {
              const Graph& g = (*shared7)[i];
              GameSolver solver(g, SolverOptions{7});
              BruteOracle oracle(g);
              for (Vertex v = 0; v < 7; ++v)
                expect(o, solver.solve(v) == oracle.value(v),
                       g.hash() + " start " + std::to_string(v) + ": solver/oracle mismatch");
            }
            if (o.result.pass) o.result.detail = plural(count, "graph");
          }));
    }
  }

  finish(suite, run_jobs(jobs, opt.workers));
  return suite;
}

SuiteResult run_paths(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "paths";
  int max_k = opt.max_n ? opt.max_n : 8;
  std::vector<Job> jobs;
  for (int k = 1; k <= max_k; ++k) {
    jobs.push_back(checked_job(
        "paths", "even path P_" + std::to_string(2 * k) + " from v_0", [k](CaseOutput& o) {
          Graph g = make_path(2 * k);
          auto seq = even_path_sequence(k);
          auto run = forced_run(g, 0, seq);
          expect(o, !run.invalid_step.has_value(), "sequence went illegal");
          expect(o, run.all_forced(), "a step left the Director a choice");
          std::vector<Vertex> sorted = run.trace;
          std::sort(sorted.begin(), sorted.end());
          sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
          expect(o, static_cast<int>(run.trace.size()) == 2 * k &&
                        static_cast<int>(sorted.size()) == 2 * k,
                 "trace is not a permutation of the vertices");
          auto sc = score(g, 0, seq, 2 * k);
          expect(o, sc.valid() && sc.score == 2 * k, "score disagrees with the forced run");
          if (o.result.pass) o.result.detail = sequence_to_string(seq);
        }));
    jobs.push_back(checked_job(
        "paths", "odd path P_" + std::to_string(2 * k + 1) + " from v_0..v_k",
        [k](CaseOutput& o) {
          int n = 2 * k + 1;
          Graph g = make_path(n);
          DistanceMatrix dm(g);
          for (int x = 0; x <= k; ++x) {
            auto seq = odd_path_sequence(k, x);
            expect(o, static_cast<int>(seq.size()) == 2 * k, "length != 2k");
            if (x < k) {
              auto run = forced_run(g, x, seq);
              expect(o, !run.invalid_step.has_value(), "x=" + std::to_string(x) + ": illegal");
              expect(o, run.all_forced(), "x=" + std::to_string(x) + ": not forced");
              std::vector<Vertex> sorted = run.trace;
              std::sort(sorted.begin(), sorted.end());
              sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
              expect(o, static_cast<int>(sorted.size()) == n &&
                            static_cast<int>(run.trace.size()) == n,
                     "x=" + std::to_string(x) + ": not an exact cover");
            } else {
              // Center start: the first reply set is the two symmetric
              // near-endpoints; both branches must cover exactly.
              auto replies = dm.sphere(k, seq[0]);
              expect(o, replies == VertexSet::of(n, {0, n - 1}),
                     "center: unexpected first reply set " + replies.to_string());
              for (Vertex branch : {0, n - 1}) {
                auto run = forced_run(g, k, seq, {branch});
                expect(o, !run.invalid_step.has_value(), "center branch: illegal");
                expect(o, !run.forced.empty() && !run.forced.front(), "first step forced?");
                bool rest_forced = true;
                for (size_t i = 1; i < run.forced.size(); ++i) rest_forced &= run.forced[i];
                expect(o, rest_forced, "center: later step not forced");
                std::vector<Vertex> sorted = run.trace;
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                expect(o, static_cast<int>(sorted.size()) == n &&
                              static_cast<int>(run.trace.size()) == n,
                       "center branch " + std::to_string(branch) + ": not an exact cover");
              }
              auto sc = score(g, k, seq, n);
              expect(o, sc.valid() && sc.score == n, "center: score below n");
            }
          }
        }));
  }
  finish(suite, run_jobs(jobs, opt.workers));
  return suite;
}

SuiteResult run_centered(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "centered";
  std::vector<Job> jobs;
  for (int legs = 3; legs <= 5; ++legs)
    for (int len = 2; len <= 4; ++len) {
      jobs.push_back(checked_job(
          "centered",
          "spider " + std::to_string(legs) + " legs of " + std::to_string(len) + ", tip start",
          [legs, len](CaseOutput& o) {
            std::vector<int> leg_spec(legs, len);
            Graph g = make_spider(0, leg_spec);
            int n = g.n();
            int diam = 2 * len;
            for (Vertex tip : {len, n - 1}) {
              expect(o, qualifies_centered(g, tip), "tip does not qualify");
              auto seq = centered_tree_sequence(g, tip, n);
              auto sc = score(g, tip, seq, n);
              GameSolver solver(g, SolverOptions{n});
              int fd = solver.solve(tip);
              expect(o, sc.valid(), "sequence went illegal");
              expect(o, sc.score == diam + 1 && fd == diam + 1,
                     "tip " + std::to_string(tip) + ": score " + std::to_string(sc.score) +
                         ", f_d " + std::to_string(fd) + ", expected " + std::to_string(diam + 1));
            }
            if (o.result.pass) o.result.detail = "score = " + std::to_string(diam + 1);
          }));
    }
  finish(suite, run_jobs(jobs, opt.workers));
  return suite;
}

SuiteResult run_counterexample(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "counterexample";
  std::vector<Job> jobs;
  jobs.push_back(checked_job("counterexample", "f_d(spider(4;5,5), a) = 15", [](CaseOutput& o) {
    Graph g = make_spider(4, {5, 5});
    GameSolver solver(g, SolverOptions{15});
    int fd = solver.solve(0);
    expect(o, fd == 15, "got " + std::to_string(fd));
    expect(o, tree_value(g, 0) == 15, "tree formula disagrees");
  }));
  jobs.push_back(checked_job("counterexample", "all-ones sequence of length 30 scores <= 2",
                             [](CaseOutput& o) {
                               Graph g = make_spider(4, {5, 5});
                               std::vector<int> ones(30, 1);
                               auto sc = score(g, 0, ones, 15);
                               expect(o, sc.valid() && sc.score <= 2,
                                      "score " + std::to_string(sc.score));
                               if (o.result.pass)
                                 o.result.detail = "score = " + std::to_string(sc.score);
                             }));
  jobs.push_back(checked_job("counterexample", "no sequence of length <= 6 scores 15",
                             [](CaseOutput& o) {
                               Graph g = make_spider(4, {5, 5});
                               auto found = search_perfect_sequence(g, 0, 6, 15);
                               expect(o, !found.has_value(),
                                      found ? "found " + sequence_to_string(*found) : "");
                             }));
  finish(suite, run_jobs(jobs, opt.workers));
  return suite;
}

SuiteResult run_lollipop(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "lollipop";
  std::vector<Job> jobs;
  for (int k = 2; k <= 6; ++k) {
    jobs.push_back(checked_job(
        "lollipop", "lollipop(6," + std::to_string(k) + ") realizes " + std::to_string(k),
        [k](CaseOutput& o) {
          Graph g = make_lollipop(6, k);
          GameSolver solver(g, SolverOptions{6});
          int best = std::numeric_limits<int>::max();
          for (Vertex v = 0; v < 6; ++v) best = std::min(best, solver.solve(v));
          auto mc = min_closed_size(solver.distances(), 6);
          expect(o, mc.size == k, "min closed " + std::to_string(mc.size));
          expect(o, best == k, "min f_d " + std::to_string(best));
        }));
  }
  finish(suite, run_jobs(jobs, opt.workers));
  return suite;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cycles",  "trees",    "lattices",
                                                 "closed",  "paths",    "centered",
                                                 "counterexample", "lollipop"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "cycles") return run_cycles(opt);
  if (name == "trees") return run_trees(opt);
  if (name == "lattices") return run_lattices(opt);
  if (name == "closed") return run_closed(opt);
  if (name == "paths") return run_paths(opt);
  if (name == "centered") return run_centered(opt);
  if (name == "counterexample") return run_counterexample(opt);
  if (name == "lollipop") return run_lollipop(opt);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace exdir
