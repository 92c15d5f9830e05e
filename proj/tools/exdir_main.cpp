// exdir: command-line front end for the Explorer-Director game engine.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 resource cap exceeded, 4 I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "exdir/closed.hpp"
#include "exdir/errors.hpp"
#include "exdir/families.hpp"
#include "exdir/formulas.hpp"
#include "exdir/nonadaptive.hpp"
#include "exdir/record.hpp"
#include "exdir/solver.hpp"
#include "exdir/verify.hpp"

namespace {

using namespace exdir;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitIo = 4;

struct LoadedGraph {
  Graph graph;
  std::optional<std::string> family;  // normalized spec string when generated
  std::string source;                 // what the user passed
};

// A --graph argument is a family spec when it contains ':', else a file.
LoadedGraph load_graph(const std::string& arg) {
  if (arg.find(':') != std::string::npos) {
    FamilySpec spec = FamilySpec::parse(arg);
    return {generate(spec), spec.to_string(), arg};
  }
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("cannot open graph file: " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return {parse_edge_list(buf.str()), std::nullopt, arg};
}

int effective_cap(const Graph& g, int cap, bool force_cap) {
  return force_cap ? g.n() : cap;
}

struct SolveArgs {
  std::string graph;
  int start = 0;
  int cap = kDefaultSolverCap;
  bool force_cap = false;
  bool trace = false;
  bool use_cache = false;
  std::string cache_file;
  std::string out_file;
};

int cmd_solve(const SolveArgs& args) {
  LoadedGraph lg = load_graph(args.graph);
  const Graph& g = lg.graph;
  if (args.start < 0 || args.start >= g.n())
    throw std::invalid_argument("start vertex out of range");
  int cap = effective_cap(g, args.cap, args.force_cap);

  std::optional<ResultCache> cache;
  if (args.use_cache || !args.cache_file.empty())
    cache.emplace(args.cache_file.empty() ? default_cache_path() : args.cache_file);

  ResultRecord rec;
  rec.graph_hash = g.hash();
  rec.family_spec = lg.family;
  rec.start = args.start;
  bool from_cache = false;
  std::vector<TraceStep> trace;

  std::optional<ResultRecord> hit;
  if (cache && !args.trace) hit = cache->lookup(rec.graph_hash, args.start);
  if (hit) {
    rec = *hit;
    from_cache = true;
  } else {
    GameSolver solver(g, SolverOptions{cap});
    rec.f_d = solver.solve(args.start);
    rec.closed_min = min_closed_size(solver.distances(), g.n()).size;
    rec.timestamp = record_timestamp();
    if (args.trace) trace = solver.optimal_trace(args.start);
    if (cache) cache->append(rec);
  }

  std::cout << "graph: " << lg.source << " (n=" << g.n() << ", hash=" << rec.graph_hash << ")\n";
  std::cout << "start: " << rec.start << "\n";
  std::cout << "f_d: " << rec.f_d << "\n";
  std::cout << "closed_min: " << rec.closed_min << "\n";
  std::cout << "source: " << (from_cache ? "cache" : "computed") << "\n";
  if (args.trace) {
    for (const auto& step : trace)
      std::cout << "step d=" << step.distance << " -> " << step.vertex
                << " visited=" << step.visited_count << "\n";
  }
  if (!args.out_file.empty()) {
    std::ofstream out(args.out_file, std::ios::app);
    if (!out) throw std::runtime_error("cannot open output file: " + args.out_file);
    out << rec.to_json_line() << "\n";
  }
  return kExitOk;
}

struct ClosedArgs {
  std::string graph;
  std::string check_set;
  std::string peel_set;
  int containing = -1;
  bool min = false;
  int cap = kDefaultSearchCap;
  bool force_cap = false;
};

int cmd_closed(const ClosedArgs& args) {
  LoadedGraph lg = load_graph(args.graph);
  const Graph& g = lg.graph;
  DistanceMatrix dm(g);
  int cap = effective_cap(g, args.cap, args.force_cap);
  if (!args.check_set.empty()) {
    VertexSet u = VertexSet::parse(g.n(), args.check_set);
    std::cout << u.to_string() << (is_closed(dm, u) ? " is closed\n" : " is not closed\n");
  } else if (args.min) {
    auto r = min_closed_size(dm, cap);
    std::cout << "minimum closed set: size " << r.size << ", witness " << r.witness.to_string()
              << "\n";
  } else if (args.containing >= 0) {
    auto r = min_closed_containing(dm, args.containing, cap);
    std::cout << "minimum closed set containing " << args.containing << ": size " << r.size
              << ", witness " << r.witness.to_string() << "\n";
  } else if (!args.peel_set.empty()) {
    VertexSet u = VertexSet::parse(g.n(), args.peel_set);
    PeelResult r = peel(dm, u);
    std::cout << "core: " << r.core.to_string() << (r.core.empty() ? "" : " (closed)") << "\n";
    for (size_t i = 0; i < r.layers.size(); ++i)
      std::cout << "X_" << i + 1 << ": " << r.layers[i].to_string() << "\n";
  } else {
    throw std::invalid_argument("closed: pass one of --check, --min, --containing, --peel");
  }
  return kExitOk;
}

struct FormulaArgs {
  std::string family;
  int n = 0, m = 0;
  int start = -1;
  std::string graph;
  std::string set;
  bool witness = false;
};

int cmd_formula(const FormulaArgs& args) {
  if (args.family == "cycle") {
    std::cout << "f*(" << args.n << ") = " << f_star_cycle(args.n) << "\n";
  } else if (args.family == "lattice") {
    BoundPair b = lattice_bounds(args.n, args.m, args.start);
    if (b.exact)
      std::cout << "f_d(L_" << args.n << "," << args.m << ") = " << b.lower << "\n";
    else
      std::cout << b.lower << " <= f_d(L_" << args.n << "," << args.m << ") <= " << b.upper
                << "\n";
    if (args.witness) {
      if (args.start < 0) throw std::invalid_argument("--witness needs --start");
      VertexSet w = lattice_closed_witness(args.n, args.m, args.start);
      std::cout << "closed witness (size " << w.size() << "): " << w.to_string() << "\n";
    }
  } else if (args.family == "tree") {
    if (args.graph.empty() || args.start < 0)
      throw std::invalid_argument("formula --family tree needs --graph and --start");
    LoadedGraph lg = load_graph(args.graph);
    std::cout << "f_d = " << tree_value(lg.graph, args.start)
              << " (lower bound " << tree_lower_bound(lg.graph) << ")\n";
  } else if (args.family == "ecc") {
    if (args.graph.empty()) throw std::invalid_argument("formula --family ecc needs --graph");
    LoadedGraph lg = load_graph(args.graph);
    DistanceMatrix dm(lg.graph);
    VertexSet a = args.set.empty() ? VertexSet::full(lg.graph.n())
                                   : VertexSet::parse(lg.graph.n(), args.set);
    std::cout << "eccentricity lower bound: " << ecc_lower_bound(dm, a) << "\n";
  } else {
    throw std::invalid_argument("formula: unknown --family (cycle|lattice|tree|ecc)");
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string graph;
  int start = 0;
  std::string sequence;
  int cap = kDefaultSolverCap;
  bool force_cap = false;
};

int cmd_simulate(const SimulateArgs& args) {
  LoadedGraph lg = load_graph(args.graph);
  const Graph& g = lg.graph;
  if (args.start < 0 || args.start >= g.n())
    throw std::invalid_argument("start vertex out of range");
  std::vector<int> seq = parse_sequence(args.sequence);
  int cap = effective_cap(g, args.cap, args.force_cap);
  ScoreResult sc = score(g, args.start, seq, cap);
  if (!sc.valid()) {
    std::cout << "sequence " << sequence_to_string(seq) << " invalid-at-step-"
              << *sc.invalid_step << " (distance exceeds the token's eccentricity)\n";
    return kExitOk;
  }
  std::cout << "score: " << sc.score << "\n";
  ForcedRun run = forced_run(g, args.start, seq);
  std::cout << "run:";
  for (size_t i = 0; i < run.trace.size(); ++i) {
    std::cout << (i ? " -> " : " ") << run.trace[i];
    if (i > 0 && !run.forced[i - 1]) std::cout << "*";
  }
  std::cout << (run.all_forced() ? "  (every step forced)" : "  (* = Director had a choice)")
            << "\n";
  return kExitOk;
}

struct PlayArgs {
  std::string graph;
  int start = 0;
  std::string role;
  int cap = kDefaultSolverCap;
  bool force_cap = false;
};

void print_state(const GameState& s) {
  std::cout << "token at " << s.token << ", visited " << s.visited.size() << " "
            << s.visited.to_string() << "\n";
}

int cmd_play(const PlayArgs& args) {
  LoadedGraph lg = load_graph(args.graph);
  const Graph& g = lg.graph;
  if (args.start < 0 || args.start >= g.n())
    throw std::invalid_argument("start vertex out of range");
  bool human_explorer = args.role == "explorer";
  if (!human_explorer && args.role != "director")
    throw std::invalid_argument("--role must be explorer or director");
  GameSolver solver(g, SolverOptions{effective_cap(g, args.cap, args.force_cap)});
  const DistanceMatrix& dm = solver.distances();
  int fd = solver.solve(args.start);

  std::cout << "Explorer-Director game on " << lg.source << " (n=" << g.n() << "), start "
            << args.start << ".\n";
  if (human_explorer)
    std::cout << "You call distances; the optimal Director replies. It caps the total at f_d = "
              << fd << "; sloppy calls can end below that.\n";
  else
    std::cout << "The optimal Explorer calls distances; you move the token. It forces at least "
                 "f_d = " << fd << " visits no matter your replies.\n";

  GameState state = solver.start_state(args.start);
  bool announced_over = false;
  while (true) {
    if (solver.game_over(state.visited, state.token) && !announced_over) {
      std::cout << "game over: no new vertex can be forced; " << state.visited.size()
                << " vertices visited " << state.visited.to_string() << "\n";
      announced_over = true;
      if (!human_explorer) break;
      std::cout << "(further calls are futile and no longer score)\n";
    }
    int distance;
    if (human_explorer) {
      std::cout << "call a distance (1.." << dm.ecc(state.token) << ") or 'quit': " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line) || line == "quit" || line == "q") break;
      try {
        distance = std::stoi(line);
      } catch (const std::exception&) {
        std::cout << "illegal: not a number\n";
        continue;
      }
      if (distance < 1 || distance > dm.ecc(state.token)) {
        std::cout << "illegal: legal distances are 1.." << dm.ecc(state.token) << "\n";
        continue;
      }
    } else {
      distance = solver.explorer_move(state.visited, state.token);
      std::cout << "Explorer calls " << distance << ".\n";
    }
    Vertex reply;
    if (human_explorer) {
      reply = solver.director_move(state.visited, state.token, distance);
      std::cout << "Director moves the token to " << reply << ".\n";
    } else {
      std::cout << "replies at distance " << distance << ": "
                << dm.sphere(state.token, distance).to_string() << "\n";
      std::cout << "move the token (or 'quit'): " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line) || line == "quit" || line == "q") break;
      try {
        reply = std::stoi(line);
      } catch (const std::exception&) {
        std::cout << "illegal: not a number\n";
        continue;
      }
      if (reply < 0 || reply >= g.n() || dm.dist(state.token, reply) != distance) {
        std::cout << "illegal: that vertex is not at distance " << distance << "\n";
        continue;
      }
    }
    auto result = play_step(solver, state, distance, reply);
    state = result.state;
    print_state(state);
  }
  std::cout << "session summary: visited " << state.visited.size() << " vertices "
            << state.visited.to_string() << " (f_d = " << fd << ")\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  int max_n = 0;
  int count = 0;
  std::uint32_t seed = 42;
  int parallel = 1;
};

int cmd_verify(const VerifyArgs& args) {
  VerifyOptions opt;
  opt.max_n = args.max_n;
  opt.count = args.count;
  opt.seed = args.seed;
  opt.workers = args.parallel == 0
                    ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))
                    : args.parallel;
  std::vector<std::string> suites;
  if (args.suite == "all")
    suites = suite_names();
  else
    suites.push_back(args.suite);

  bool ok = true;
  for (const auto& name : suites) {
    SuiteResult result = run_suite(name, opt);
    for (const auto& c : result.cases) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << result.suite << ": " << c.name;
      if (!c.detail.empty()) std::cout << " -- " << c.detail;
      std::cout << "\n";
    }
    if (result.trace_checks > 0)
      std::cout << (result.trace_ok == result.trace_checks ? "[PASS] " : "[FAIL] ")
                << result.suite << ": closed-core traces " << result.trace_ok << "/"
                << result.trace_checks << "\n";
    if (result.sandwich_checks > 0)
      std::cout << (result.sandwich_ok == result.sandwich_checks ? "[PASS] " : "[FAIL] ")
                << result.suite << ": bound sandwich " << result.sandwich_ok << "/"
                << result.sandwich_checks << "\n";
    std::cout << result.suite << ": " << result.passed() << "/" << result.cases.size()
              << " cases passed\n";
    ok = ok && result.all_passed();
  }
  return ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exdir: exact solver and analysis tools for the Explorer-Director game"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Compute f_d(G, start)");
  solve_cmd->add_option("--graph", solve_args.graph, "Family spec (e.g. cycle:6) or edge-list file")
      ->required();
  solve_cmd->add_option("--start", solve_args.start, "Start vertex")->required();
  solve_cmd->add_option("--cap", solve_args.cap, "Solver vertex cap (default 14)");
  solve_cmd->add_flag("--force-cap", solve_args.force_cap, "Raise the cap to the graph size");
  solve_cmd->add_flag("--trace", solve_args.trace, "Print an optimal play trace");
  solve_cmd->add_flag("--cache", solve_args.use_cache,
                      "Use the result cache ($EXDIR_CACHE or .exdir-cache.jsonl)");
  solve_cmd->add_option("--cache-file", solve_args.cache_file, "Cache file (implies --cache)");
  solve_cmd->add_option("--out", solve_args.out_file, "Append the structured record to a file");

  ClosedArgs closed_args;
  auto* closed_cmd = app.add_subcommand("closed", "Closed-set analysis");
  closed_cmd->add_option("--graph", closed_args.graph, "Family spec or edge-list file")
      ->required();
  closed_cmd->add_option("--check", closed_args.check_set, "Check closedness of a vertex set");
  closed_cmd->add_flag("--min", closed_args.min, "Find a minimum closed set");
  closed_cmd->add_option("--containing", closed_args.containing,
                         "Find a minimum closed set containing a vertex");
  closed_cmd->add_option("--peel", closed_args.peel_set, "Peel a vertex set to its closed core");
  closed_cmd->add_option("--cap", closed_args.cap, "Search vertex cap (default 14)");
  closed_cmd->add_flag("--force-cap", closed_args.force_cap, "Raise the cap to the graph size");

  FormulaArgs formula_args;
  auto* formula_cmd = app.add_subcommand("formula", "Closed-form values and bounds");
  formula_cmd->add_option("--family", formula_args.family, "cycle|lattice|tree|ecc")->required();
  formula_cmd->add_option("--n", formula_args.n, "n parameter");
  formula_cmd->add_option("--m", formula_args.m, "m parameter (lattice)");
  formula_cmd->add_option("--start", formula_args.start, "Start vertex");
  formula_cmd->add_option("--graph", formula_args.graph, "Graph (tree/ecc families)");
  formula_cmd->add_option("--set", formula_args.set, "Vertex set (ecc family)");
  formula_cmd->add_flag("--witness", formula_args.witness, "Print the lattice closed witness");

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "Score a nonadaptive sequence");
  sim_cmd->add_option("--graph", sim_args.graph, "Family spec or edge-list file")->required();
  sim_cmd->add_option("--start", sim_args.start, "Start vertex")->required();
  sim_cmd->add_option("--sequence", sim_args.sequence, "Comma separated distances")->required();
  sim_cmd->add_option("--cap", sim_args.cap, "Evaluator vertex cap (default 14)");
  sim_cmd->add_flag("--force-cap", sim_args.force_cap, "Raise the cap to the graph size");

  PlayArgs play_args;
  auto* play_cmd = app.add_subcommand("play", "Play against the optimal policy");
  play_cmd->add_option("--graph", play_args.graph, "Family spec or edge-list file")->required();
  play_cmd->add_option("--start", play_args.start, "Start vertex")->required();
  play_cmd->add_option("--role", play_args.role, "explorer|director")->required();
  play_cmd->add_option("--cap", play_args.cap, "Solver vertex cap (default 14)");
  play_cmd->add_flag("--force-cap", play_args.force_cap, "Raise the cap to the graph size");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem-check suite");
  verify_cmd
      ->add_option("--suite", verify_args.suite,
                   "cycles|trees|lattices|closed|paths|centered|counterexample|lollipop|all")
      ->required();
  verify_cmd->add_option("--max-n", verify_args.max_n, "Size bound (suite specific)");
  verify_cmd->add_option("--count", verify_args.count, "Random case count (suite specific)");
  verify_cmd->add_option("--seed", verify_args.seed, "Random seed (default 42)");
  verify_cmd->add_option("--parallel", verify_args.parallel,
                         "Worker threads (0 = all cores; report order stays deterministic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_args);
    if (closed_cmd->parsed()) return cmd_closed(closed_args);
    if (formula_cmd->parsed()) return cmd_formula(formula_args);
    if (sim_cmd->parsed()) return cmd_simulate(sim_args);
    if (play_cmd->parsed()) return cmd_play(play_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
