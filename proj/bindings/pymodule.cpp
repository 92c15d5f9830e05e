#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exdir/closed.hpp"
#include "exdir/errors.hpp"
#include "exdir/families.hpp"
#include "exdir/formulas.hpp"
#include "exdir/graph.hpp"
#include "exdir/nonadaptive.hpp"
#include "exdir/solver.hpp"
#include "exdir/verify.hpp"

namespace py = pybind11;
using namespace exdir;

namespace {

VertexSet to_set(int n, const std::vector<int>& vs) { return VertexSet::from_vertices(n, vs); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact engine for the Explorer-Director game on finite connected graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapError>(m, "CapError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v); })
      .def("is_tree", &Graph::is_tree)
      .def("edge_list", &Graph::edge_list)
      .def("hash", &Graph::hash)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("parse_edge_list", &parse_edge_list, py::arg("text"),
        "Parse an edge-list document (count line, then 'u v' lines).");
  m.def(
      "generate", [](const std::string& spec) { return generate(FamilySpec::parse(spec)); },
      py::arg("spec"),
      "Generate a family graph from a spec string such as 'cycle:6' or 'spider:4;5,5'.");
  m.def("lattice_index", &lattice_index, py::arg("n"), py::arg("m"), py::arg("col"),
        py::arg("row"), "0-based index of lattice cell (col, row), both 1-based.");

  py::class_<DistanceMatrix>(m, "DistanceMatrix")
      .def(py::init<const Graph&>())
      .def("dist", &DistanceMatrix::dist)
      .def("ecc", &DistanceMatrix::ecc)
      .def_property_readonly("diameter", &DistanceMatrix::diameter)
      .def_property_readonly("radius", &DistanceMatrix::radius)
      .def_property_readonly("centers",
                             [](const DistanceMatrix& dm) { return dm.centers().vertices(); })
      .def("sphere",
           [](const DistanceMatrix& dm, Vertex v, int d) { return dm.sphere(v, d).vertices(); })
      .def("on_diameter_path", &DistanceMatrix::on_diameter_path)
      .def("ell", &DistanceMatrix::ell);

  m.def(
      "is_closed",
      [](const DistanceMatrix& dm, const std::vector<int>& u) {
        return is_closed(dm, to_set(dm.n(), u));
      },
      py::arg("dm"), py::arg("vertices"));

  py::class_<PeelResult>(m, "PeelResult")
      .def_property_readonly("core", [](const PeelResult& r) { return r.core.vertices(); })
      .def_property_readonly("layers",
                             [](const PeelResult& r) {
                               std::vector<std::vector<int>> out;
                               for (const auto& layer : r.layers) out.push_back(layer.vertices());
                               return out;
                             })
      .def("escape_depth",
           [](const PeelResult& r, Vertex v) -> py::object {
             if (v < 0 || v >= static_cast<int>(r.escape_depth.size()) || r.escape_depth[v] < 0)
               throw std::invalid_argument("vertex not in the peeled set");
             if (r.escape_depth[v] == 0) return py::none();  // core member
             return py::int_(r.escape_depth[v]);
           });

  m.def(
      "peel",
      [](const DistanceMatrix& dm, const std::vector<int>& u) {
        return peel(dm, to_set(dm.n(), u));
      },
      py::arg("dm"), py::arg("vertices"));

  m.def(
      "min_closed_size",
      [](const DistanceMatrix& dm, int cap) {
        auto r = min_closed_size(dm, cap);
        return py::make_tuple(r.size, r.witness.vertices());
      },
      py::arg("dm"), py::arg("cap") = kDefaultSearchCap);
  m.def(
      "min_closed_containing",
      [](const DistanceMatrix& dm, Vertex v, int cap) {
        auto r = min_closed_containing(dm, v, cap);
        return py::make_tuple(r.size, r.witness.vertices());
      },
      py::arg("dm"), py::arg("vertex"), py::arg("cap") = kDefaultSearchCap);

  py::class_<TraceStep>(m, "TraceStep")
      .def_readonly("distance", &TraceStep::distance)
      .def_readonly("vertex", &TraceStep::vertex)
      .def_readonly("visited_count", &TraceStep::visited_count)
      .def("__repr__", [](const TraceStep& s) {
        return "step d=" + std::to_string(s.distance) + " -> " + std::to_string(s.vertex) +
               " visited=" + std::to_string(s.visited_count);
      });

  py::class_<GameSolver>(m, "GameSolver")
      .def(py::init([](const Graph& g, int cap) { return GameSolver(g, SolverOptions{cap}); }),
           py::arg("graph"), py::arg("cap") = kDefaultSolverCap)
      .def("solve", &GameSolver::solve, py::arg("start"))
      .def(
          "value",
          [](GameSolver& s, const std::vector<int>& visited, Vertex token) {
            return s.value(to_set(s.graph().n(), visited), token);
          },
          py::arg("visited"), py::arg("token"))
      .def(
          "game_over",
          [](GameSolver& s, const std::vector<int>& visited, Vertex token) {
            return s.game_over(to_set(s.graph().n(), visited), token);
          },
          py::arg("visited"), py::arg("token"))
      .def(
          "explorer_move",
          [](GameSolver& s, const std::vector<int>& visited, Vertex token) {
            return s.explorer_move(to_set(s.graph().n(), visited), token);
          },
          py::arg("visited"), py::arg("token"))
      .def(
          "director_move",
          [](GameSolver& s, const std::vector<int>& visited, Vertex token, int distance) {
            return s.director_move(to_set(s.graph().n(), visited), token, distance);
          },
          py::arg("visited"), py::arg("token"), py::arg("distance"))
      .def("optimal_trace", &GameSolver::optimal_trace, py::arg("start"))
      .def_property_readonly("max_sweeps_observed", &GameSolver::max_sweeps_observed)
      .def_property_readonly("solved_layer_count", &GameSolver::solved_layer_count);

  m.def(
      "play_step",
      [](GameSolver& solver, const std::vector<int>& visited, Vertex token,
         std::optional<int> distance, std::optional<Vertex> reply) {
        GameState state{to_set(solver.graph().n(), visited), token};
        auto r = play_step(solver, state, distance, reply);
        return py::make_tuple(r.state.visited.vertices(), r.state.token, r.distance, r.reply,
                              r.over, r.value);
      },
      py::arg("solver"), py::arg("visited"), py::arg("token"), py::arg("distance") = py::none(),
      py::arg("reply") = py::none(),
      "One engine step; policy substitutes omitted moves.  Returns "
      "(visited, token, distance, reply, over, value).");

  m.def("brute_oracle", &brute_oracle, py::arg("graph"), py::arg("start"),
        "Independent depth-limited minimax oracle (n <= 7).");

  m.def("f_star_cycle", &f_star_cycle, py::arg("n"));
  m.def("tree_value", &tree_value, py::arg("graph"), py::arg("vertex"));
  m.def("tree_lower_bound", &tree_lower_bound, py::arg("graph"));
  m.def(
      "lattice_bounds",
      [](int n, int m, Vertex v) {
        BoundPair b = lattice_bounds(n, m, v);
        return py::make_tuple(b.lower, b.upper, b.exact);
      },
      py::arg("n"), py::arg("m"), py::arg("start") = -1,
      "Returns (lower, upper, exact) for the n-by-m lattice.");
  m.def("lattice_in_refined_boundary", &lattice_in_refined_boundary, py::arg("n"),
        py::arg("vertex"));
  m.def(
      "lattice_closed_witness",
      [](int n, int m, Vertex v) { return lattice_closed_witness(n, m, v).vertices(); },
      py::arg("n"), py::arg("m"), py::arg("vertex"));
  m.def(
      "ecc_lower_bound",
      [](const DistanceMatrix& dm, const std::vector<int>& a) {
        return ecc_lower_bound(dm, to_set(dm.n(), a));
      },
      py::arg("dm"), py::arg("vertices"));

  py::class_<ScoreResult>(m, "ScoreResult")
      .def_readonly("score", &ScoreResult::score)
      .def_property_readonly("invalid_step",
                             [](const ScoreResult& r) -> py::object {
                               if (r.invalid_step) return py::int_(*r.invalid_step);
                               return py::none();
                             })
      .def("valid", &ScoreResult::valid)
      .def("__repr__", [](const ScoreResult& r) {
        return r.valid() ? "<score " + std::to_string(r.score) + ">"
                         : "<invalid at step " + std::to_string(*r.invalid_step) + ">";
      });

  m.def("score", &score, py::arg("graph"), py::arg("start"), py::arg("sequence"),
        py::arg("cap") = kDefaultSolverCap);
  m.def("even_path_sequence", &even_path_sequence, py::arg("k"));
  m.def("odd_path_sequence", &odd_path_sequence, py::arg("k"), py::arg("x"));
  m.def("qualifies_centered", &qualifies_centered, py::arg("graph"), py::arg("vertex"));
  m.def("centered_tree_sequence", &centered_tree_sequence, py::arg("graph"), py::arg("vertex"),
        py::arg("cap") = kDefaultSolverCap);

  py::class_<ForcedRun>(m, "ForcedRun")
      .def_readonly("trace", &ForcedRun::trace)
      .def_readonly("forced", &ForcedRun::forced)
      .def_property_readonly("invalid_step",
                             [](const ForcedRun& r) -> py::object {
                               if (r.invalid_step) return py::int_(*r.invalid_step);
                               return py::none();
                             })
      .def("all_forced", &ForcedRun::all_forced)
      .def("first_unforced", [](const ForcedRun& r) -> py::object {
        if (auto u = r.first_unforced()) return py::int_(*u);
        return py::none();
      });

  m.def("forced_run", &forced_run, py::arg("graph"), py::arg("start"), py::arg("sequence"),
        py::arg("choices") = std::vector<Vertex>{});
  m.def(
      "search_perfect_sequence",
      [](const Graph& g, Vertex start, int max_len, int cap) -> py::object {
        auto r = search_perfect_sequence(g, start, max_len, cap);
        if (!r) return py::none();
        return py::cast(*r);
      },
      py::arg("graph"), py::arg("start"), py::arg("max_len") = 8,
      py::arg("cap") = kDefaultSolverCap);
  m.def("parse_sequence", &parse_sequence, py::arg("text"));
  m.def("sequence_to_string", &sequence_to_string, py::arg("sequence"));

  py::class_<CaseResult>(m, "CaseResult")
      .def_readonly("group", &CaseResult::group)
      .def_readonly("name", &CaseResult::name)
      .def_readonly("pass_", &CaseResult::pass)
      .def_readonly("detail", &CaseResult::detail);

  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("suite", &SuiteResult::suite)
      .def_readonly("cases", &SuiteResult::cases)
      .def_readonly("trace_checks", &SuiteResult::trace_checks)
      .def_readonly("trace_ok", &SuiteResult::trace_ok)
      .def_readonly("sandwich_checks", &SuiteResult::sandwich_checks)
      .def_readonly("sandwich_ok", &SuiteResult::sandwich_ok)
      .def("all_passed", &SuiteResult::all_passed)
      .def("passed", &SuiteResult::passed);

  m.def(
      "run_suite",
      [](const std::string& name, int max_n, int count, std::uint32_t seed, int workers) {
        VerifyOptions opt;
        opt.max_n = max_n;
        opt.count = count;
        opt.seed = seed;
        opt.workers = workers;
        return run_suite(name, opt);
      },
      py::arg("name"), py::arg("max_n") = 0, py::arg("count") = 0, py::arg("seed") = 42,
      py::arg("workers") = 1);
  m.def("suite_names", [] { return suite_names(); });

  m.attr("DEFAULT_SOLVER_CAP") = kDefaultSolverCap;
  m.attr("MAX_VERTICES") = kMaxVertices;
#ifdef EXDIR_VERSION
  m.attr("__version__") = EXDIR_VERSION;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
