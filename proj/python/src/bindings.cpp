#include <sstream>
#include <tuple>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cpplc/construction.hpp"
#include "cpplc/instance_gen.hpp"
#include "cpplc/io.hpp"
#include "cpplc/oracle.hpp"
#include "cpplc/solve.hpp"
#include "cpplc/tour_eval.hpp"

namespace py = pybind11;
using namespace cpplc;

namespace {

using EdgeTuple = std::tuple<NodeId, NodeId, double, double>;
using StepTuple = std::tuple<EdgeId, int>;

Instance make_instance(int n, const std::vector<EdgeTuple>& edges, double w) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v, d, q] : edges) out.push_back({u, v, d, q});
  return Instance(n, std::move(out), w);
}

std::vector<StepTuple> to_tuples(const std::vector<ServiceStep>& steps) {
  std::vector<StepTuple> out;
  for (const ServiceStep& s : steps) out.emplace_back(s.edge, static_cast<int>(s.dir));
  return out;
}

std::vector<ServiceStep> from_tuples(const std::vector<StepTuple>& steps) {
  std::vector<ServiceStep> out;
  for (const auto& [e, d] : steps) {
    if (d != 1 && d != 2) throw py::value_error("direction must be 1 or 2");
    out.push_back({e, static_cast<Direction>(d)});
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "CPP-LC solver core";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::enum_<Direction>(m, "Direction")
      .value("FORWARD", Direction::kForward)
      .value("BACKWARD", Direction::kBackward);

  py::enum_<Algorithm>(m, "Algorithm")
      .value("GHC", Algorithm::kGhc)
      .value("ILS", Algorithm::kIls)
      .value("VNS", Algorithm::kVns)
      .value("EA", Algorithm::kEa)
      .value("ACO", Algorithm::kAco)
      .value("EXACT", Algorithm::kExact);

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("node_count"), py::arg("edges"),
           py::arg("curb_weight") = 0.0)
      .def_property_readonly("node_count", &Instance::node_count)
      .def_property_readonly("edge_count", &Instance::edge_count)
      .def_property_readonly("curb_weight", &Instance::curb_weight)
      .def_property_readonly("total_demand", &Instance::total_demand)
      .def_property_readonly("edges",
                             [](const Instance& inst) {
                               std::vector<EdgeTuple> out;
                               for (const Edge& e : inst.edges()) {
                                 out.emplace_back(e.u, e.v, e.length, e.demand);
                               }
                               return out;
                             })
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& inst) {
        return "<cpplc.Instance n=" + std::to_string(inst.node_count()) +
               " m=" + std::to_string(inst.edge_count()) + ">";
      });

  py::class_<ShortestPaths>(m, "ShortestPaths")
      .def("dist", &ShortestPaths::dist)
      .def("path", &ShortestPaths::path);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("best_cost", &SolveResult::best_cost)
      .def_readonly("evals_used", &SolveResult::evals_used)
      .def_readonly("iters_done", &SolveResult::iters_done)
      .def_readonly("wall_seconds", &SolveResult::wall_seconds)
      .def_readonly("history", &SolveResult::history)
      .def_property_readonly("steps",
                             [](const SolveResult& r) { return to_tuples(r.best_tour.steps); })
      .def_property_readonly("order", [](const SolveResult& r) { return r.best_tour.order(); });

  m.def("validate", &validate);
  m.def("all_pairs_shortest_paths", &all_pairs_shortest_paths);

  m.def(
      "dp_cost",
      [](const Instance& inst, const ShortestPaths& paths, const AbbreviatedTour& tour) {
        return dp_cost(inst, paths, tour);
      },
      py::arg("instance"), py::arg("paths"), py::arg("tour"));
  m.def(
      "dp_directions",
      [](const Instance& inst, const ShortestPaths& paths, const AbbreviatedTour& tour) {
        const DirectedTour t = dp_directions(inst, paths, tour);
        return py::make_tuple(t.cost, to_tuples(t.steps));
      },
      "Returns (cost, [(edge, dir), ...]).");
  m.def("evaluate_directed",
        [](const Instance& inst, const ShortestPaths& paths, const std::vector<StepTuple>& steps) {
          return evaluate_directed(inst, paths, from_tuples(steps));
        });
  m.def(
      "expand_walk",
      [](const Instance& inst, const ShortestPaths& paths, const std::vector<StepTuple>& steps) {
        DirectedTour tour{from_tuples(steps), 0.0};
        return format_walk(expand_walk(inst, paths, tour));
      },
      "Closed walk as text: (i,j) serviced, [i,j] deadheaded.");

  m.def("greedy_construct", &greedy_construct);
  m.def(
      "solve",
      [](const Instance& inst, const ShortestPaths& paths, Algorithm alg, std::uint64_t seed,
         int iters, std::optional<std::int64_t> max_evals, std::size_t pop) {
        SolveOptions o;
        o.algorithm = alg;
        o.seed = seed;
        o.iters = iters;
        o.max_evals = max_evals;
        o.pop = pop;
        py::gil_scoped_release release;
        return solve(inst, paths, o);
      },
      py::arg("instance"), py::arg("paths"), py::arg("algorithm") = Algorithm::kEa,
      py::arg("seed") = 1, py::arg("iters") = 100, py::arg("max_evals") = py::none(),
      py::arg("pop") = 10);
  m.def("exact_optimum",
        [](const Instance& inst, const ShortestPaths& paths) { return exact_optimum(inst, paths); });

  m.def(
      "generate",
      [](int n, double density, const std::string& demand, const std::string& weight,
         bool eulerian, std::uint64_t seed) {
        GeneratorOptions o;
        o.n = n;
        o.density = density;
        o.demand = parse_demand_mode(demand);
        o.weight = parse_weight_mode(weight);
        o.eulerian = eulerian;
        o.seed = seed;
        return generate(o);
      },
      py::arg("n") = 10, py::arg("density") = 0.4, py::arg("demand") = "rand",
      py::arg("weight") = "halfQ", py::arg("eulerian") = false, py::arg("seed") = 1);

  m.def("parse_instance", [](const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
  });
  m.def("format_instance", [](const Instance& inst) {
    std::ostringstream out;
    format_instance(out, inst);
    return out.str();
  });
  m.def("read_instance", &read_instance);
  m.def("write_instance", &write_instance);
  m.def(
      "parse_solution",
      [](const std::string& text) {
        std::istringstream in(text);
        const SolutionFile sol = parse_solution(in);
        return py::make_tuple(sol.cost, to_tuples(sol.steps));
      },
      "Returns (stated cost, [(edge, dir), ...]).");
  m.def("format_solution", [](double cost, const std::vector<StepTuple>& steps) {
    std::ostringstream out;
    format_solution(out, DirectedTour{from_tuples(steps), cost});
    return out.str();
  });
}
