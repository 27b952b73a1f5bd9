#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "zft/charlib.hpp"
#include "zft/enumerate.hpp"
#include "zft/graph.hpp"
#include "zft/jsonio.hpp"
#include "zft/propagation.hpp"
#include "zft/rules.hpp"
#include "zft/throttling.hpp"
#include "zft/verify.hpp"

namespace py = pybind11;

namespace {

std::vector<int> blues(zft::VertexSet s) { return zft::set_to_vector(s); }

py::dict schedule_dict(const zft::Schedule& s) {
  py::dict d;
  d["pt"] = s.pt ? py::object(py::cast(*s.pt)) : py::object(py::none());
  py::list rounds;
  for (zft::VertexSet r : s.rounds) rounds.append(blues(r));
  d["rounds"] = rounds;
  py::list forces;
  for (const zft::TimedForce& tf : s.forces) {
    py::dict f;
    f["src"] = tf.force.source;
    f["dst"] = tf.force.target;
    f["kind"] = zft::kind_name(tf.force.kind);
    f["step"] = tf.step;
    forces.append(f);
  }
  d["forces"] = forces;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "zero forcing propagation and throttling";

  py::register_exception<zft::GuardError>(m, "GuardError");

  py::class_<zft::Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def("order", &zft::Graph::order)
      .def("size", &zft::Graph::size)
      .def("degree", &zft::Graph::degree)
      .def("has_edge", &zft::Graph::has_edge)
      .def("add_edge", py::overload_cast<int, int>(&zft::Graph::add_edge))
      .def("remove_edge", &zft::Graph::remove_edge)
      .def("edges", &zft::Graph::edges)
      .def("degree_sequence", &zft::Graph::degree_sequence)
      .def("__eq__", [](const zft::Graph& a, const zft::Graph& b) { return a == b; })
      .def("__repr__",
           [](const zft::Graph& g) { return "Graph('" + zft::write_graph6(g) + "')"; });

  m.def("generate", &zft::generate, py::arg("kind"), py::arg("n"));
  m.def("complete_path_product", &zft::complete_path_product, py::arg("a"), py::arg("cols"));
  m.def("write_graph6", &zft::write_graph6);
  m.def("parse_graph6", &zft::parse_graph6);
  m.def("canonical_form", &zft::canonical_form, py::arg("g"),
        py::arg("max_n") = zft::kMaxCanonicalVertices);
  m.def("is_isomorphic", &zft::is_isomorphic, py::arg("g"), py::arg("h"),
        py::arg("max_n") = zft::kMaxCanonicalVertices);
  m.def("independence_number", &zft::independence_number);

  m.def(
      "pt",
      [](const std::string& rule, const zft::Graph& g, const std::vector<int>& blue, int max_n) {
        zft::PtOptions opts;
        if (max_n > 0) opts.max_n = max_n;
        zft::PtResult r = zft::pt_of_set(zft::parse_rule(rule), g, zft::vector_to_set(blue), opts);
        py::dict d = schedule_dict(r.schedule);
        d["nodes_explored"] = r.nodes_explored;
        return d;
      },
      py::arg("rule"), py::arg("g"), py::arg("blue"), py::arg("max_n") = 0);

  m.def(
      "throttling_number",
      [](const std::string& rule, const zft::Graph& g, int max_n) {
        zft::ThrottlingResult r = zft::throttling_number(zft::parse_rule(rule), g, max_n);
        py::dict d;
        d["value"] = r.value;
        d["witness"] = blues(r.witness);
        d["schedule"] = schedule_dict(r.schedule);
        return d;
      },
      py::arg("rule"), py::arg("g"), py::arg("max_n") = 0);

  m.def(
      "forcing_number",
      [](const std::string& rule, const zft::Graph& g) {
        zft::ForcingNumberResult r = zft::forcing_number(zft::parse_rule(rule), g);
        py::dict d;
        d["number"] = r.number;
        d["pt"] = r.pt ? py::object(py::cast(*r.pt)) : py::object(py::none());
        d["witness"] = blues(r.witness);
        return d;
      },
      py::arg("rule"), py::arg("g"));

  m.def("th_via_supergraphs", &zft::th_via_supergraphs);

  py::class_<zft::Witness>(m, "Witness")
      .def_readonly("a", &zft::Witness::a)
      .def_readonly("b", &zft::Witness::b)
      .def_readonly("contracted", &zft::Witness::contracted)
      .def_readonly("deleted", &zft::Witness::deleted)
      .def_property_readonly("order", [](const zft::Witness& w) {
        return w.order == zft::WitnessOrder::ContractThenDelete ? "contract_then_delete"
                                                                : "delete_then_contract";
      });

  m.def(
      "obtainable_floor",
      [](const zft::Graph& g, int t) { return zft::obtainable_floor(g, t); },
      py::arg("g"), py::arg("t"));
  m.def(
      "obtainable_standard",
      [](const zft::Graph& g, int t) { return zft::obtainable_standard(g, t); },
      py::arg("g"), py::arg("t"));
  m.def("replay_witness", &zft::replay_witness);

  m.def(
      "catalog",
      [](const std::string& rule, int t) {
        zft::Catalog c = zft::catalog(zft::parse_rule(rule), t);
        py::dict d;
        d["t"] = c.t;
        d["all"] = c.all;
        d["exact"] = c.exact;
        return d;
      },
      py::arg("rule"), py::arg("t"));

  m.def("path_throttling_formula", &zft::path_throttling_formula);
  m.def("cycle_throttling_formula", &zft::cycle_throttling_formula);
  m.def("floor_cycle_formula", &zft::floor_cycle_formula);
  m.def("sqrt_lower_bound", &zft::sqrt_lower_bound);
  m.def("order_upper_bound", &zft::order_upper_bound);
  m.def("alpha_upper_bound", &zft::alpha_upper_bound);

  m.def("suite_names", &zft::suite_names);
  m.def("run_suite", [](const std::string& name) {
    zft::SuiteResult r = zft::run_suite(name);
    return py::make_tuple(r.pass, r.detail);
  });
}
