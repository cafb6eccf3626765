#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

#include "leafpow/chordal.hpp"
#include "leafpow/formats.hpp"
#include "leafpow/gadgets.hpp"
#include "leafpow/obstruction.hpp"
#include "leafpow/recognizer.hpp"

namespace py = pybind11;
using namespace leafpow;

namespace {

py::object ordering_or_none(const Graph& g, const ChordalityResult& r) {
  if (!r.holds) return py::none();
  py::list out;
  for (Vertex v : r.witness->order) out.append(g.label(v));
  return out;
}

py::dict gadget_dict(const GadgetGraph& gadget) {
  py::dict anchors;
  for (const auto& [name, v] : gadget.anchors) anchors[py::str(name)] = gadget.graph.label(v);
  py::dict d;
  d["graph"] = gadget.graph;
  d["anchors"] = anchors;
  return d;
}

RecognizeOptions make_options(bool linear, std::optional<std::uint64_t> node_budget,
                              std::optional<double> time_budget_s) {
  RecognizeOptions o;
  o.linear_only = linear;
  o.node_budget = node_budget;
  if (time_budget_s) {
    o.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(*time_budget_s * 1000));
  }
  return o;
}

DistanceConstraintSet make_constraints(
    const std::map<std::pair<std::string, std::string>, Length>& pins,
    const std::map<std::string, Length>& min_dist,
    const std::map<std::pair<std::string, std::string>, std::pair<Length, Length>>& bounds) {
  DistanceConstraintSet c;
  for (const auto& [ab, d] : pins) c.pin(ab.first, ab.second, d);
  for (const auto& [v, d] : min_dist) c.min_distance(v, d);
  for (const auto& [ab, lh] : bounds) c.bound(ab.first, ab.second, lh.first, lh.second);
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Leaf power gadgets, exact root verification, recognition and obstructions.";

  // Lives as long as the interpreter; `code` holds the library error name.
  static py::handle error_type =
      PyErr_NewException("leafpow._core.LeafPowError", PyExc_RuntimeError, nullptr);
  m.add_object("LeafPowError", error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(py::str(e.what()));
      exc.attr("code") = std::string(error_code_name(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::vector<std::string> labels,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
             return graph_from_label_edges(std::move(labels), edges);
           }),
           py::arg("labels"), py::arg("edges") = std::vector<std::pair<std::string, std::string>>{})
      .def_property_readonly("labels", &Graph::labels)
      .def("__len__", &Graph::size)
      .def("edge_count", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [u, v] : g.edges()) out.emplace_back(g.label(u), g.label(v));
             return out;
           })
      .def("adjacent",
           [](const Graph& g, const std::string& a, const std::string& b) {
             return g.adjacent(g.index_of(a), g.index_of(b));
           })
      .def("neighbors",
           [](const Graph& g, const std::string& v) {
             std::vector<std::string> out;
             for (Vertex u : g.neighbors(g.index_of(v))) out.push_back(g.label(u));
             return out;
           })
      .def("induced",
           [](const Graph& g, const std::vector<std::string>& keep) {
             std::vector<Vertex> vs;
             for (const auto& l : keep) vs.push_back(g.index_of(l));
             return induced_subgraph(g, make_vertex_set(g, vs));
           })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.size()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges>";
      });

  py::class_<LeafTree>(m, "LeafTree")
      .def_property_readonly("leaf_labels", &LeafTree::leaf_labels)
      .def("node_count", &LeafTree::node_count)
      .def("leaf_count", &LeafTree::leaf_count)
      .def("distance",
           [](const LeafTree& t, const std::string& a, const std::string& b) {
             return leaf_distance(t, a, b);
           })
      .def("min_distance",
           [](const LeafTree& t, const std::string& v) { return min_leaf_distance(t, v); })
      .def("distance_matrix",
           [](const LeafTree& t) {
             const DistanceMatrix d = distance_matrix(t);
             std::vector<std::vector<Length>> rows(d.size(), std::vector<Length>(d.size()));
             for (std::size_t i = 0; i < d.size(); ++i) {
               for (std::size_t j = 0; j < d.size(); ++j) rows[i][j] = d.at(i, j);
             }
             return py::make_tuple(d.labels, rows);
           })
      .def("power", [](const LeafTree& t, Length k) { return leaf_power_graph(t, k); })
      .def("is_caterpillar", [](const LeafTree& t) { return is_caterpillar_subdivision(t).ok; })
      .def("__str__", [](const LeafTree& t) { return emit_tree(t); })
      .def("__repr__", [](const LeafTree& t) { return "<LeafTree " + emit_tree(t) + ">"; });

  m.def("parse_graph", [](const std::string& s) { return parse_graph(s); });
  m.def("emit_graph", &emit_graph);
  m.def("parse_graph_dot", [](const std::string& s) { return parse_graph_dot(s); });
  m.def("emit_graph_dot", &emit_graph_dot);
  m.def("parse_tree", [](const std::string& s) { return parse_tree(s); });
  m.def("emit_tree", &emit_tree);

  m.def("is_chordal", [](const Graph& g) { return ordering_or_none(g, is_chordal(g)); },
        "Perfect elimination ordering as labels, or None.");
  m.def("is_strongly_chordal",
        [](const Graph& g) { return ordering_or_none(g, is_strongly_chordal(g)); },
        "Simple elimination ordering as labels, or None.");

  m.def("verify_leaf_root", [](const LeafTree& t, const Graph& g, Length k) {
    const RootCheck r = verify_leaf_root(t, g, k);
    py::list problems;
    for (const Discrepancy& d : r.discrepancies) {
      const char* kind = d.kind == Discrepancy::Kind::kMissingEdge ? "missing-edge"
                         : d.kind == Discrepancy::Kind::kExtraEdge ? "extra-edge"
                                                                   : "leaf-set-mismatch";
      problems.append(py::make_tuple(kind, d.a, d.b, d.distance));
    }
    return py::make_tuple(r.ok, problems);
  });

  m.def("top_gadget", [](int k) { return gadget_dict(top_gadget(k)); });
  m.def("bot_gadget", [] { return gadget_dict(bot_gadget()); });
  m.def("interior_gadget", [](int k) { return gadget_dict(interior_gadget(k)); });
  m.def("linear_top_gadget", [](int k) { return gadget_dict(linear_top_gadget(k)); });
  m.def("top_root", &top_root);
  m.def("bot_root", &bot_root);
  m.def("interior_root_T", &interior_root_T);
  m.def("interior_root_R", &interior_root_R);
  m.def("linear_top_root", &linear_top_root);
  m.def("merged_root_minus_bot", &merged_root_minus_bot);
  m.def("merged_root_minus_top", &merged_root_minus_top);

  m.def(
      "assemble_Hn",
      [](int k, int n, std::optional<std::string> minus) {
        const AssembledFamily h = assemble_Hn(k, n);
        std::vector<std::string> junctions;
        for (Vertex v : h.junctions) junctions.push_back(h.graph.label(v));
        py::dict d;
        d["junctions"] = junctions;
        if (!minus) {
          d["graph"] = h.graph;
        } else if (*minus == "top" || *minus == "bot") {
          d["graph"] = family_minus(h, *minus == "top" ? Part::kTop : Part::kBot);
        } else {
          throw Error(ErrorCode::kInvalidArgument, "minus must be 'top' or 'bot'");
        }
        return d;
      },
      py::arg("k"), py::arg("n"), py::arg("minus") = py::none());

  m.def(
      "recognize",
      [](const Graph& g, Length k, bool linear,
         const std::map<std::pair<std::string, std::string>, Length>& pins,
         const std::map<std::string, Length>& min_dist,
         const std::map<std::pair<std::string, std::string>, std::pair<Length, Length>>& bounds,
         std::optional<std::uint64_t> node_budget, std::optional<double> time_budget_s) {
        RecognitionResult out;
        {
          py::gil_scoped_release release;
          out = recognize(g, k, make_constraints(pins, min_dist, bounds),
                          make_options(linear, node_budget, time_budget_s));
        }
        py::dict d;
        d["verdict"] = std::string(verdict_name(out.verdict));
        d["witness"] = out.witness ? py::cast(*out.witness) : py::none();
        d["topologies"] = out.stats.topologies;
        d["partial_topologies"] = out.stats.partial_topologies;
        d["systems"] = out.stats.systems;
        d["elapsed_ms"] = out.stats.elapsed_ms;
        return d;
      },
      py::arg("graph"), py::arg("k"), py::arg("linear") = false,
      py::arg("pins") = std::map<std::pair<std::string, std::string>, Length>{},
      py::arg("min_dist") = std::map<std::string, Length>{},
      py::arg("bounds") = std::map<std::pair<std::string, std::string>, std::pair<Length, Length>>{},
      py::arg("node_budget") = py::none(), py::arg("time_budget_s") = py::none());

  m.def(
      "extract_minimal",
      [](const Graph& g, Length k, std::optional<std::uint64_t> node_budget,
         std::optional<double> time_budget_s) {
        MinimalityCertificate cert;
        CertificateReport check;
        {
          py::gil_scoped_release release;
          cert = extract_minimal(g, k, make_options(false, node_budget, time_budget_s));
          check = verify_certificate(cert);
        }
        py::dict deletions;
        for (const DeletionCheck& c : cert.checks) {
          deletions[py::str(c.removed)] = c.result.witness ? py::cast(*c.result.witness) : py::none();
        }
        py::dict d;
        d["subgraph"] = cert.subgraph;
        d["removed"] = cert.removed;
        d["deletion_roots"] = deletions;
        d["self_check"] = std::string(verdict_name(cert.self_check.verdict));
        d["verified"] = check.ok;
        d["problems"] = check.problems;
        return d;
      },
      py::arg("graph"), py::arg("k"), py::arg("node_budget") = py::none(),
      py::arg("time_budget_s") = py::none());
}
