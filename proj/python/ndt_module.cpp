#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ndt/decompose.hpp"
#include "ndt/density.hpp"
#include "ndt/error.hpp"
#include "ndt/families.hpp"
#include "ndt/hall.hpp"
#include "ndt/io.hpp"
#include "ndt/oracle.hpp"

namespace py = pybind11;
using namespace ndt;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.num(), r.den());
}

py::dict density_dict(const DensityResult& r) {
  py::dict out;
  out["value"] = fraction(r.value);
  out["witness"] = r.witness.vertices;
  return out;
}

Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<Arc> list;
  list.reserve(arcs.size());
  for (auto [t, h] : arcs) list.push_back({t, h});
  return Digraph(n, std::move(list));
}

std::vector<std::pair<int, int>> arc_pairs(const Digraph& d) {
  std::vector<std::pair<int, int>> out;
  for (const Arc& a : d.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

DecompositionKind kind_of(const std::string& kind) {
  if (kind == "branching") return DecompositionKind::Branching;
  if (kind == "pseudo-branching") return DecompositionKind::PseudoBranching;
  throw InputError("unknown kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_ndt, m) {
  m.doc() = "Branching and pseudo-branching decompositions of digraphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<UnsupportedCase>(m, "UnsupportedCase");
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<HypothesisError>(m, "HypothesisError");

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_digraph), py::arg("n"), py::arg("arcs") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("num_vertices", &Digraph::num_vertices)
      .def_property_readonly("num_arcs", &Digraph::num_arcs)
      .def_property_readonly("arcs", &arc_pairs)
      .def("in_degree", &Digraph::in_degree)
      .def("out_degree", &Digraph::out_degree)
      .def("__repr__", [](const Digraph& d) {
        return "<Digraph n=" + std::to_string(d.num_vertices()) + " m=" + std::to_string(d.num_arcs()) + ">";
      });

  m.def("parse_digraph", [](const std::string& text) { return parse_digraph(text); });
  m.def("format_digraph", [](const Digraph& d) { return format_digraph(d); });
  m.def("max_in_degree", &max_in_degree);

  m.def("fractional_arboricity", [](const Digraph& d) { return density_dict(fractional_arboricity(d)); });
  m.def("max_average_degree", [](const Digraph& d) { return density_dict(max_average_degree(d)); });

  m.def("frank_decompose", [](const Digraph& d, int k) { return frank_decompose(d, k).part_of; },
        py::arg("digraph"), py::arg("k"));
  m.def("ndt_branching_decompose",
        [](const Digraph& d, int k, int budget) { return ndt_branching_decompose(d, k, budget).part_of; },
        py::arg("digraph"), py::arg("k"), py::arg("d"));
  m.def(
      "pseudo_ndt_decompose",
      [](const Digraph& g, int k, int budget) -> py::dict {
        const PseudoNdtResult r = pseudo_ndt_decompose(g, k, budget);
        py::dict out;
        out["swaps"] = r.swaps;
        if (r.succeeded()) {
          out["status"] = "ok";
          out["assignment"] = std::get<Decomposition>(r.outcome).part_of;
        } else {
          const auto& c = std::get<DensityCertificate>(r.outcome);
          out["status"] = "certificate";
          out["vertices"] = c.vertices;
          out["ratio"] = fraction(c.ratio);
          out["bound"] = fraction(c.bound);
        }
        return out;
      },
      py::arg("digraph"), py::arg("k"), py::arg("d"));

  m.def(
      "verify",
      [](const Digraph& g, const std::vector<int>& part_of, int parts, const std::string& kind,
         std::optional<int> budget) -> std::optional<std::string> {
        const auto v = verify_decomposition(Decomposition{g, parts, part_of, kind_of(kind)}, budget);
        if (!v) return std::nullopt;
        return v->message;
      },
      py::arg("digraph"), py::arg("assignment"), py::arg("parts"), py::arg("kind") = "branching",
      py::arg("d") = py::none());

  m.def(
      "extract_bounded_branching",
      [](const Digraph& g, const VertexSet& targets, const std::vector<int>& budget) {
        HallInstance inst{g, {}, normalize_vertex_set(g, targets), budget};
        const auto mask = membership_mask(g, inst.targets);
        for (VertexId v = 0; v < g.num_vertices(); ++v)
          if (!mask[v]) inst.sources.push_back(v);
        return extract_bounded_branching(inst).to_vector();
      },
      py::arg("digraph"), py::arg("targets"), py::arg("budget"));

  m.def("gen_sharp", [](int k, int d, int n, bool glued) {
    return glued ? gen_sharp_glued({k, d, n}).graph : gen_sharp_base({k, d, n});
  }, py::arg("k"), py::arg("d"), py::arg("n"), py::arg("glued") = false);
  m.def("gen_tree", [](int k, int depth) { return gen_tree_family({k, depth}); }, py::arg("k"),
        py::arg("depth"));

  m.def("brute_gamma", [](const Digraph& d) { return fraction(brute_gamma(d)); });
  m.def("brute_mad", [](const Digraph& d) { return fraction(brute_mad(d)); });
  m.def(
      "oracle_decompose",
      [](const Digraph& g, int k, std::optional<int> budget, const std::string& kind)
          -> std::optional<std::vector<int>> {
        const OracleOutcome o = brute_decompose(g, k, budget, kind_of(kind));
        if (const auto* dec = std::get_if<Decomposition>(&o)) return dec->part_of;
        return std::nullopt;
      },
      py::arg("digraph"), py::arg("k"), py::arg("d") = py::none(), py::arg("kind") = "branching");
}
