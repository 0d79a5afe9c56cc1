#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sandgroup/sandgroup.hpp"

namespace py = pybind11;
using namespace sandgroup;

namespace {

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

/// A catalog name such as "6_2", or an explicit edge list.
Tree tree_from(const py::object& spec) {
  if (py::isinstance<py::str>(spec)) return catalog_tree(spec.cast<std::string>());
  const auto edges = spec.cast<std::vector<std::pair<int, int>>>();
  int n = 1;
  for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  return Tree(n, edges);
}

PolygonChainSpec chain_from(const py::object& spec) {
  if (py::isinstance<py::str>(spec)) return parse_chain_spec(spec.cast<std::string>());
  return PolygonChainSpec{spec.cast<std::vector<int>>()};
}

py::dict group_dict(const GroupStructure& g) {
  py::dict d;
  d["torsion"] = to_py(g.torsion);
  d["order"] = to_py(g.order);
  d["display"] = g.display();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sandpile groups of outerplane graphs, polygon chains and flowers";

  py::register_exception<Error>(m, "SandgroupError", PyExc_ValueError);

  m.def("catalog_names", &catalog_names);

  m.def(
      "group_of_outerplane",
      [](const py::object& tree, const CycleLengths& c) {
        const auto t = tree_from(tree);
        auto d = group_dict(group_of_outerplane(t, c));
        d["deltas"] = to_py(delta_sequence(t, c).deltas);
        return d;
      },
      py::arg("tree"), py::arg("lengths"));

  m.def(
      "identity",
      [](const py::object& tree, const CycleLengths& c) {
        auto built = build_G_Tc(tree_from(tree), c);
        return identity(SandpileModel(std::move(built.graph), built.sink));
      },
      py::arg("tree"), py::arg("lengths"), "Identity of the tree-plus-sink graph.");

  m.def(
      "tau_chain", [](const py::object& spec) { return to_py(tau_polygon_chain(chain_from(spec))); }, py::arg("spec"));

  m.def(
      "flower",
      [](const std::string& spec) {
        const auto f = parse_flower_spec(spec);
        auto d = group_dict(flower_group(f));
        d["tau"] = to_py(flower_tau(f));
        d["chain_product"] = to_py(flower_chain_product(f));
        d["deltas"] = to_py(flower_deltas(f));
        return d;
      },
      py::arg("spec"));

  m.def(
      "smith_form",
      [](const std::vector<std::vector<long>>& rows) {
        IntMatrix a(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (rows[r].size() != a.cols()) throw Error(ErrorKind::invalid_input, "ragged matrix");
          for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = rows[r][c];
        }
        return to_py(smith_normal_form(a).invariant_factors);
      },
      py::arg("rows"));

  m.def(
      "transfer",
      [](const std::string& graph_json, const Configuration& config) {
        const auto in = parse_plane_graph_json(graph_json);
        const auto r = transfer_config(in.plane, in.sink, config);
        py::dict d;
        d["dual_sink"] = r.dual_sink;
        d["class"] = to_py(r.dual_class);
        d["recurrent"] = r.recurrent.config;
        return d;
      },
      py::arg("graph_json"), py::arg("config"));

  m.def(
      "reproduce_table",
      [](const std::string& id) {
        const auto report = reproduce_table(id);
        py::dict d;
        d["header"] = report.header;
        d["rows"] = report.rows;
        d["checked_cells"] = report.checked_cells;
        d["mismatches"] = report.mismatches.size();
        return d;
      },
      py::arg("id"));
}
