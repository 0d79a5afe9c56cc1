#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sandgroup/sandgroup.hpp"

using namespace sandgroup;
using nlohmann::json;

namespace {

constexpr int table_mismatch_exit = 5;

struct Options {
  std::string tree, lengths, graph, chain, flower, config, id;
  std::string format = "text";
};

std::string read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "unreadable file", path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "catalog:NAME" picks a built-in tree; anything else is a tree file.
Tree load_tree(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) return catalog_tree(source.substr(8));
  return parse_tree_text(read_input(source));
}

PlaneGraphInput load_graph(const std::string& path) { return parse_plane_graph_json(read_input(path)); }

json strings(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string joined(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

json group_json(const GroupStructure& g) {
  return {{"torsion", strings(g.torsion)}, {"order", to_string(g.order)}, {"display", g.display()}};
}

std::string group_line(const GroupStructure& g) { return g.display() + " (order " + to_string(g.order) + ")"; }

void need(const std::string& value, const char* flag, const char* command) {
  if (value.empty())
    throw Error(ErrorKind::invalid_input, "missing option", std::string(command) + " needs " + flag);
}

struct Report {
  json payload;
  std::string text;
  int status = 0;
};

Report run_group(const Options& o) {
  Report r;
  if (!o.graph.empty()) {
    const auto in = load_graph(o.graph);
    const auto g = cokernel_torsion(reduced_laplacian(in.plane.graph(), in.sink));
    r.payload = group_json(g);
    r.text = group_line(g);
    return r;
  }
  need(o.tree, "--tree or --graph", "group");
  need(o.lengths, "--lengths", "group");
  const auto t = load_tree(o.tree);
  const auto c = parse_lengths(o.lengths);
  const auto seq = delta_sequence(t, c);
  const auto g = group_of_outerplane(t, c);
  r.payload = group_json(g);
  r.payload["deltas"] = strings(seq.deltas);
  json witnesses = json::array();
  for (const auto& w : seq.witnesses) witnesses.push_back(strings(w));
  r.payload["witnesses"] = witnesses;
  r.text = group_line(g);
  return r;
}

Report run_identity(const Options& o) {
  Report r;
  std::optional<SandpileModel> model;
  if (!o.graph.empty()) {
    auto in = load_graph(o.graph);
    model.emplace(in.plane.graph(), in.sink);
  } else {
    need(o.tree, "--tree or --graph", "identity");
    need(o.lengths, "--lengths", "identity");
    auto built = build_G_Tc(load_tree(o.tree), parse_lengths(o.lengths));
    model.emplace(std::move(built.graph), built.sink);
  }
  const auto e = identity(*model);
  r.payload = {{"identity", e}};
  r.text = format_configuration(e);
  return r;
}

Report run_tau(const Options& o) {
  Report r;
  Integer tau;
  if (!o.chain.empty()) {
    const auto spec = parse_chain_spec(o.chain);
    tau = tau_polygon_chain(spec);
    if (tau != tau_polygon_chain_matchings(spec)) throw Error(ErrorKind::infeasible, "inconsistent chain counts");
  } else if (!o.graph.empty()) {
    tau = spanning_tree_count(load_graph(o.graph).plane.graph());
  } else {
    need(o.tree, "--chain, --graph or --tree", "tau");
    need(o.lengths, "--lengths", "tau");
    tau = spanning_tree_count(build_outerplane(load_tree(o.tree), parse_lengths(o.lengths)).plane.graph());
  }
  r.payload = {{"tau", to_string(tau)}};
  r.text = to_string(tau);
  return r;
}

Report run_flower(const Options& o) {
  need(o.flower, "--flower", "flower");
  const auto spec = parse_flower_spec(o.flower);
  const Integer tau = flower_tau(spec);
  const Integer product = flower_chain_product(spec);
  const auto deltas = flower_deltas(spec);
  const auto g = flower_group(spec);
  Report r;
  r.payload = group_json(g);
  r.payload["tau"] = to_string(tau);
  r.payload["chain_product"] = to_string(product);
  r.payload["deltas"] = strings(deltas);
  r.text = "tau: " + to_string(tau) + "\nchain product: " + to_string(product) + "\ndeltas: " + joined(deltas) +
           "\ngroup: " + group_line(g);
  return r;
}

Report run_transfer(const Options& o) {
  need(o.graph, "--graph", "transfer");
  need(o.config, "--config", "transfer");
  const auto in = load_graph(o.graph);
  const auto result = transfer_config(in.plane, in.sink, parse_configuration(o.config));
  Report r;
  r.payload = {{"dual_sink", result.dual_sink},
               {"flow", strings(result.flow)},
               {"class", strings(result.dual_class)},
               {"recurrent", result.recurrent.config},
               {"shift", strings(result.recurrent.shift)}};
  r.text = "dual sink: face " + std::to_string(result.dual_sink) + "\nclass: " + joined(result.dual_class) +
           "\nrecurrent: " + format_configuration(result.recurrent.config);
  return r;
}

Report run_table(const Options& o) {
  need(o.id, "--id", "table");
  const auto report = reproduce_table(o.id);
  Report r;
  json mismatches = json::array();
  for (const auto& m : report.mismatches)
    mismatches.push_back({{"row", m.row}, {"column", m.column}, {"expected", m.expected}, {"computed", m.computed}});
  r.payload = {{"id", report.id},
               {"header", report.header},
               {"rows", report.rows},
               {"checked_cells", report.checked_cells},
               {"mismatches", mismatches}};
  std::ostringstream text;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) text << (i ? "\t" : "") << cells[i];
    text << "\n";
  };
  line(report.header);
  for (const auto& row : report.rows) line(row);
  for (const auto& m : report.mismatches)
    text << "mismatch row " << m.row << " column " << m.column << ": expected " << m.expected << ", computed "
         << m.computed << "\n";
  text << report.checked_cells - report.mismatches.size() << "/" << report.checked_cells << " cells match";
  r.text = text.str();
  r.status = report.ok() ? 0 : table_mismatch_exit;
  return r;
}

void print_error(int code, const std::string& kind, const std::string& tag, const std::string& message) {
  json e = {{"schema", 1}, {"error", {{"code", code}, {"kind", kind}, {"tag", tag}, {"message", message}}}};
  std::cerr << e.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sandpile groups of outerplane graphs, polygon chains and flowers"};
  app.set_version_flag("--version", "sandgroup " SANDGROUP_VERSION);
  app.require_subcommand(1, 1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto* group = app.add_subcommand("group", "Sandpile group of an outerplane graph or plane graph");
  group->add_option("--tree", o.tree, "Tree file or catalog:NAME");
  group->add_option("--lengths", o.lengths, "Cycle lengths, comma separated");
  group->add_option("--graph", o.graph, "Plane graph JSON file");
  add_format(group);

  auto* ident = app.add_subcommand("identity", "Identity of the tree-plus-sink graph or a plane graph");
  ident->add_option("--tree", o.tree, "Tree file or catalog:NAME");
  ident->add_option("--lengths", o.lengths, "Cycle lengths, comma separated");
  ident->add_option("--graph", o.graph, "Plane graph JSON file");
  add_format(ident);

  auto* tau = app.add_subcommand("tau", "Spanning-tree count");
  tau->add_option("--chain", o.chain, "Polygon chain, k1,k2,... or kxn");
  tau->add_option("--tree", o.tree, "Tree file or catalog:NAME");
  tau->add_option("--lengths", o.lengths, "Cycle lengths, comma separated");
  tau->add_option("--graph", o.graph, "Plane graph JSON file");
  add_format(tau);

  auto* flower = app.add_subcommand("flower", "Spanning trees and group of a polygon flower");
  flower->add_option("--flower", o.flower, "l; chain; chain; ...")->required();
  add_format(flower);

  auto* transfer = app.add_subcommand("transfer", "Move a configuration to the dual graph");
  transfer->add_option("--graph", o.graph, "Plane graph JSON file")->required();
  transfer->add_option("--config", o.config, "Configuration on the non-sink vertices")->required();
  add_format(transfer);

  auto* table = app.add_subcommand("table", "Recompute a reference table");
  table->add_option("--id", o.id, "Table id")->required()->check(CLI::IsMember(table_ids()));
  add_format(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error(static_cast<int>(ErrorKind::invalid_input), kind_name(ErrorKind::invalid_input), "usage", e.what());
    return static_cast<int>(ErrorKind::invalid_input);
  }

  try {
    Report r;
    std::string command;
    if (*group) r = run_group(o), command = "group";
    else if (*ident) r = run_identity(o), command = "identity";
    else if (*tau) r = run_tau(o), command = "tau";
    else if (*flower) r = run_flower(o), command = "flower";
    else if (*transfer) r = run_transfer(o), command = "transfer";
    else r = run_table(o), command = "table";

    if (o.format == "json") {
      json out = {{"schema", 1}, {"command", command}};
      out.update(r.payload);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << r.text << "\n";
    }
    return r.status;
  } catch (const Error& e) {
    print_error(static_cast<int>(e.kind()), kind_name(e.kind()), e.tag(), e.what());
    return static_cast<int>(e.kind());
  }
}
