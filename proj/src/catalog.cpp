#include "sandgroup/catalog.hpp"

#include <string>

#include "catalog_data.hpp"
#include "sandgroup/error.hpp"
#include "sandgroup/plane.hpp"
#include "sandgroup/polygon.hpp"

namespace sandgroup {

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& entry : detail::tree_entries()) out.emplace_back(entry.name);
  return out;
}

std::optional<Tree> find_catalog_tree(std::string_view name) {
  for (const auto& entry : detail::tree_entries())
    if (name == entry.name) return Tree(entry.vertex_count, entry.edges);
  return std::nullopt;
}

Tree catalog_tree(std::string_view name) {
  auto t = find_catalog_tree(name);
  if (!t) throw Error(ErrorKind::invalid_input, "unknown tree", std::string(name));
  return *t;
}

std::vector<IdentityCase> identity_cases(std::string_view table_id) {
  const std::vector<detail::IdentityEntry>* rows = nullptr;
  if (table_id == "identities-A") rows = &detail::first_identity_rows();
  else if (table_id == "identities-B") rows = &detail::second_identity_rows();
  else throw Error(ErrorKind::invalid_input, "unknown table", std::string(table_id));
  std::vector<IdentityCase> out;
  for (const auto& r : *rows) {
    out.push_back({r.tree, r.first_lengths, Configuration(r.first_identity.begin(), r.first_identity.end())});
    out.push_back({r.tree, r.second_lengths, Configuration(r.second_identity.begin(), r.second_identity.end())});
  }
  return out;
}

const std::vector<std::vector<Integer>>& expected_ladder_counts() {
  static const std::vector<std::vector<Integer>> table = [] {
    const char* cells[ladder_rows][3] = {
        {"4", "6", "8"},
        {"15", "35", "63"},
        {"56", "204", "496"},
        {"209", "1189", "3905"},
        {"780", "6930", "30744"},
        {"2911", "40391", "242047"},
        {"10864", "235416", "1905632"},
        {"40545", "1372105", "15003009"},
        {"151316", "7997214", "118118440"},
        {"564719", "46611179", "929944511"},
        {"2107560", "271669860", "7321437648"},
    };
    std::vector<std::vector<Integer>> out;
    for (const auto& row : cells) out.push_back({parse_integer(row[0]), parse_integer(row[1]), parse_integer(row[2])});
    return out;
  }();
  return table;
}

std::vector<std::string> table_ids() { return {"ladders", "identities-A", "identities-B"}; }

namespace {

template <class T>
std::string bracketed(const std::vector<T>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(values[i]);
  }
  return s + "]";
}

TableReport ladder_report() {
  TableReport report;
  report.id = "ladders";
  report.header = {"n", "tau(4-gon ladder)", "tau(6-gon ladder)", "tau(8-gon ladder)"};
  const auto& expected = expected_ladder_counts();
  for (int n = 1; n <= ladder_rows; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (std::size_t col = 0; col < 3; ++col) {
      const std::string got = to_string(tau_polygon_chain(ladder(ladder_sides[col], n)));
      const std::string want = to_string(expected[n - 1][col]);
      ++report.checked_cells;
      if (got != want) report.mismatches.push_back({static_cast<std::size_t>(n - 1), col + 1, want, got});
      row.push_back(got);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

TableReport identity_report(std::string_view id) {
  TableReport report;
  report.id = std::string(id);
  report.header = {"tree", "lengths", "identity", "lengths", "identity"};
  const auto cases = identity_cases(id);
  for (std::size_t i = 0; i < cases.size(); i += 2) {
    std::vector<std::string> row{cases[i].tree};
    for (std::size_t j = 0; j < 2; ++j) {
      const auto& cs = cases[i + j];
      const auto built = build_G_Tc(catalog_tree(cs.tree), cs.lengths);
      const SandpileModel model(built.graph, built.sink);
      const auto got = bracketed(identity(model));
      const auto want = bracketed(cs.expected);
      ++report.checked_cells;
      if (got != want) report.mismatches.push_back({i / 2, 2 + 2 * j, want, got});
      row.push_back(bracketed(cs.lengths));
      row.push_back(got);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

TableReport reproduce_table(std::string_view table_id) {
  if (table_id == "ladders") return ladder_report();
  if (table_id == "identities-A" || table_id == "identities-B") return identity_report(table_id);
  throw Error(ErrorKind::invalid_input, "unknown table", std::string(table_id));
}

}  // namespace sandgroup
