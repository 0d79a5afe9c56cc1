#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sandgroup/graph.hpp"
#include "sandgroup/integer.hpp"
#include "sandgroup/sandpile.hpp"

namespace sandgroup {

/// Trees on 2..8 vertices keyed "<vertices>_<index>", e.g. "6_2".
std::vector<std::string> catalog_names();
std::optional<Tree> find_catalog_tree(std::string_view name);
/// Throws Error("unknown tree").
Tree catalog_tree(std::string_view name);

struct IdentityCase {
  std::string tree;
  CycleLengths lengths;
  Configuration expected;
};

/// identities-A and identities-B: two cases per catalog tree, row-major.
std::vector<IdentityCase> identity_cases(std::string_view table_id);

/// Spanning-tree counts of ladders of 4-, 6- and 8-gons with 1..11 polygons.
inline constexpr int ladder_sides[] = {4, 6, 8};
inline constexpr int ladder_rows = 11;
const std::vector<std::vector<Integer>>& expected_ladder_counts();

struct CellMismatch {
  std::size_t row;
  std::size_t column;
  std::string expected;
  std::string computed;
};

struct TableReport {
  std::string id;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t checked_cells = 0;
  std::vector<CellMismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

std::vector<std::string> table_ids();

/// Recomputes every cell and diffs it against the stored values.
/// Throws Error("unknown table") for ids outside table_ids().
TableReport reproduce_table(std::string_view table_id);

}  // namespace sandgroup
