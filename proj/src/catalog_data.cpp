#include "catalog_data.hpp"

namespace sandgroup::detail {

const std::vector<TreeEntry>& tree_entries() {
  static const std::vector<TreeEntry> entries = {
      {"2_0", 2, {{0, 1}}},
      {"3_0", 3, {{0, 1}, {0, 2}}},
      {"4_0", 4, {{0, 1}, {0, 3}, {1, 2}}},
      {"4_1", 4, {{0, 1}, {0, 2}, {0, 3}}},
      {"5_0", 5, {{0, 1}, {0, 3}, {1, 2}, {3, 4}}},
      {"5_1", 5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}}},
      {"5_2", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}},
      {"6_0", 6, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {4, 5}}},
      {"6_1", 6, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {4, 5}}},
      {"6_2", 6, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 3}}},
      {"6_3", 6, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {3, 4}}},
      {"6_4", 6, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}}},
      {"6_5", 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}},
      {"7_0", 7, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {4, 5}, {5, 6}}},
      {"7_1", 7, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {4, 5}, {4, 6}}},
      {"7_2", 7, {{0, 1}, {0, 4}, {0, 6}, {1, 2}, {2, 3}, {4, 5}}},
      {"7_3", 7, {{0, 1}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {5, 6}}},
      {"7_4", 7, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {4, 5}, {4, 6}}},
      {"7_5", 7, {{0, 1}, {0, 4}, {0, 6}, {1, 2}, {1, 3}, {4, 5}}},
      {"7_6", 7, {{0, 1}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3}}},
      {"7_7", 7, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {3, 4}, {5, 6}}},
      {"7_8", 7, {{0, 1}, {0, 3}, {0, 5}, {0, 6}, {1, 2}, {3, 4}}},
      {"7_9", 7, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}}},
      {"7_10", 7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}}},
      {"8_0", 8, {{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}}},
      {"8_1", 8, {{0, 1}, {0, 5}, {1, 2}, {2, 3}, {2, 4}, {5, 6}, {6, 7}}},
      {"8_2", 8, {{0, 1}, {0, 5}, {1, 2}, {2, 3}, {2, 4}, {5, 6}, {5, 7}}},
      {"8_3", 8, {{0, 1}, {0, 5}, {1, 2}, {1, 4}, {2, 3}, {5, 6}, {6, 7}}},
      {"8_4", 8, {{0, 1}, {0, 5}, {1, 2}, {1, 4}, {2, 3}, {5, 6}, {5, 7}}},
      {"8_5", 8, {{0, 1}, {0, 5}, {0, 7}, {1, 2}, {1, 4}, {2, 3}, {5, 6}}},
      {"8_6", 8, {{0, 1}, {0, 4}, {0, 7}, {1, 2}, {2, 3}, {4, 5}, {5, 6}}},
      {"8_7", 8, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {4, 5}, {4, 6}, {4, 7}}},
      {"8_8", 8, {{0, 1}, {0, 4}, {0, 7}, {1, 2}, {2, 3}, {4, 5}, {4, 6}}},
      {"8_9", 8, {{0, 1}, {0, 4}, {0, 6}, {1, 2}, {2, 3}, {4, 5}, {6, 7}}},
      {"8_10", 8, {{0, 1}, {0, 4}, {0, 6}, {0, 7}, {1, 2}, {2, 3}, {4, 5}}},
      {"8_11", 8, {{0, 1}, {0, 6}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {6, 7}}},
      {"8_12", 8, {{0, 1}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {5, 6}, {5, 7}}},
      {"8_13", 8, {{0, 1}, {0, 5}, {0, 7}, {1, 2}, {1, 3}, {1, 4}, {5, 6}}},
      {"8_14", 8, {{0, 1}, {0, 5}, {0, 6}, {0, 7}, {1, 2}, {1, 3}, {1, 4}}},
      {"8_15", 8, {{0, 1}, {0, 4}, {0, 7}, {1, 2}, {1, 3}, {4, 5}, {4, 6}}},
      {"8_16", 8, {{0, 1}, {0, 4}, {0, 6}, {1, 2}, {1, 3}, {4, 5}, {6, 7}}},
      {"8_17", 8, {{0, 1}, {0, 4}, {0, 6}, {0, 7}, {1, 2}, {1, 3}, {4, 5}}},
      {"8_18", 8, {{0, 1}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 2}, {1, 3}}},
      {"8_19", 8, {{0, 1}, {0, 3}, {0, 5}, {0, 7}, {1, 2}, {3, 4}, {5, 6}}},
      {"8_20", 8, {{0, 1}, {0, 3}, {0, 5}, {0, 6}, {0, 7}, {1, 2}, {3, 4}}},
      {"8_21", 8, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 2}}},
      {"8_22", 8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}}},
  };
  return entries;
}

const std::vector<IdentityEntry>& first_identity_rows() {
  static const std::vector<IdentityEntry> rows = {
      {"2_0", {2, 2}, {1, 1}, {3, 3}, {2, 2}},
      {"3_0", {2, 2, 2}, {0, 1, 1}, {2, 3, 3}, {0, 2, 2}},
      {"4_0", {2, 2, 2, 2}, {1, 1, 1, 1}, {2, 2, 3, 3}, {1, 1, 1, 1}},
      {"4_1", {3, 2, 2, 2}, {0, 1, 1, 1}, {3, 3, 3, 3}, {0, 2, 2, 2}},
      {"5_0", {2, 2, 2, 2, 2}, {0, 1, 1, 1, 1}, {2, 2, 3, 2, 3}, {0, 1, 1, 1, 1}},
      {"5_1", {3, 2, 2, 2, 2}, {2, 1, 1, 1, 1}, {3, 2, 3, 3, 3}, {2, 1, 1, 1, 1}},
      {"5_2", {4, 2, 2, 2, 2}, {0, 1, 1, 1, 1}, {4, 3, 3, 3, 3}, {0, 2, 2, 2, 2}},
      {"6_0", {2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1}, {2, 2, 2, 3, 2, 3}, {1, 1, 1, 2, 1, 2}},
      {"6_1", {2, 3, 2, 2, 2, 2}, {0, 2, 1, 1, 1, 1}, {2, 3, 3, 3, 2, 3}, {0, 2, 1, 1, 1, 1}},
      {"6_2", {3, 3, 2, 2, 2, 2}, {2, 2, 1, 1, 1, 1}, {3, 3, 3, 3, 3, 3}, {2, 2, 1, 1, 1, 1}},
      {"6_3", {3, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1}, {3, 2, 3, 2, 3, 3}, {1, 1, 1, 1, 1, 1}},
      {"6_4", {4, 2, 2, 2, 2, 2}, {3, 1, 1, 1, 1, 1}, {4, 2, 3, 3, 3, 3}, {3, 1, 1, 1, 1, 1}},
      {"6_5", {5, 2, 2, 2, 2, 2}, {0, 1, 1, 1, 1, 1}, {5, 3, 3, 3, 3, 3}, {0, 2, 2, 2, 2, 2}},
      {"7_0", {2, 2, 2, 2, 2, 2, 2}, {0, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 3, 2, 2, 3}, {0, 1, 1, 2, 1, 1, 2}},
      {"7_1", {2, 2, 2, 2, 3, 2, 2}, {1, 1, 0, 1, 1, 1, 1}, {2, 2, 2, 3, 3, 3, 3}, {1, 1, 0, 1, 1, 1, 1}},
      {"7_2", {3, 2, 2, 2, 2, 2, 2}, {1, 0, 1, 1, 1, 1, 1}, {3, 2, 2, 3, 2, 3, 3}, {1, 0, 1, 1, 1, 1, 1}},
      {"7_3", {2, 4, 2, 2, 2, 2, 2}, {0, 3, 1, 1, 1, 1, 1}, {2, 4, 3, 3, 3, 2, 3}, {0, 3, 1, 1, 1, 1, 1}},
      {"7_4", {2, 3, 2, 2, 3, 2, 2}, {0, 2, 1, 1, 2, 1, 1}, {2, 3, 3, 3, 3, 3, 3}, {0, 2, 1, 1, 2, 1, 1}},
      {"7_5", {3, 3, 2, 2, 2, 2, 2}, {1, 2, 1, 1, 1, 1, 1}, {3, 3, 3, 3, 2, 3, 3}, {1, 2, 1, 1, 1, 1, 1}},
      {"7_6", {4, 3, 2, 2, 2, 2, 2}, {3, 2, 1, 1, 1, 1, 1}, {4, 3, 3, 3, 3, 3, 3}, {3, 2, 1, 1, 1, 1, 1}},
      {"7_7", {3, 2, 2, 2, 2, 2, 2}, {0, 1, 1, 1, 1, 1, 1}, {3, 2, 3, 2, 3, 2, 3}, {0, 1, 1, 1, 1, 1, 1}},
      {"7_8", {4, 2, 2, 2, 2, 2, 2}, {2, 1, 1, 1, 1, 1, 1}, {4, 2, 3, 2, 3, 3, 3}, {2, 1, 1, 1, 1, 1, 1}},
      {"7_9", {5, 2, 2, 2, 2, 2, 2}, {4, 1, 1, 1, 1, 1, 1}, {5, 2, 3, 3, 3, 3, 3}, {4, 1, 1, 1, 1, 1, 1}},
      {"7_10", {6, 2, 2, 2, 2, 2, 2}, {0, 1, 1, 1, 1, 1, 1}, {6, 3, 3, 3, 3, 3, 3}, {0, 2, 2, 2, 2, 2, 2}},
      {"8_0", {2, 2, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 3, 2, 2, 3}, {1, 1, 1, 1, 1, 1, 1, 1}},
      {"8_1", {2, 2, 3, 2, 2, 2, 2, 2}, {1, 1, 0, 1, 1, 1, 1, 1}, {2, 2, 3, 3, 3, 2, 2, 3}, {1, 1, 0, 1, 1, 1, 1, 2}},
      {"8_2", {2, 2, 3, 2, 2, 3, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 3, 3, 3, 3, 3, 3}, {1, 1, 1, 1, 1, 1, 1, 1}},
      {"8_3", {2, 3, 2, 2, 2, 2, 2, 2}, {1, 2, 1, 0, 1, 1, 1, 1}, {2, 3, 2, 3, 3, 2, 2, 3}, {1, 2, 1, 0, 2, 1, 1, 2}},
      {"8_4", {2, 3, 2, 2, 2, 3, 2, 2}, {0, 1, 1, 1, 1, 2, 1, 1}, {2, 3, 2, 3, 3, 3, 3, 3}, {0, 1, 1, 1, 1, 2, 1, 1}},
      {"8_5", {3, 3, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {3, 3, 2, 3, 3, 2, 3, 3}, {1, 1, 1, 1, 1, 1, 1, 1}},
      {"8_6", {3, 2, 2, 2, 2, 2, 2, 2}, {2, 1, 1, 0, 1, 1, 0, 1}, {3, 2, 2, 3, 2, 2, 3, 3}, {2, 1, 1, 0, 1, 1, 0, 2}},
      {"8_7", {2, 2, 2, 2, 4, 2, 2, 2}, {1, 1, 0, 1, 2, 1, 1, 1}, {2, 2, 2, 3, 4, 3, 3, 3}, {1, 1, 0, 1, 2, 1, 1, 1}},
      {"8_8", {3, 2, 2, 2, 3, 2, 2, 2}, {1, 0, 1, 1, 2, 1, 1, 1}, {3, 2, 2, 3, 3, 3, 3, 3}, {1, 0, 1, 1, 2, 1, 1, 1}},
      {"8_9", {3, 2, 2, 2, 2, 2, 2, 2}, {2, 1, 1, 1, 1, 1, 1, 1}, {3, 2, 2, 3, 2, 3, 2, 3}, {2, 1, 1, 2, 1, 2, 1, 2}},
      {"8_10", {4, 2, 2, 2, 2, 2, 2, 2}, {2, 0, 1, 1, 1, 1, 1, 1}, {4, 2, 2, 3, 2, 3, 3, 3}, {2, 0, 1, 1, 1, 1, 1, 1}},
      {"8_11", {2, 5, 2, 2, 2, 2, 2, 2}, {0, 4, 1, 1, 1, 1, 1, 1}, {2, 5, 3, 3, 3, 3, 2, 3}, {0, 4, 1, 1, 1, 1, 1, 1}},
      {"8_12", {2, 4, 2, 2, 2, 3, 2, 2}, {0, 3, 1, 1, 1, 2, 1, 1}, {2, 4, 3, 3, 3, 3, 3, 3}, {0, 3, 1, 1, 1, 2, 1, 1}},
      {"8_13", {3, 4, 2, 2, 2, 2, 2, 2}, {1, 3, 1, 1, 1, 1, 1, 1}, {3, 4, 3, 3, 3, 2, 3, 3}, {1, 3, 1, 1, 1, 1, 1, 1}},
      {"8_14", {4, 4, 2, 2, 2, 2, 2, 2}, {3, 3, 1, 1, 1, 1, 1, 1}, {4, 4, 3, 3, 3, 3, 3, 3}, {3, 3, 1, 1, 1, 1, 1, 1}},
      {"8_15", {3, 3, 2, 2, 3, 2, 2, 2}, {1, 2, 1, 1, 2, 1, 1, 1}, {3, 3, 3, 3, 3, 3, 3, 3}, {1, 2, 1, 1, 2, 1, 1, 1}},
      {"8_16", {3, 3, 2, 2, 2, 2, 2, 2}, {0, 2, 1, 1, 1, 1, 1, 1}, {3, 3, 3, 3, 2, 3, 2, 3}, {0, 2, 1, 1, 1, 1, 1, 1}},
      {"8_17", {4, 3, 2, 2, 2, 2, 2, 2}, {2, 2, 1, 1, 1, 1, 1, 1}, {4, 3, 3, 3, 2, 3, 3, 3}, {2, 2, 1, 1, 1, 1, 1, 1}},
      {"8_18", {5, 3, 2, 2, 2, 2, 2, 2}, {4, 2, 1, 1, 1, 1, 1, 1}, {5, 3, 3, 3, 3, 3, 3, 3}, {4, 2, 1, 1, 1, 1, 1, 1}},
      {"8_19", {4, 2, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {4, 2, 3, 2, 3, 2, 3, 3}, {1, 1, 1, 1, 1, 1, 1, 1}},
      {"8_20", {5, 2, 2, 2, 2, 2, 2, 2}, {3, 1, 1, 1, 1, 1, 1, 1}, {5, 2, 3, 2, 3, 3, 3, 3}, {3, 1, 1, 1, 1, 1, 1, 1}},
      {"8_21", {6, 2, 2, 2, 2, 2, 2, 2}, {5, 1, 1, 1, 1, 1, 1, 1}, {6, 2, 3, 3, 3, 3, 3, 3}, {5, 1, 1, 1, 1, 1, 1, 1}},
      {"8_22", {7, 2, 2, 2, 2, 2, 2, 2}, {0, 1, 1, 1, 1, 1, 1, 1}, {7, 3, 3, 3, 3, 3, 3, 3}, {0, 2, 2, 2, 2, 2, 2, 2}},
  };
  return rows;
}

const std::vector<IdentityEntry>& second_identity_rows() {
  static const std::vector<IdentityEntry> rows = {
      {"2_0", {2, 2}, {1, 1}, {3, 3}, {2, 2}},
      {"3_0", {3, 2, 2}, {1, 1, 1}, {4, 3, 3}, {2, 2, 2}},
      {"4_0", {3, 3, 2, 2}, {1, 1, 1, 1}, {4, 4, 3, 3}, {2, 2, 2, 2}},
      {"4_1", {4, 2, 2, 2}, {1, 1, 1, 1}, {5, 3, 3, 3}, {2, 2, 2, 2}},
      {"5_0", {3, 3, 2, 3, 2}, {1, 1, 1, 1, 1}, {4, 4, 3, 4, 3}, {2, 2, 2, 2, 2}},
      {"5_1", {4, 3, 2, 2, 2}, {1, 1, 1, 1, 1}, {5, 4, 3, 3, 3}, {2, 2, 2, 2, 2}},
      {"5_2", {5, 2, 2, 2, 2}, {1, 1, 1, 1, 1}, {6, 3, 3, 3, 3}, {2, 2, 2, 2, 2}},
      {"6_0", {3, 3, 3, 2, 3, 2}, {1, 1, 1, 1, 1, 1}, {4, 4, 4, 3, 4, 3}, {2, 2, 2, 2, 2, 2}},
      {"6_1", {3, 4, 2, 2, 3, 2}, {1, 1, 1, 1, 1, 1}, {4, 5, 3, 3, 4, 3}, {2, 2, 2, 2, 2, 2}},
      {"6_2", {4, 4, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1}, {5, 5, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2}},
      {"6_3", {4, 3, 2, 3, 2, 2}, {1, 1, 1, 1, 1, 1}, {5, 4, 3, 4, 3, 3}, {2, 2, 2, 2, 2, 2}},
      {"6_4", {5, 3, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1}, {6, 4, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2}},
      {"6_5", {6, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1}, {7, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2}},
      {"7_0", {3, 3, 3, 2, 3, 3, 2}, {1, 1, 1, 1, 1, 1, 1}, {4, 4, 4, 3, 4, 4, 3}, {2, 2, 2, 2, 2, 2, 2}},
      {"7_1", {3, 3, 3, 2, 4, 2, 2}, {1, 1, 1, 1, 1, 1, 1}, {4, 4, 4, 3, 5, 3, 3}, {2, 2, 2, 2, 2, 2, 2}},
      {"7_2", {4, 3, 3, 2, 3, 2, 2}, {1, 1, 1, 1, 1, 1, 1}, {5, 4, 4, 3, 4, 3, 3}, {2, 2, 2, 2, 2, 2, 2}},
      {"7_3", {3, 5, 2, 2, 2, 3, 2}, {1, 1, 1, 1, 1, 1, 1}, {4, 6, 3, 3, 3, 4, 3}, {2, 2, 2, 2, 2, 2, 2}},
      {"7_4", {3, 4, 2, 2, 4, 2, 2}, {1, 1, 1, 1, 1, 1, 1}, {4, 5, 3, 3, 5, 3, 3}, {2, 2, 2, 2, 2, 2, 2}},
      {"7_5", {4, 4, 2, 2, 3, 2, 2}, {1, 1, 1, 1, 1, 1, 1}, {5, 5, 3, 3, 4, 3, 3}, {2, 2, 2, 2, 2, 2, 2}},
      {"7_6", {5, 4, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1}, {6, 5, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2}},
      {"7_7", {4, 3, 2, 3, 2, 3, 2}, {1, 1, 1, 1, 1, 1, 1}, {5, 4, 3, 4, 3, 4, 3}, {2, 2, 2, 2, 2, 2, 2}},
      {"7_8", {5, 3, 2, 3, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1}, {6, 4, 3, 4, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2}},
      {"7_9", {6, 3, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1}, {7, 4, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2}},
      {"7_10", {7, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1}, {8, 3, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2}},
      {"8_0", {3, 3, 3, 3, 2, 3, 3, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {4, 4, 4, 4, 3, 4, 4, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_1", {3, 3, 4, 2, 2, 3, 3, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {4, 4, 5, 3, 3, 4, 4, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_2", {3, 3, 4, 2, 2, 4, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {4, 4, 5, 3, 3, 5, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_3", {3, 4, 3, 2, 2, 3, 3, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {4, 5, 4, 3, 3, 4, 4, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_4", {3, 4, 3, 2, 2, 4, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {4, 5, 4, 3, 3, 5, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_5", {4, 4, 3, 2, 2, 3, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {5, 5, 4, 3, 3, 4, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_6", {4, 3, 3, 2, 3, 3, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {5, 4, 4, 3, 4, 4, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_7", {3, 3, 3, 2, 5, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {4, 4, 4, 3, 6, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_8", {4, 3, 3, 2, 4, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {5, 4, 4, 3, 5, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_9", {4, 3, 3, 2, 3, 2, 3, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {5, 4, 4, 3, 4, 3, 4, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_10", {5, 3, 3, 2, 3, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {6, 4, 4, 3, 4, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_11", {3, 6, 2, 2, 2, 2, 3, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {4, 7, 3, 3, 3, 3, 4, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_12", {3, 5, 2, 2, 2, 4, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {4, 6, 3, 3, 3, 5, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_13", {4, 5, 2, 2, 2, 3, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {5, 6, 3, 3, 3, 4, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_14", {5, 5, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {6, 6, 3, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_15", {4, 4, 2, 2, 4, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {5, 5, 3, 3, 5, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_16", {4, 4, 2, 2, 3, 2, 3, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {5, 5, 3, 3, 4, 3, 4, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_17", {5, 4, 2, 2, 3, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {6, 5, 3, 3, 4, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_18", {6, 4, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {7, 5, 3, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_19", {5, 3, 2, 3, 2, 3, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {6, 4, 3, 4, 3, 4, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_20", {6, 3, 2, 3, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {7, 4, 3, 4, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_21", {7, 3, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {8, 4, 3, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
      {"8_22", {8, 2, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {9, 3, 3, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}},
  };
  return rows;
}

}  // namespace sandgroup::detail
