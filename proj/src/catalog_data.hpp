#pragma once

#include <utility>
#include <vector>

namespace sandgroup::detail {

struct TreeEntry {
  const char* name;
  int vertex_count;
  std::vector<std::pair<int, int>> edges;
};

struct IdentityEntry {
  const char* tree;
  std::vector<int> first_lengths;
  std::vector<long> first_identity;
  std::vector<int> second_lengths;
  std::vector<long> second_identity;
};

const std::vector<TreeEntry>& tree_entries();
const std::vector<IdentityEntry>& first_identity_rows();
const std::vector<IdentityEntry>& second_identity_rows();

}  // namespace sandgroup::detail
