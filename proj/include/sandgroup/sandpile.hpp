#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sandgroup/graph.hpp"
#include "sandgroup/matrix.hpp"

namespace sandgroup {

/// Chip counts on the non-sink vertices, in increasing vertex order.
using Configuration = std::vector<std::int64_t>;

inline constexpr std::int64_t default_toppling_bound = 100'000'000;

/// A connected multigraph with a sink. Index i of a configuration refers to
/// the i-th non-sink vertex.
class SandpileModel {
 public:
  SandpileModel(MultiGraph graph, int sink, std::int64_t toppling_bound = default_toppling_bound);

  const MultiGraph& graph() const noexcept { return graph_; }
  int sink() const noexcept { return sink_; }
  int size() const noexcept { return static_cast<int>(vertex_.size()); }
  int vertex_of(int index) const { return vertex_.at(index); }
  /// -1 for the sink.
  int index_of(int vertex) const { return index_.at(vertex); }

  std::int64_t degree(int index) const { return degree_[index]; }
  /// Number of edges from the vertex at `index` to the sink.
  std::int64_t sink_edges(int index) const { return sink_edges_[index]; }
  /// Non-sink neighbours as (index, multiplicity).
  const std::vector<std::pair<int, std::int64_t>>& neighbors(int index) const { return neighbors_[index]; }

  const IntMatrix& reduced_laplacian() const noexcept { return reduced_; }
  const Configuration& sigma_max() const noexcept { return sigma_max_; }
  /// The burning configuration: chips each vertex receives when the sink fires once.
  const Configuration& burning() const noexcept { return burning_; }
  const Integer& tau() const noexcept { return tau_; }
  std::int64_t toppling_bound() const noexcept { return toppling_bound_; }

 private:
  MultiGraph graph_;
  int sink_;
  std::int64_t toppling_bound_;
  std::vector<int> vertex_;
  std::vector<int> index_;
  std::vector<std::int64_t> degree_;
  std::vector<std::int64_t> sink_edges_;
  std::vector<std::vector<std::pair<int, std::int64_t>>> neighbors_;
  IntMatrix reduced_;
  Configuration sigma_max_;
  Configuration burning_;
  Integer tau_;
};

struct Stabilization {
  Configuration config;
  /// How often each vertex toppled; config = input - firings * L_q.
  std::vector<std::int64_t> firings;
  std::int64_t topplings = 0;
};

bool is_stable(const SandpileModel& m, std::span<const std::int64_t> c);

/// Topples the lowest-index unstable vertex first, as many times as it can at once.
Stabilization stabilize(const SandpileModel& m, std::span<const std::int64_t> c);

/// Single topplings of uniformly chosen unstable vertices.
Stabilization stabilize_random(const SandpileModel& m, std::span<const std::int64_t> c, std::mt19937_64& rng);

Configuration add(const SandpileModel& m, std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Burning test. Throws Error("unstable") on input that is not stable and non-negative.
bool is_recurrent(const SandpileModel& m, std::span<const std::int64_t> c);

Configuration identity(const SandpileModel& m);

struct Representative {
  Configuration config;
  /// config = c + shift * L_q.
  std::vector<Integer> shift;
};

/// The recurrent configuration equivalent to c modulo the row lattice of L_q.
Representative recurrent_representative(const SandpileModel& m, std::span<const Integer> c);
Representative recurrent_representative(const SandpileModel& m, std::span<const std::int64_t> c);

/// c + x * L_q over the non-sink indices.
std::vector<Integer> apply_firing(const SandpileModel& m, std::span<const Integer> c, std::span<const Integer> x);

}  // namespace sandgroup
