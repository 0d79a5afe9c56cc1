#include "sandgroup/sandpile.hpp"

#include <limits>
#include <set>
#include <string>

#include "sandgroup/error.hpp"
#include "sandgroup/laplacian.hpp"

namespace sandgroup {

SandpileModel::SandpileModel(MultiGraph graph, int sink, std::int64_t toppling_bound)
    : graph_(std::move(graph)), sink_(sink), toppling_bound_(toppling_bound) {
  const int n = graph_.vertex_count();
  if (sink_ < 0 || sink_ >= n) throw Error(ErrorKind::invalid_input, "vertex out of range", "sink " + std::to_string(sink_));
  if (!graph_.is_connected()) throw Error(ErrorKind::invalid_input, "disconnected");
  index_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (v == sink_) continue;
    index_[v] = static_cast<int>(vertex_.size());
    vertex_.push_back(v);
  }
  const int k = size();
  degree_.assign(k, 0);
  sink_edges_.assign(k, 0);
  neighbors_.resize(k);
  for (int i = 0; i < k; ++i) {
    const int v = vertex_[i];
    std::vector<std::int64_t> mult(n, 0);
    for (int e : graph_.incident_edges(v)) ++mult[graph_.opposite(e, v)];
    degree_[i] = graph_.degree(v);
    sink_edges_[i] = mult[sink_];
    for (int w = 0; w < n; ++w)
      if (w != sink_ && mult[w] > 0) neighbors_[i].emplace_back(index_[w], mult[w]);
  }
  reduced_ = sandgroup::reduced_laplacian(graph_, sink_);
  sigma_max_.resize(k);
  for (int i = 0; i < k; ++i) sigma_max_[i] = degree_[i] - 1;
  burning_ = sink_edges_;
  tau_ = determinant(reduced_);
}

bool is_stable(const SandpileModel& m, std::span<const std::int64_t> c) {
  if (static_cast<int>(c.size()) != m.size()) return false;
  for (int i = 0; i < m.size(); ++i)
    if (c[i] < 0 || c[i] >= m.degree(i)) return false;
  return true;
}

namespace {

void check_input(const SandpileModel& m, std::span<const std::int64_t> c) {
  if (static_cast<int>(c.size()) != m.size())
    throw Error(ErrorKind::invalid_input, "size mismatch",
                std::to_string(c.size()) + " entries for " + std::to_string(m.size()) + " non-sink vertices");
  for (auto x : c)
    if (x < 0) throw Error(ErrorKind::invalid_input, "negative chips");
}

void charge(const SandpileModel& m, Stabilization& s, std::int64_t amount) {
  s.topplings += amount;
  if (s.topplings > m.toppling_bound())
    throw Error(ErrorKind::bound_exceeded, "toppling bound",
                "more than " + std::to_string(m.toppling_bound()) + " topplings");
}

}  // namespace

Stabilization stabilize(const SandpileModel& m, std::span<const std::int64_t> c) {
  check_input(m, c);
  Stabilization s{Configuration(c.begin(), c.end()), std::vector<std::int64_t>(m.size(), 0), 0};
  std::set<int> unstable;
  for (int i = 0; i < m.size(); ++i)
    if (s.config[i] >= m.degree(i)) unstable.insert(i);
  while (!unstable.empty()) {
    const int i = *unstable.begin();
    unstable.erase(unstable.begin());
    const std::int64_t times = s.config[i] / m.degree(i);
    charge(m, s, times);
    s.config[i] -= times * m.degree(i);
    s.firings[i] += times;
    for (auto [j, mult] : m.neighbors(i)) {
      s.config[j] += times * mult;
      if (s.config[j] >= m.degree(j)) unstable.insert(j);
    }
  }
  return s;
}

Stabilization stabilize_random(const SandpileModel& m, std::span<const std::int64_t> c, std::mt19937_64& rng) {
  check_input(m, c);
  Stabilization s{Configuration(c.begin(), c.end()), std::vector<std::int64_t>(m.size(), 0), 0};
  std::vector<int> unstable;
  for (;;) {
    unstable.clear();
    for (int i = 0; i < m.size(); ++i)
      if (s.config[i] >= m.degree(i)) unstable.push_back(i);
    if (unstable.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, unstable.size() - 1);
    const int i = unstable[pick(rng)];
    charge(m, s, 1);
    s.config[i] -= m.degree(i);
    s.firings[i] += 1;
    for (auto [j, mult] : m.neighbors(i)) s.config[j] += mult;
  }
  return s;
}

Configuration add(const SandpileModel& m, std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::invalid_input, "size mismatch");
  Configuration sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
  return stabilize(m, sum).config;
}

bool is_recurrent(const SandpileModel& m, std::span<const std::int64_t> c) {
  if (!is_stable(m, c)) throw Error(ErrorKind::invalid_input, "unstable");
  Configuration burned(c.begin(), c.end());
  for (int i = 0; i < m.size(); ++i) burned[i] += m.burning()[i];
  const auto s = stabilize(m, burned);
  for (auto f : s.firings)
    if (f != 1) return false;
  return true;
}

Configuration identity(const SandpileModel& m) {
  Configuration twice(m.size());
  for (int i = 0; i < m.size(); ++i) twice[i] = 2 * m.sigma_max()[i];
  const auto first = stabilize(m, twice).config;
  for (int i = 0; i < m.size(); ++i) twice[i] -= first[i];
  return stabilize(m, twice).config;
}

std::vector<Integer> apply_firing(const SandpileModel& m, std::span<const Integer> c, std::span<const Integer> x) {
  const auto& l = m.reduced_laplacian();
  std::vector<Integer> out(c.begin(), c.end());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (x[i] != 0 && l(i, j) != 0) out[j] += x[i] * l(i, j);
  return out;
}

Representative recurrent_representative(const SandpileModel& m, std::span<const Integer> c) {
  const int k = m.size();
  if (static_cast<int>(c.size()) != k) throw Error(ErrorKind::invalid_input, "size mismatch");
  if (k == 0) return {};
  // x0 = ceil((sigma_max + deg - c) L^-1) puts c + x0 L between sigma_max and sigma_max + 2 deg.
  std::vector<Integer> target(k);
  for (int i = 0; i < k; ++i) target[i] = Integer(m.sigma_max()[i] + m.degree(i)) - c[i];
  const auto y = solve_rational(m.reduced_laplacian().transposed(), target);
  std::vector<Integer> shift(k);
  for (int i = 0; i < k; ++i) mpz_cdiv_q(shift[i].get_mpz_t(), y[i].get_num_mpz_t(), y[i].get_den_mpz_t());
  const auto start = apply_firing(m, c, shift);
  Configuration chips(k);
  for (int i = 0; i < k; ++i) {
    if (!start[i].fits_slong_p()) throw Error(ErrorKind::bound_exceeded, "chip overflow");
    chips[i] = start[i].get_si();
  }
  auto s = stabilize(m, chips);
  for (int i = 0; i < k; ++i) shift[i] -= s.firings[i];
  return Representative{std::move(s.config), std::move(shift)};
}

Representative recurrent_representative(const SandpileModel& m, std::span<const std::int64_t> c) {
  std::vector<Integer> big;
  big.reserve(c.size());
  for (auto x : c) big.emplace_back(static_cast<long>(x));
  return recurrent_representative(m, std::span<const Integer>(big));
}

}  // namespace sandgroup
