#include "sandgroup/polygon.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "sandgroup/error.hpp"

namespace sandgroup {

void PolygonChainSpec::validate() const {
  if (lengths.empty()) throw Error(ErrorKind::invalid_input, "empty chain");
  for (int k : lengths)
    if (k < 2) throw Error(ErrorKind::infeasible, "infeasible lengths", "polygon with " + std::to_string(k) + " sides");
}

PolygonChainSpec ladder(int sides, int count) {
  if (count < 1) throw Error(ErrorKind::invalid_input, "empty chain");
  PolygonChainSpec spec{std::vector<int>(count, sides)};
  spec.validate();
  return spec;
}

Integer tau_polygon_chain(const PolygonChainSpec& spec) {
  spec.validate();
  Integer before = 0, current = 1;
  for (int k : spec.lengths) {
    Integer next = k * current - before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

Integer tau_polygon_chain_matchings(const PolygonChainSpec& spec) {
  spec.validate();
  const auto& k = spec.lengths;
  const int n = static_cast<int>(k.size());
  Integer total = 0;
  std::function<void(int, const Integer&)> walk = [&](int i, const Integer& term) {
    if (i >= n) {
      total += term;
      return;
    }
    walk(i + 1, term * k[i]);
    if (i + 1 < n) walk(i + 2, -term);
  };
  walk(0, Integer(1));
  return total;
}

Integer tau_ladder_closed_form(int sides, int count) {
  if (count < 1 || sides < 2) throw Error(ErrorKind::invalid_input, "bad ladder");
  Integer total = 0;
  for (int i = 0; 2 * i <= count; ++i) {
    Integer binom, power;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(count - i), static_cast<unsigned long>(i));
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(sides), static_cast<unsigned long>(count - 2 * i));
    Integer term = binom * power;
    if (i % 2) total -= term;
    else total += term;
  }
  return total;
}

int PolygonFlowerSpec::attach_length(std::size_t i) const {
  const auto& lengths = chains.at(i).lengths;
  return attach.at(i) == Attach::first ? lengths.front() : lengths.back();
}

void PolygonFlowerSpec::validate() const {
  if (cycle_length < 3) throw Error(ErrorKind::invalid_input, "bad flower", "central cycle needs at least 3 sides");
  if (static_cast<int>(chains.size()) != cycle_length)
    throw Error(ErrorKind::invalid_input, "bad flower",
                std::to_string(chains.size()) + " chains for a cycle of length " + std::to_string(cycle_length));
  if (attach.size() != chains.size()) throw Error(ErrorKind::invalid_input, "bad flower", "attachment list size");
  for (std::size_t i = 0; i < chains.size(); ++i) {
    chains[i].validate();
    if (attach_length(i) < 3)
      throw Error(ErrorKind::infeasible, "contraction undefined", "chain " + std::to_string(i) + " attaches by a digon");
  }
}

PolygonChainSpec contract_attachment(const PolygonChainSpec& chain, Attach where) {
  chain.validate();
  PolygonChainSpec out = chain;
  int& k = where == Attach::first ? out.lengths.front() : out.lengths.back();
  if (k < 3) throw Error(ErrorKind::infeasible, "contraction undefined");
  --k;
  return out;
}

Integer flower_chain_product(const PolygonFlowerSpec& spec) {
  spec.validate();
  Integer product = 1;
  for (const auto& chain : spec.chains) product *= tau_polygon_chain(chain);
  return product;
}

Integer flower_tau(const PolygonFlowerSpec& spec) {
  spec.validate();
  const std::size_t l = spec.chains.size();
  std::vector<Integer> whole(l), contracted(l);
  for (std::size_t i = 0; i < l; ++i) {
    whole[i] = tau_polygon_chain(spec.chains[i]);
    contracted[i] = tau_polygon_chain(contract_attachment(spec.chains[i], spec.attach[i]));
  }
  Integer total = 0;
  for (std::size_t i = 0; i < l; ++i) {
    Integer term = contracted[i];
    for (std::size_t j = 0; j < l; ++j)
      if (j != i) term *= whole[j];
    total += term;
  }
  return total;
}

namespace {

std::vector<Integer> subset_product_gcds(const std::vector<Integer>& values, std::size_t up_to) {
  std::vector<Integer> out(up_to, 0);
  std::function<void(std::size_t, std::size_t, const Integer&)> walk = [&](std::size_t i, std::size_t taken,
                                                                          const Integer& product) {
    if (taken > 0) out[taken - 1] = gcd_of(out[taken - 1], product);
    if (taken == up_to) return;
    for (std::size_t j = i; j < values.size(); ++j) walk(j + 1, taken + 1, product * values[j]);
  };
  walk(0, 0, Integer(1));
  return out;
}

}  // namespace

std::vector<Integer> flower_deltas(const PolygonFlowerSpec& spec) {
  spec.validate();
  const std::size_t l = spec.chains.size();
  std::vector<Integer> by_recurrence(l), by_matchings(l);
  for (std::size_t i = 0; i < l; ++i) {
    by_recurrence[i] = tau_polygon_chain(spec.chains[i]);
    by_matchings[i] = tau_polygon_chain_matchings(spec.chains[i]);
  }
  auto a = subset_product_gcds(by_recurrence, l - 2);
  auto b = subset_product_gcds(by_matchings, l - 2);
  if (a != b) throw Error(ErrorKind::infeasible, "inconsistent chain counts");
  return a;
}

GroupStructure flower_group(const PolygonFlowerSpec& spec) {
  const auto deltas = flower_deltas(spec);
  const Integer tau = flower_tau(spec);
  std::vector<Integer> factors;
  Integer previous = 1;
  for (const auto& d : deltas) {
    factors.push_back(d / previous);
    previous = d;
  }
  factors.push_back(tau / previous);
  return GroupStructure::from_cyclic_orders(factors);
}

FlowerLayout flower_layout(const PolygonFlowerSpec& spec) {
  spec.validate();
  std::vector<std::pair<int, int>> edges;
  CycleLengths lengths{spec.cycle_length};
  for (std::size_t i = 0; i < spec.chains.size(); ++i) {
    auto outward = spec.chains[i].lengths;
    if (spec.attach[i] == Attach::last) std::reverse(outward.begin(), outward.end());
    int previous = 0;
    for (int k : outward) {
      const int v = static_cast<int>(lengths.size());
      lengths.push_back(k);
      edges.emplace_back(previous, v);
      previous = v;
    }
  }
  return FlowerLayout{Tree(static_cast<int>(lengths.size()), edges), std::move(lengths)};
}

OuterplaneGraph build_flower_graph(const PolygonFlowerSpec& spec) {
  const auto layout = flower_layout(spec);
  return build_outerplane(layout.tree, layout.lengths);
}

}  // namespace sandgroup
