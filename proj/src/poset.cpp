#include "qloci/poset.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

namespace qloci {

std::string OrbitNode::key() const {
  std::string out;
  for (const auto& j : enumerate_intervals(rank.quiver())) {
    if (j.is_vertex()) continue;
    if (!out.empty()) out.push_back(',');
    out += std::to_string(rank[j]);
  }
  return out;
}

std::vector<std::size_t> DegenerationPoset::maximal() const {
  std::vector<bool> below(nodes.size(), false);
  for (const auto& [lo, hi] : covers) below[lo] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!below[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> DegenerationPoset::minimal() const {
  std::vector<bool> above(nodes.size(), false);
  for (const auto& [lo, hi] : covers) above[hi] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!above[i]) out.push_back(i);
  return out;
}

std::uint64_t orbit_search_estimate(const BipartiteQuiver& q, const DimensionVector& d) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const auto& j : enumerate_intervals(q)) {
    if (j.is_vertex()) continue;
    std::size_t lo = d[j.first];
    for (int z = j.first; z <= j.last; ++z) lo = std::min(lo, d[z]);
    if (total > kMax / (lo + 1)) return kMax;
    total *= lo + 1;
  }
  return total;
}

namespace {

struct LaceSearch {
  const std::vector<Interval>& arrow_intervals;
  std::vector<std::size_t> remaining;
  LaceArray current;
  std::vector<LaceArray> out;

  void run(std::size_t t) {
    if (t == arrow_intervals.size()) {
      LaceArray s = current;
      for (std::size_t z = 0; z < remaining.size(); ++z)
        s[Interval::vertex(static_cast<int>(z))] = static_cast<std::int64_t>(remaining[z]);
      out.push_back(std::move(s));
      return;
    }
    const Interval& j = arrow_intervals[t];
    std::size_t cap = remaining[static_cast<std::size_t>(j.first)];
    for (int z = j.first; z <= j.last; ++z) cap = std::min(cap, remaining[static_cast<std::size_t>(z)]);
    for (std::size_t m = 0; m <= cap; ++m) {
      current[j] = static_cast<std::int64_t>(m);
      run(t + 1);
      if (m == cap) break;
      for (int z = j.first; z <= j.last; ++z) --remaining[static_cast<std::size_t>(z)];
    }
    for (int z = j.first; z <= j.last; ++z) remaining[static_cast<std::size_t>(z)] += cap;
    current[j] = 0;
  }
};

}  // namespace

std::vector<LaceArray> enumerate_laces(const BipartiteQuiver& q, const DimensionVector& d,
                                       std::uint64_t guard) {
  if (d.size() != q.vertex_count()) throw InputError("dimension vector does not match the quiver");
  const std::uint64_t estimate = orbit_search_estimate(q, d);
  if (estimate > guard)
    throw GuardError("orbit search would visit up to " + std::to_string(estimate) +
                     " lace arrays, above the guard " + std::to_string(guard));
  std::vector<Interval> arrow_intervals;
  for (const auto& j : enumerate_intervals(q))
    if (!j.is_vertex()) arrow_intervals.push_back(j);
  LaceSearch search{arrow_intervals, d.values(), LaceArray(q), {}};
  search.run(0);
  return std::move(search.out);
}

OrbitNode make_orbit_node(const LaceArray& s) {
  const DimensionVector d = s.dimension();
  const BlockLayout layout(s.quiver(), d);
  OrbitNode node{s, lace_to_rank(s), {}, {}, 0, 0};
  node.blocks = block_rank_symbolic(node.rank, d);
  node.permutation = zelevinsky_permutation(node.blocks, BlockSpec::from_layout(layout));
  node.length = inversion_length(node.permutation);
  node.dimension = orbit_dimension(node);
  return node;
}

std::vector<OrbitNode> enumerate_orbits(const BipartiteQuiver& q, const DimensionVector& d,
                                        std::uint64_t guard, Exec exec) {
  const auto laces = enumerate_laces(q, d, guard);
  std::vector<OrbitNode> nodes(laces.size());
  const auto count = static_cast<long>(laces.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < count; ++i) nodes[i] = make_orbit_node(laces[i]);
    return nodes;
  }
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) nodes[i] = make_orbit_node(laces[i]);
  return nodes;
}

DegenerationPoset hasse(const BipartiteQuiver& q, const DimensionVector& d,
                        std::vector<OrbitNode> nodes, Exec exec) {
  const std::size_t count = nodes.size();
  std::vector<char> leq(count * count, 0);
  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < count; ++j) leq[i * count + j] = nodes[i].rank.leq(nodes[j].rank);
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> found(count);
  auto covers_of = [&](std::size_t i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !leq[i * count + j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < count && cover; ++k)
        if (k != i && k != j && leq[i * count + k] && leq[k * count + j]) cover = false;
      if (cover) found[i].emplace_back(i, j);
    }
  };
  const auto n = static_cast<long>(count);
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) fill_row(static_cast<std::size_t>(i));
    for (long i = 0; i < n; ++i) covers_of(static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) fill_row(static_cast<std::size_t>(i));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) covers_of(static_cast<std::size_t>(i));
  }
  DegenerationPoset poset{q, d, std::move(nodes), {}};
  for (auto& f : found) poset.covers.insert(poset.covers.end(), f.begin(), f.end());
  return poset;
}

std::int64_t orbit_dimension(const OrbitNode& node) {
  const BipartiteQuiver& q = node.rank.quiver();
  const DimensionVector d = node.lace.dimension();
  return static_cast<std::int64_t>(total_x(q, d) * total_y(q, d)) - length_from_blocks(node.blocks);
}

OrbitNode dense_orbit(const BipartiteQuiver& q, const DimensionVector& d, std::uint64_t seed,
                      std::uint64_t guard) {
  auto nodes = enumerate_orbits(q, d, guard);
  std::vector<std::size_t> tops;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    bool top = true;
    for (std::size_t j = 0; j < nodes.size() && top; ++j)
      if (i != j && nodes[i].rank.leq(nodes[j].rank)) top = false;
    if (top) tops.push_back(i);
  }
  if (tops.size() != 1)
    throw InvariantError("expected a unique maximal orbit, found " + std::to_string(tops.size()));
  OrbitNode& top = nodes[tops.front()];

  std::mt19937_64 rng(seed);
  const Field field = Field::prime(Field::kDefaultPrime);
  for (int attempt = 0; attempt < 2; ++attempt) {
    const auto sample = random_representation(q.as_type_a(), d, field, rng);
    if (rank_array(sample) == top.rank) return std::move(top);
  }
  throw InvariantError("two random samples over F_32003 missed the maximal rank array " + top.key());
}

OrderReport order_equivalence_report(const DegenerationPoset& poset, Exec exec) {
  const std::size_t count = poset.nodes.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> bad(count);
  auto check_row = [&](std::size_t a) {
    const auto& na = poset.nodes[a];
    for (std::size_t b = 0; b < count; ++b) {
      const auto& nb = poset.nodes[b];
      if (na.rank.leq(nb.rank) != bruhat_leq(nb.permutation, na.permutation)) bad[a].emplace_back(a, b);
    }
  };
  const auto n = static_cast<long>(count);
  if (exec == Exec::serial) {
    for (long a = 0; a < n; ++a) check_row(static_cast<std::size_t>(a));
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long a = 0; a < n; ++a) check_row(static_cast<std::size_t>(a));
  }
  OrderReport report;
  report.pairs = count * count;
  for (auto& b : bad) report.counterexamples.insert(report.counterexamples.end(), b.begin(), b.end());
  return report;
}

std::string to_dot(const DegenerationPoset& poset) {
  std::ostringstream out;
  out << "digraph degenerations {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    const auto& node = poset.nodes[i];
    out << "  n" << i << " [label=\"r=(" << node.key() << ")\\nv=[";
    const auto& v = node.permutation.one_line();
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << v[k];
    out << "]\\ndim=" << node.dimension << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers) out << "  n" << hi << " -> n" << lo << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qloci
