#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "qloci/oracle.hpp"
#include "qloci/permutation.hpp"
#include "qloci/poset.hpp"
#include "qloci/reduction.hpp"
#include "qloci/zelevinsky.hpp"
#include "support.hpp"

using namespace qloci;
using qloci::testing::all_dims;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string show(const DimensionVector& d) {
  std::ostringstream out;
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d.values()[i];
  return "(" + out.str() + ")";
}

/// Every (n, d) with n <= 2 and all entries of d at most 2.
void for_each_small_case(const std::function<void(const BipartiteQuiver&, const DimensionVector&)>& f) {
  for (std::size_t n = 0; n <= 2; ++n) {
    const BipartiteQuiver q(n);
    for (const auto& d : all_dims(q.vertex_count(), 2)) f(q, d);
  }
}

Outcome example_reproduction() {
  Outcome out;
  const auto v = qloci::testing::example_rep();
  const auto z = zelevinsky_map(v);
  const auto b = block_rank_numeric(z);
  if (!(b == qloci::testing::example_block_ranks())) out.fail("b(r) differs from the printed matrix");
  const auto perm = zelevinsky_permutation(b, BlockSpec::from_layout(z.layout()));
  if (!(perm == qloci::testing::example_permutation())) out.fail("v(r) differs from the printed permutation");
  return out;
}

Outcome route_agreement() {
  Outcome out;
  std::size_t points = 0;
  for_each_small_case([&](const BipartiteQuiver& q, const DimensionVector& d) {
    const PointSpace space(q.as_type_a(), d, 2);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      const auto v = space.decode(i);
      ++points;
      if (!(block_rank_symbolic(rank_array(v), d) == block_rank_numeric(zelevinsky_map(v))))
        out.fail("n=" + std::to_string(q.n()) + " d=" + show(d) + " point " + std::to_string(i));
    }
  });
  if (out.passed) out.detail = std::to_string(points) + " representations";
  return out;
}

Outcome oracle_partitions() {
  Outcome out;
  std::size_t checked = 0, skipped = 0;
  auto run = [&](const BipartiteQuiver& q, const DimensionVector& d, std::uint32_t p) {
    try {
      const auto verdict = verify_rank_determines_orbit(q.as_type_a(), d, p);
      ++checked;
      if (!verdict.passed) out.fail("n=" + std::to_string(q.n()) + " d=" + show(d) + " p=" + std::to_string(p) + ": " +
                                    verdict.counterexample);
    } catch (const GuardError&) {
      ++skipped;
    }
  };
  for (std::uint32_t p : {2u, 3u})
    for (const auto& d : all_dims(3, 2)) run(BipartiteQuiver(1), d, p);
  for (const auto& d : all_dims(5, 2)) run(BipartiteQuiver(2), d, 2);
  if (out.passed) out.detail = std::to_string(checked) + " cases, " + std::to_string(skipped) + " over the guard";
  return out;
}

Outcome lace_round_trip() {
  Outcome out;
  std::size_t laces = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    const BipartiteQuiver q(n);
    for (const auto& d : all_dims(q.vertex_count(), 3)) {
      for (const auto& s : enumerate_laces(q, d, std::numeric_limits<std::uint64_t>::max())) {
        ++laces;
        const auto r = lace_to_rank(s);
        if (!(rank_to_lace(r, d) == s)) out.fail("rank_to_lace(lace_to_rank(s)) != s at d=" + show(d));
        if (!(lace_to_rank(rank_to_lace(r, d)) == r)) out.fail("lace_to_rank(rank_to_lace(r)) != r at d=" + show(d));
      }
    }
  }
  if (out.passed) out.detail = std::to_string(laces) + " lace arrays";
  return out;
}

Outcome length_consistency() {
  Outcome out;
  std::size_t orbits = 0;
  for_each_small_case([&](const BipartiteQuiver& q, const DimensionVector& d) {
    const std::int64_t dxdy = static_cast<std::int64_t>(total_x(q, d) * total_y(q, d));
    for (const auto& node : enumerate_orbits(q, d)) {
      ++orbits;
      const auto len = static_cast<std::int64_t>(inversion_length(node.permutation));
      if (length_from_blocks(node.blocks) != len) out.fail("length mismatch at d=" + show(d) + " r=" + node.key());
      const auto dim = orbit_dimension(node);
      if (dim != dxdy - len || dim < 0) out.fail("orbit dimension at d=" + show(d) + " r=" + node.key());
    }
  });
  for (std::size_t n = 0; n <= 2; ++n) {
    const BipartiteQuiver q(n);
    for (const auto& d : all_dims(q.vertex_count(), 3))
      if (inversion_length(w_of(q, d)) != total_x(q, d) * total_y(q, d)) out.fail("l(w) != d_x d_y at d=" + show(d));
  }
  if (out.passed) out.detail = std::to_string(orbits) + " orbits";
  return out;
}

Outcome structural_facts() {
  Outcome out;
  for_each_small_case([&](const BipartiteQuiver& q, const DimensionVector& d) {
    const auto blocks = BlockSpec::from_layout(BlockLayout(q, d));
    for (const auto& node : enumerate_orbits(q, d)) {
      if (!is_block_minimal(node.permutation, blocks)) out.fail("not block-minimal at d=" + show(d) + " r=" + node.key());
      if (!essential_in_block_corners(node.permutation, blocks))
        out.fail("essential box off a corner at d=" + show(d) + " r=" + node.key());
    }
  });
  return out;
}

Outcome order_anti_isomorphism() {
  Outcome out;
  std::size_t pairs = 0;
  for_each_small_case([&](const BipartiteQuiver& q, const DimensionVector& d) {
    const auto poset = hasse(q, d, enumerate_orbits(q, d));
    const auto report = order_equivalence_report(poset);
    pairs += report.pairs;
    if (!report.consistent()) out.fail("order mismatch at d=" + show(d));
  });
  const BruhatCoverOrder s4(4);
  for (const auto& u : s4.elements())
    for (const auto& v : s4.elements())
      if (bruhat_leq(u, v) != s4.leq(u, v)) out.fail("bruhat_leq disagrees with covers on S_4");
  const BruhatCoverOrder s6(6);
  std::mt19937_64 rng(6);
  std::vector<std::size_t> a{1, 2, 3, 4, 5, 6}, b = a;
  for (int k = 0; k < 1000; ++k) {
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation u(a), v(b);
    if (bruhat_leq(u, v) != s6.leq(u, v)) out.fail("bruhat_leq disagrees with covers on S_6");
  }
  if (out.passed) out.detail = std::to_string(pairs) + " node pairs";
  return out;
}

Outcome reduction() {
  Outcome out;
  const TypeAQuiver q = TypeAQuiver::parse("RRLL");
  std::size_t cases = 0;
  for (const auto& d : all_dims(q.vertex_count(), 2)) {
    const auto verdict = verify_rank_determines_orbit(q, d, 2);
    ++cases;
    if (!verdict.passed) out.fail("d=" + show(d) + ": " + verdict.counterexample);
  }
  const ReductionContext ctx = bipartite_double(q);
  const Field f3 = Field::prime(3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> dim(0, 2);
  for (int k = 0; k < 100; ++k) {
    DimensionVector d(std::vector<std::size_t>(q.vertex_count()));
    for (std::size_t z = 0; z < d.size(); ++z) d.set(z, dim(rng));
    const auto lifted = random_point_in_open_locus(ctx, d, f3, rng);
    const auto g = random_base_change(lift_dimension(ctx, d), f3, rng);
    if (!(project(ctx, act(g, lifted)) == act(project_base_change(ctx, g), project(ctx, lifted))))
      out.fail("projection is not equivariant at d=" + show(d));
  }
  if (out.passed) out.detail = std::to_string(cases) + " dimension vectors, 100 equivariance pairs";
  return out;
}

Outcome census() {
  Outcome out;
  std::size_t count = 0;
  auto run = [&](const TypeAQuiver& q, const DimensionVector& d, std::uint32_t p) {
    try {
      const auto c = brute_orbit_partition(PointSpace(q, d, p));
      ++count;
      const auto verdict = census_sanity(c);
      if (!verdict.passed) out.fail(q.word() + " d=" + show(d) + ": " + verdict.counterexample);
    } catch (const GuardError&) {
    }
  };
  for (std::uint32_t p : {2u, 3u})
    for (const auto& d : all_dims(3, 2)) run(TypeAQuiver::parse("LR"), d, p);
  for (const auto& d : all_dims(5, 2)) run(TypeAQuiver::parse("LRLR"), d, 2);
  for (const auto& d : all_dims(5, 2)) run(TypeAQuiver::parse("RRLL"), d, 2);
  if (out.passed) out.detail = std::to_string(count) + " censuses";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example reproduction", example_reproduction},
      {"route agreement", route_agreement},
      {"rank array determines orbit", oracle_partitions},
      {"lace round trip", lace_round_trip},
      {"length consistency", length_consistency},
      {"block-minimal with corner essential set", structural_facts},
      {"order anti-isomorphism", order_anti_isomorphism},
      {"reduction to bipartite", reduction},
      {"census sanity", census},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.2fs)%s%s\n", out.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
