#include <random>

#include "doctest.h"
#include "qloci/oracle.hpp"
#include "qloci/reduction.hpp"
#include "support.hpp"

using namespace qloci;

namespace {

const Field kQ = Field::rationals();

std::vector<std::string> words_up_to(std::size_t len) {
  std::vector<std::string> out{""};
  for (std::size_t k = 1; k <= len; ++k)
    for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
      std::string w;
      for (std::size_t i = 0; i < k; ++i) w.push_back(bits >> i & 1 ? 'R' : 'L');
      out.push_back(w);
    }
  return out;
}

DimensionVector random_dims(std::size_t len, std::size_t max, std::mt19937_64& rng) {
  std::vector<std::size_t> v(len);
  for (auto& x : v) x = rng() % (max + 1);
  return DimensionVector(v);
}

Representation random_rational_rep(const TypeAQuiver& q, const DimensionVector& d, std::mt19937_64& rng) {
  Representation v = Representation::zero(q, d, kQ);
  for (std::size_t a = 1; a <= q.arrow_count(); ++a)
    v.set_arrow(a, qloci::testing::random_rational_matrix(v.arrow(a).rows(), v.arrow(a).cols(), rng));
  return v;
}

BaseChange random_rational_base_change(const DimensionVector& d, std::mt19937_64& rng) {
  BaseChange g;
  for (auto k : d.values()) {
    ExactMatrix m;
    do m = qloci::testing::random_rational_matrix(k, k, rng);
    while (rank(m) != k);
    g.push_back(m);
  }
  return g;
}

}  // namespace

TEST_SUITE("reduction") {

TEST_CASE("bipartite_double of the worked quiver") {
  const auto ctx = bipartite_double(TypeAQuiver::parse("RRLL"));
  CHECK(ctx.target.n() == 4);
  CHECK(ctx.target.as_type_a().word() == "LRLRLRLR");
  CHECK(ctx.pad_left);
  CHECK(ctx.pad_right);
  CHECK(ctx.vertex_image == std::vector<int>{1, 3, 4, 6, 7});
  REQUIRE(ctx.insertions.size() == 2);
  const auto& w1 = ctx.insertions[0];
  CHECK(w1.junction == 1);
  CHECK(w1.sink);
  CHECK(w1.vertex == BipartiteQuiver::y(1));
  CHECK(w1.delta == BipartiteQuiver::alpha(2));
  const auto& w3 = ctx.insertions[1];
  CHECK(w3.junction == 3);
  CHECK_FALSE(w3.sink);
  CHECK(w3.vertex == BipartiteQuiver::x(3));
  CHECK(w3.delta == BipartiteQuiver::beta(3));
  // gamma_1 : z0 -> w1, gamma_3 : w3 -> z2.
  const auto t = ctx.target.as_type_a();
  const auto g1 = static_cast<std::size_t>(ctx.arrow_image[0]);
  CHECK(t.tail(g1) == 1);
  CHECK(t.head(g1) == static_cast<std::size_t>(w1.vertex));
  const auto g3 = static_cast<std::size_t>(ctx.arrow_image[2]);
  CHECK(t.tail(g3) == static_cast<std::size_t>(w3.vertex));
  CHECK(t.head(g3) == 4);
  CHECK(ctx.insertion_at(1) == &ctx.insertions[0]);
  CHECK(ctx.insertion_at(2) == nullptr);
}

TEST_CASE("bipartite_double of other quivers") {
  const auto same = bipartite_double(TypeAQuiver::parse("LRLR"));
  CHECK(same.insertions.empty());
  CHECK(same.target == BipartiteQuiver(2));
  CHECK(same.vertex_image == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(same.arrow_image == std::vector<int>{1, 2, 3, 4});
  const auto line = bipartite_double(TypeAQuiver::parse("RR"));
  REQUIRE(line.insertions.size() == 1);
  CHECK(line.insertions[0].sink);
  CHECK(line.insertions[0].junction == 1);
  const auto point = bipartite_double(TypeAQuiver::parse(""));
  CHECK(point.target == BipartiteQuiver(0));
  CHECK(point.insertions.empty());
  const auto rl = bipartite_double(TypeAQuiver::parse("RL"));
  CHECK(rl.pad_left);
  CHECK(rl.pad_right);
  CHECK(rl.insertions.empty());
}

TEST_CASE("lift_dimension examples") {
  const auto same = bipartite_double(TypeAQuiver::parse("LR"));
  CHECK(lift_dimension(same, DimensionVector({1, 2, 3})) == DimensionVector({1, 2, 3}));
  const auto ctx = bipartite_double(TypeAQuiver::parse("RRLL"));
  const auto lifted = lift_dimension(ctx, DimensionVector({1, 2, 2, 1, 1}));
  CHECK(lifted[BipartiteQuiver::y(1)] == 2);
  CHECK(lifted[BipartiteQuiver::x(3)] == 1);
  CHECK(lifted == DimensionVector({0, 1, 2, 2, 2, 1, 1, 1, 0}));
  CHECK(lift_dimension(ctx, DimensionVector({0, 0, 0, 0, 0})).is_zero());
  CHECK_THROWS_AS(lift_dimension(ctx, DimensionVector({1, 1})), InputError);
}

TEST_CASE("lift_rep and project examples") {
  const auto bip = bipartite_double(TypeAQuiver::parse("LRLR"));
  const auto small = Representation::zero(BipartiteQuiver(2), DimensionVector({1, 2, 1, 1, 2}), kQ);
  CHECK(lift_rep(bip, small) == small);
  CHECK(project(bip, small) == small);

  const auto ctx = bipartite_double(TypeAQuiver::parse("RRLL"));
  const Field f3 = Field::prime(3);
  Representation v = Representation::zero(ctx.source, DimensionVector({1, 2, 2, 1, 1}), f3);
  v.set_arrow(1, ExactMatrix::from_rows(f3, {{1}, {2}}));
  v.set_arrow(2, ExactMatrix::identity(f3, 2));
  v.set_arrow(3, ExactMatrix::from_rows(f3, {{1}, {1}}));
  v.set_arrow(4, ExactMatrix::from_rows(f3, {{2}}));
  const auto lifted = lift_rep(ctx, v);
  CHECK(lifted.dims() == lift_dimension(ctx, v.dims()));
  CHECK(lifted.arrow(static_cast<std::size_t>(BipartiteQuiver::alpha(2))) == ExactMatrix::identity(f3, 2));
  CHECK(lifted.arrow(static_cast<std::size_t>(BipartiteQuiver::beta(3))) == ExactMatrix::identity(f3, 1));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(lifted.arrow(static_cast<std::size_t>(ctx.arrow_image[i])) == v.arrow(i + 1));
  CHECK(in_open_locus(ctx, lifted));
  CHECK(project(ctx, lifted) == v);

  auto singular = lifted;
  singular.set_arrow(static_cast<std::size_t>(BipartiteQuiver::alpha(2)), ExactMatrix::from_rows(f3, {{1, 1}, {1, 1}}));
  CHECK_FALSE(in_open_locus(ctx, singular));
  CHECK_THROWS_AS(project(ctx, singular), InputError);
}

TEST_CASE("project composes out the delta maps") {
  const auto ctx = bipartite_double(TypeAQuiver::parse("RRLL"));
  const Field f5 = Field::prime(5);
  std::mt19937_64 rng(51);
  const DimensionVector d({1, 2, 2, 1, 1});
  const auto u = random_point_in_open_locus(ctx, d, f5, rng);
  CHECK(in_open_locus(ctx, u));
  const auto v = project(ctx, u);
  const auto& d1 = u.arrow(static_cast<std::size_t>(ctx.insertions[0].delta));
  const auto& d3 = u.arrow(static_cast<std::size_t>(ctx.insertions[1].delta));
  // Sink junction: X = delta^{-1} gamma. Source junction: X = gamma delta^{-1}.
  CHECK(v.arrow(1) == multiply(inverse(d1), u.arrow(static_cast<std::size_t>(ctx.arrow_image[0]))));
  CHECK(v.arrow(3) == multiply(u.arrow(static_cast<std::size_t>(ctx.arrow_image[2])), inverse(d3)));
  CHECK(v.arrow(2) == u.arrow(static_cast<std::size_t>(ctx.arrow_image[1])));
}

TEST_CASE("rank_array_arbitrary examples") {
  std::mt19937_64 rng(52);
  const TypeAQuiver q = TypeAQuiver::parse("RRLL");
  const auto ctx = bipartite_double(q);
  const DimensionVector d({1, 2, 2, 1, 1});
  const auto v = random_rational_rep(q, d, rng);
  const auto g = random_rational_base_change(d, rng);
  CHECK(rank_array_arbitrary(ctx, act(g, v)) == rank_array_arbitrary(ctx, v));

  const auto zero = Representation::zero(q, d, kQ);
  LaceArray s(ctx.target);
  const auto lifted = lift_dimension(ctx, d);
  std::vector<std::size_t> left(lifted.values());
  for (const auto& ins : ctx.insertions) {
    const auto z = static_cast<std::size_t>(ctx.vertex_image[ins.junction]);
    const auto k = static_cast<std::int64_t>(d[static_cast<int>(ins.junction)]);
    s[Interval::arrows(ins.delta, ins.delta)] = k;
    left[z] -= static_cast<std::size_t>(k);
    left[static_cast<std::size_t>(ins.vertex)] -= static_cast<std::size_t>(k);
  }
  for (std::size_t z = 0; z < left.size(); ++z) s[Interval::vertex(static_cast<int>(z))] = static_cast<std::int64_t>(left[z]);
  CHECK(rank_array_arbitrary(ctx, zero) == lace_to_rank(s));

  const auto bip = bipartite_double(TypeAQuiver::parse("LRLR"));
  const auto w = random_rational_rep(bip.source, DimensionVector({1, 2, 1, 2, 1}), rng);
  CHECK(rank_array_arbitrary(bip, w) == rank_array(w));
}

TEST_CASE("embed_g_star and project_base_change") {
  const auto ctx = bipartite_double(TypeAQuiver::parse("RRLL"));
  const Field f3 = Field::prime(3);
  const DimensionVector d({1, 2, 2, 1, 1});
  const auto lifted = lift_dimension(ctx, d);
  std::mt19937_64 rng(53);
  const std::vector<ExactMatrix> star{random_invertible(f3, 2, rng), random_invertible(f3, 1, rng)};
  const auto g = embed_g_star(ctx, lifted, star, f3);
  CHECK(g[static_cast<std::size_t>(BipartiteQuiver::y(1))] == star[0]);
  CHECK(g[static_cast<std::size_t>(BipartiteQuiver::x(3))] == star[1]);
  for (const auto& m : project_base_change(ctx, g)) CHECK(m == ExactMatrix::identity(f3, m.rows()));
  const auto u = random_point_in_open_locus(ctx, d, f3, rng);
  CHECK(project(ctx, act(g, u)) == project(ctx, u));
  CHECK_THROWS_AS(embed_g_star(ctx, lifted, {star[0]}, f3), InputError);
}

TEST_CASE("property: end vertices never receive insertions") {
  for (const auto& w : words_up_to(6)) {
    const auto q = TypeAQuiver::parse(w);
    const auto ctx = bipartite_double(q);
    CHECK(ctx.target.as_type_a().is_alternating());
    for (const auto& ins : ctx.insertions) {
      CHECK(ins.junction >= 1);
      CHECK(ins.junction + 1 < q.vertex_count());
      CHECK(q.direction(ins.junction) == q.direction(ins.junction + 1));
    }
    std::size_t junctions = 0;
    for (std::size_t i = 1; i + 1 < q.vertex_count(); ++i) junctions += q.direction(i) == q.direction(i + 1);
    CHECK(ctx.insertions.size() == junctions);
  }
}

TEST_CASE("property: lift lands in the open locus and projects back") {
  std::mt19937_64 rng(54);
  const Field f3 = Field::prime(3);
  for (const auto& w : words_up_to(5)) {
    const auto q = TypeAQuiver::parse(w);
    const auto ctx = bipartite_double(q);
    for (int k = 0; k < 5; ++k) {
      const auto v = random_representation(q, random_dims(q.vertex_count(), 2, rng), f3, rng);
      const auto lifted = lift_rep(ctx, v);
      CHECK(in_open_locus(ctx, lifted));
      CHECK(project(ctx, lifted) == v);
    }
  }
}

TEST_CASE("property: projection is equivariant") {
  std::mt19937_64 rng(55);
  for (const auto& w : words_up_to(4)) {
    const auto q = TypeAQuiver::parse(w);
    const auto ctx = bipartite_double(q);
    for (std::uint32_t p : {2u, 3u}) {
      const Field f = Field::prime(p);
      for (int k = 0; k < 5; ++k) {
        const auto d = random_dims(q.vertex_count(), 2, rng);
        const auto u = random_point_in_open_locus(ctx, d, f, rng);
        const auto g = random_base_change(lift_dimension(ctx, d), f, rng);
        CHECK(project(ctx, act(g, u)) == act(project_base_change(ctx, g), project(ctx, u)));
      }
    }
  }
}

TEST_CASE("property: orbits of short quivers are the fibers of the lifted rank array") {
  std::size_t checked = 0;
  for (const auto& w : words_up_to(3)) {
    const auto q = TypeAQuiver::parse(w);
    for (const auto& d : qloci::testing::all_dims(q.vertex_count(), 2)) {
      const auto verdict = verify_rank_determines_orbit(q, d, 2, kDefaultGuard, Exec::serial);
      CHECK_MESSAGE(verdict.passed, w << ": " << verdict.counterexample);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("property: fiber transitivity over F_2") {
  for (const char* w : {"RR", "LL", "RRL", "LLR", "RRLL"}) {
    const auto q = TypeAQuiver::parse(w);
    const auto ctx = bipartite_double(q);
    for (const auto& d : qloci::testing::all_dims(q.vertex_count(), q.vertex_count() > 4 ? 1 : 2)) {
      try {
        const auto verdict = verify_fiber_transitivity(ctx, d, 2, kDefaultGuard, Exec::serial);
        CHECK_MESSAGE(verdict.passed, w << ": " << verdict.counterexample);
      } catch (const GuardError&) {
      }
    }
  }
}

}  // TEST_SUITE
