#include <random>

#include "doctest.h"
#include "qloci/oracle.hpp"
#include "qloci/poset.hpp"
#include "qloci/representation.hpp"
#include "support.hpp"

using namespace qloci;

namespace {

const Field kQ = Field::rationals();

Interval iv(const char* left, const char* right) {
  return Interval::arrows(BipartiteQuiver::parse_arrow(left), BipartiteQuiver::parse_arrow(right));
}
Interval iv(const char* arrow) { return iv(arrow, arrow); }

Representation n1(long a, long b) {
  Representation v = Representation::zero(BipartiteQuiver(1), DimensionVector({1, 1, 1}), kQ);
  v.set_arrow(1, ExactMatrix::from_rows(kQ, {{a}}));
  v.set_arrow(2, ExactMatrix::from_rows(kQ, {{b}}));
  return v;
}

/// (r_[a1], r_[b1], r_[a1,b1]).
std::vector<std::int64_t> triple(const RankArray& r) { return {r[iv("a1")], r[iv("b1")], r[iv("a1", "b1")]}; }

RankArray n1_ranks(std::int64_t a, std::int64_t b, std::int64_t ab) {
  RankArray r(BipartiteQuiver(1));
  r[iv("a1")] = a;
  r[iv("b1")] = b;
  r[iv("a1", "b1")] = ab;
  return r;
}

}  // namespace

TEST_SUITE("representations") {

TEST_CASE("shape and field checks") {
  const BipartiteQuiver q(1);
  Representation v = Representation::zero(q, DimensionVector({1, 2, 1}), kQ);
  CHECK(v.alpha(1).rows() == 1);
  CHECK(v.alpha(1).cols() == 2);
  CHECK_THROWS_AS(v.set_arrow(1, ExactMatrix(kQ, 2, 1)), InputError);
  CHECK_THROWS_AS(v.set_arrow(1, ExactMatrix(Field::prime(2), 1, 2)), InputError);
  CHECK_THROWS_AS(Representation(q.as_type_a(), DimensionVector({1, 1}), {ExactMatrix(kQ, 1, 1), ExactMatrix(kQ, 1, 1)}, kQ),
                  InputError);
  CHECK_THROWS_AS(Representation::zero(TypeAQuiver::parse("RR"), DimensionVector({1, 1, 1}), kQ).require_bipartite(),
                  InputError);
}

TEST_CASE("assemble_interval_matrix examples") {
  const auto v = qloci::testing::example_rep();
  const auto m = assemble_interval_matrix(v, iv("a1", "b1"));
  // [A1; B1] stacks d(y0) + d(y1) rows over d(x1) columns.
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 2);
  CHECK(m.submatrix(0, 0, 1, 2) == v.alpha(1));
  CHECK(m.submatrix(1, 0, 3, 2) == v.beta(1));
  const auto x1 = assemble_interval_matrix(v, Interval::vertex(BipartiteQuiver::x(1)));
  CHECK(x1.rows() == 2);
  CHECK(x1.cols() == 0);
  CHECK(rank(x1) == 0);

  // J = [a3, b6]: block rows y2..y6 and block columns x3..x6, A3 in the top-right corner and
  // B6 in the bottom-left.
  const BipartiteQuiver q6(6);
  std::vector<std::size_t> dims(q6.vertex_count());
  for (std::size_t z = 0; z < dims.size(); ++z) dims[z] = 1 + z % 2;
  const DimensionVector d(dims);
  Representation w = Representation::zero(q6, d, kQ);
  std::mt19937_64 rng(1);
  for (std::size_t a = 1; a <= q6.arrow_count(); ++a) {
    const auto& shape = w.arrow(a);
    w.set_arrow(a, qloci::testing::random_rational_matrix(shape.rows(), shape.cols(), rng));
  }
  const auto big = assemble_interval_matrix(w, iv("a3", "b6"));
  std::vector<std::size_t> rows, cols;
  for (int k = 2; k <= 6; ++k) rows.push_back(d[BipartiteQuiver::y(k)]);
  for (int m = 6; m >= 3; --m) cols.push_back(d[BipartiteQuiver::x(m)]);
  BlockLayoutGrid grid(5, std::vector<std::optional<ExactMatrix>>(4));
  for (int m = 3; m <= 6; ++m) {
    const std::size_t col = static_cast<std::size_t>(6 - m);
    grid[static_cast<std::size_t>(m - 3)][col] = w.alpha(m);
    grid[static_cast<std::size_t>(m - 2)][col] = w.beta(m);
  }
  CHECK(big == assemble_blocks(kQ, grid, rows, cols));
}

TEST_CASE("rank_function examples") {
  const BipartiteQuiver q(1);
  CHECK(rank_function(indecomposable_rep(q, iv("a1", "b1"), kQ), iv("a1")) == 1);
  const auto zero = Representation::zero(BipartiteQuiver(2), DimensionVector({2, 1, 2, 1, 2}), kQ);
  for (const auto& j : enumerate_intervals(BipartiteQuiver(2))) CHECK(rank_function(zero, j) == 0);
  const Interval four = iv("a1", "b2");
  CHECK(rank_function(indecomposable_rep(BipartiteQuiver(2), four, kQ), four) == 2);
}

TEST_CASE("rank_array examples") {
  CHECK(triple(rank_array(n1(1, 1))) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(triple(rank_array(n1(1, 0))) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(triple(rank_array(n1(0, 0))) == std::vector<std::int64_t>{0, 0, 0});
  const auto r = rank_array(qloci::testing::example_rep());
  CHECK(r[iv("a3")] == 0);
  const auto full = snake_matrix(qloci::testing::example_rep());
  CHECK(r[iv("a1", "b3")] == static_cast<std::int64_t>(qloci::testing::naive_rank(full)));
  CHECK(r[iv("a1", "b3")] == 5);
}

TEST_CASE("padded rank reads") {
  const RankArray r = rank_array(n1(1, 1));
  CHECK(r.rank(iv("b0", "a1")) == 1);
  CHECK(r.rank(iv("b0")) == 0);
  CHECK(r.rank(std::nullopt) == 0);
  CHECK(r.rank(clip(iv("b1", "a2"), BipartiteQuiver(1))) == 1);
}

TEST_CASE("lace_to_rank examples") {
  const BipartiteQuiver q(1);
  LaceArray s(q);
  s[iv("a1", "b1")] = 1;
  CHECK(triple(lace_to_rank(s)) == std::vector<std::int64_t>{1, 1, 1});
  LaceArray v(q);
  v[Interval::vertex(0)] = 2;
  v[Interval::vertex(1)] = 1;
  CHECK(triple(lace_to_rank(v)) == std::vector<std::int64_t>{0, 0, 0});
  LaceArray t(q);
  t[iv("a1")] = 1;
  t[Interval::vertex(2)] = 1;
  CHECK(triple(lace_to_rank(t)) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(t.dimension() == DimensionVector({1, 1, 1}));
}

TEST_CASE("rank_to_lace examples") {
  const DimensionVector d({1, 1, 1});
  const auto dense = rank_to_lace(n1_ranks(1, 1, 1), d);
  LaceArray expect(BipartiteQuiver(1));
  expect[iv("a1", "b1")] = 1;
  CHECK(dense == expect);
  const auto mid = rank_to_lace(n1_ranks(1, 0, 1), d);
  LaceArray expect_mid(BipartiteQuiver(1));
  expect_mid[iv("a1")] = 1;
  expect_mid[Interval::vertex(2)] = 1;
  CHECK(mid == expect_mid);
  const DimensionVector d2({2, 1, 3});
  const auto zero = rank_to_lace(n1_ranks(0, 0, 0), d2);
  for (const auto& j : enumerate_intervals(BipartiteQuiver(1)))
    CHECK(zero[j] == (j.is_vertex() ? static_cast<std::int64_t>(d2[j.first]) : 0));
  CHECK_THROWS_AS(rank_to_lace(n1_ranks(0, 0, 1), d), InvalidRankArray);
}

TEST_CASE("validate_rank_array examples") {
  const DimensionVector d({1, 1, 1});
  CHECK(validate_rank_array(rank_array(n1(1, 0)), d));
  CHECK_FALSE(validate_rank_array(n1_ranks(0, 0, 1), d));
  CHECK(validate_rank_array(n1_ranks(0, 0, 0), d));
  CHECK_FALSE(validate_rank_array(n1_ranks(2, 0, 2), d));
  CHECK_THROWS_AS(validate_rank_array(n1_ranks(0, 0, 0), DimensionVector({1, 1})), InputError);
}

TEST_CASE("indecomposable_rep examples") {
  const BipartiteQuiver q(2);
  const auto y0 = indecomposable_rep(q, Interval::vertex(0), kQ);
  CHECK(y0.dims() == DimensionVector({1, 0, 0, 0, 0}));
  for (const auto& m : y0.arrows()) CHECK(m.rows() * m.cols() == 0);
  const auto full = indecomposable_rep(BipartiteQuiver(1), iv("a1", "b1"), kQ);
  CHECK(full == n1(1, 1));
}

TEST_CASE("direct_sum examples") {
  const BipartiteQuiver q(1);
  const auto v = n1(1, 1);
  const auto zero = Representation::zero(q, DimensionVector({0, 0, 0}), kQ);
  CHECK(direct_sum(v, zero) == v);
  const auto s = direct_sum(indecomposable_rep(q, iv("a1"), kQ), indecomposable_rep(q, Interval::vertex(2), kQ));
  CHECK(s == n1(1, 0));
}

TEST_CASE("act examples") {
  const auto v = qloci::testing::example_rep();
  BaseChange id;
  for (auto k : v.dims().values()) id.push_back(ExactMatrix::identity(kQ, k));
  CHECK(act(id, v) == v);
  BaseChange bad = id;
  bad[1] = ExactMatrix(kQ, 2, 2);
  CHECK_THROWS_AS(act(bad, v), InputError);
}

TEST_CASE("property: rank array is invariant under base change") {
  std::mt19937_64 rng(21);
  const Field f = Field::prime(5);
  for (std::size_t n = 0; n <= 3; ++n) {
    const BipartiteQuiver q(n);
    for (int k = 0; k < 20; ++k) {
      std::vector<std::size_t> dims(q.vertex_count());
      for (auto& x : dims) x = rng() % 3;
      const DimensionVector d(dims);
      const auto v = random_representation(q.as_type_a(), d, f, rng);
      const auto g = random_base_change(d, f, rng);
      CHECK(rank_array(act(g, v)) == rank_array(v));
    }
  }
}

TEST_CASE("property: group action law") {
  std::mt19937_64 rng(22);
  const Field f = Field::prime(3);
  const BipartiteQuiver q(2);
  for (int k = 0; k < 30; ++k) {
    const DimensionVector d({rng() % 3, rng() % 3, rng() % 3, rng() % 3, rng() % 3});
    const auto v = random_representation(q.as_type_a(), d, f, rng);
    const auto g = random_base_change(d, f, rng), h = random_base_change(d, f, rng);
    CHECK(act(g, act(h, v)) == act(compose(g, h), v));
  }
}

TEST_CASE("property: ranks of indecomposables") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const BipartiteQuiver q(n);
    for (const auto& jp : enumerate_intervals(q)) {
      const auto r = rank_array(indecomposable_rep(q, jp, kQ));
      for (const auto& j : enumerate_intervals(q)) {
        if (j.is_vertex()) continue;
        CHECK(r[j] == (shared_arrow_count(j, jp) + 1) / 2);
      }
    }
  }
}

TEST_CASE("property: rank arrays are additive") {
  std::mt19937_64 rng(23);
  const Field f = Field::prime(7);
  const BipartiteQuiver q(2);
  for (int k = 0; k < 30; ++k) {
    const DimensionVector d1({rng() % 3, rng() % 3, rng() % 3, rng() % 3, rng() % 3});
    const DimensionVector d2({rng() % 3, rng() % 3, rng() % 3, rng() % 3, rng() % 3});
    const auto u = random_representation(q.as_type_a(), d1, f, rng);
    const auto v = random_representation(q.as_type_a(), d2, f, rng);
    const auto ru = rank_array(u), rv = rank_array(v), rs = rank_array(direct_sum(u, v));
    for (std::size_t i = 0; i < rs.size(); ++i) CHECK(rs.values()[i] == ru.values()[i] + rv.values()[i]);
  }
}

TEST_CASE("property: lace round trip up to four per vertex") {
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 2; ++n) {
    const BipartiteQuiver q(n);
    for (const auto& d : qloci::testing::all_dims(q.vertex_count(), n == 2 ? 3 : 4))
      for (const auto& s : enumerate_laces(q, d, ~std::uint64_t{0})) {
        ++count;
        CHECK(s.dimension() == d);
        CHECK(rank_to_lace(lace_to_rank(s), d) == s);
      }
  }
  CHECK(count > 0);
}

TEST_CASE("property: Krull-Schmidt realization reproduces the rank array") {
  for (std::size_t n = 0; n <= 2; ++n) {
    const BipartiteQuiver q(n);
    for (const auto& d : qloci::testing::all_dims(q.vertex_count(), 2))
      for (const auto& s : enumerate_laces(q, d, kDefaultGuard)) {
        const auto r = lace_to_rank(s);
        const auto v = realize_lace(rank_to_lace(r, d), Field::prime(2));
        CHECK(v.dims() == d);
        CHECK(rank_array(v) == r);
      }
  }
}

TEST_CASE("property: every enumerated rank array validates") {
  for (std::size_t n = 1; n <= 2; ++n) {
    const BipartiteQuiver q(n);
    for (const auto& d : qloci::testing::all_dims(q.vertex_count(), n == 1 ? 2 : 1)) {
      const PointSpace space(q.as_type_a(), d, 2);
      for (std::uint64_t i = 0; i < space.size(); ++i) CHECK(validate_rank_array(rank_array(space.decode(i)), d));
    }
  }
}

}  // TEST_SUITE
