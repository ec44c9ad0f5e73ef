#include "support.hpp"

namespace qloci::testing {

Representation example_rep(Field field) {
  const BipartiteQuiver q(3);
  const DimensionVector d({1, 2, 3, 2, 3, 2, 1});
  Representation v = Representation::zero(q, d, field);
  v.set_arrow(BipartiteQuiver::alpha(1), ExactMatrix::from_rows(field, {{1, 0}}));
  v.set_arrow(BipartiteQuiver::beta(1), ExactMatrix::from_rows(field, {{0, 1}, {0, 0}, {1, 0}}));
  v.set_arrow(BipartiteQuiver::alpha(2), ExactMatrix::from_rows(field, {{0, 1}, {0, 0}, {0, 0}}));
  v.set_arrow(BipartiteQuiver::beta(2), ExactMatrix::from_rows(field, {{1, 0}, {0, 1}, {0, 0}}));
  v.set_arrow(BipartiteQuiver::alpha(3), ExactMatrix(field, 3, 2));
  v.set_arrow(BipartiteQuiver::beta(3), ExactMatrix::from_rows(field, {{0, 1}}));
  return v;
}

BlockRankMatrix example_block_ranks() {
  return BlockRankMatrix::from_rows({{0, 0, 1, 1, 1, 1, 1},
                                     {0, 1, 2, 3, 4, 4, 4},
                                     {0, 2, 4, 5, 6, 7, 7},
                                     {1, 3, 5, 6, 7, 8, 8},
                                     {2, 4, 6, 7, 8, 9, 10},
                                     {2, 4, 6, 7, 8, 11, 12},
                                     {2, 4, 6, 7, 10, 13, 14}});
}

Permutation example_permutation() {
  return Permutation({5, 3, 7, 8, 4, 6, 11, 1, 2, 14, 12, 13, 9, 10});
}

std::vector<DimensionVector> all_dims(std::size_t len, std::size_t max) {
  std::vector<DimensionVector> out;
  std::vector<std::size_t> v(len, 0);
  while (true) {
    out.emplace_back(v);
    std::size_t i = 0;
    while (i < len && v[i] == max) v[i++] = 0;
    if (i == len) break;
    ++v[i];
  }
  return out;
}

std::size_t naive_rank(const ExactMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c).rational();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

ExactMatrix random_rational_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  ExactMatrix m(Field::rationals(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, FieldScalar(Field::rationals(), mpq_class(num(rng), den(rng))));
  return m;
}

std::int64_t length_printed_formula(const BlockRankMatrix& b) {
  const long top = static_cast<long>(b.n()) + 1;
  std::int64_t total = 0;
  for (std::size_t i = 1; i <= b.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const long li = static_cast<long>(i), lj = static_cast<long>(j);
      total += b.block_count(i, j) * (b.at(li - 1, top) - b.at(li - 1, lj));
    }
  return total;
}

RankArray rank_of_lace(const LaceArray& s, Field field) { return rank_array(realize_lace(s, field)); }

}  // namespace qloci::testing
