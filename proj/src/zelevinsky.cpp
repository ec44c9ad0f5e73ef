#include "qloci/zelevinsky.hpp"

#include <algorithm>

namespace qloci {

BlockLayout::BlockLayout(BipartiteQuiver q, DimensionVector d)
    : quiver_(q), dims_(std::move(d)) {
  if (dims_.size() != quiver_.vertex_count())
    throw InputError("dimension vector does not match the quiver");
  d_x_ = total_x(quiver_, dims_);
  d_y_ = total_y(quiver_, dims_);
  row_end_.assign(block_count() + 1, 0);
  col_end_.assign(block_count() + 1, 0);
  for (std::size_t i = 1; i <= block_count(); ++i) {
    row_end_[i] = row_end_[i - 1] + row_size(i);
    col_end_[i] = col_end_[i - 1] + col_size(i);
  }
}

int BlockLayout::row_vertex(std::size_t i) const {
  const auto n = static_cast<int>(quiver_.n());
  const auto ii = static_cast<int>(i);
  if (ii < 1 || ii > 2 * n + 1) throw InputError("block row out of range");
  return ii <= n + 1 ? BipartiteQuiver::y(ii - 1) : BipartiteQuiver::x(2 * n + 2 - ii);
}

int BlockLayout::col_vertex(std::size_t j) const {
  const auto n = static_cast<int>(quiver_.n());
  const auto jj = static_cast<int>(j);
  if (jj < 1 || jj > 2 * n + 1) throw InputError("block column out of range");
  return jj <= n ? BipartiteQuiver::x(n + 1 - jj) : BipartiteQuiver::y(jj - n - 1);
}

std::size_t BlockLayout::row_block_of(int vertex) const {
  const auto n = static_cast<int>(quiver_.n());
  if (vertex % 2 == 0) return static_cast<std::size_t>(vertex / 2 + 1);
  return static_cast<std::size_t>(2 * n + 2 - (vertex + 1) / 2);
}

std::size_t BlockLayout::col_block_of(int vertex) const {
  const auto n = static_cast<int>(quiver_.n());
  if (vertex % 2 == 0) return static_cast<std::size_t>(vertex / 2 + n + 1);
  return static_cast<std::size_t>(n + 1 - (vertex + 1) / 2);
}

std::vector<std::size_t> BlockLayout::row_sizes() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 1; i <= block_count(); ++i) s.push_back(row_size(i));
  return s;
}

std::vector<std::size_t> BlockLayout::col_sizes() const {
  std::vector<std::size_t> s;
  for (std::size_t j = 1; j <= block_count(); ++j) s.push_back(col_size(j));
  return s;
}

ZelevinskyCellMatrix::ZelevinskyCellMatrix(BlockLayout layout, ExactMatrix m)
    : layout_(std::move(layout)), matrix_(std::move(m)) {
  const std::size_t dx = layout_.d_x(), dy = layout_.d_y(), d = dx + dy;
  if (matrix_.rows() != d || matrix_.cols() != d)
    throw InputError("cell matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  const Field f = matrix_.field();
  if (!(matrix_.submatrix(0, dx, dy, dy) == ExactMatrix::identity(f, dy)) ||
      !(matrix_.submatrix(dy, 0, dx, dx) == ExactMatrix::identity(f, dx)) ||
      !matrix_.submatrix(dy, dx, dx, dy).is_zero())
    throw InputError("matrix is not in the cell [[*, 1], [1, 0]]");
}

ZelevinskyCellMatrix ZelevinskyCellMatrix::from_free_block(BlockLayout layout,
                                                           const ExactMatrix& star) {
  const std::size_t dx = layout.d_x(), dy = layout.d_y();
  if (star.rows() != dy || star.cols() != dx)
    throw InputError("free block must be " + std::to_string(dy) + "x" + std::to_string(dx));
  const Field f = star.field();
  ExactMatrix z(f, dx + dy, dx + dy);
  z.paste(0, 0, star);
  z.paste(0, dx, ExactMatrix::identity(f, dy));
  z.paste(dy, 0, ExactMatrix::identity(f, dx));
  return ZelevinskyCellMatrix(std::move(layout), std::move(z));
}

ExactMatrix ZelevinskyCellMatrix::free_block() const {
  return matrix_.submatrix(0, 0, layout_.d_y(), layout_.d_x());
}

BlockRankMatrix::BlockRankMatrix(std::size_t n)
    : n_(n), values_((2 * n + 1) * (2 * n + 1), 0) {}

BlockRankMatrix BlockRankMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.size() % 2 == 0) throw InputError("block rank matrix must have odd size 2n+1");
  BlockRankMatrix b((rows.size() - 1) / 2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InputError("block rank matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) b.set(i + 1, j + 1, rows[i][j]);
  }
  return b;
}

std::int64_t BlockRankMatrix::at(long i, long j) const {
  const long s = static_cast<long>(size());
  if (i < 1 || j < 1 || i > s || j > s) return 0;
  return values_[static_cast<std::size_t>((i - 1) * s + (j - 1))];
}

void BlockRankMatrix::set(std::size_t i, std::size_t j, std::int64_t value) {
  if (i < 1 || j < 1 || i > size() || j > size()) throw InputError("block index out of range");
  values_[(i - 1) * size() + (j - 1)] = value;
}

std::int64_t BlockRankMatrix::block_count(std::size_t i, std::size_t j) const {
  const long a = static_cast<long>(i), b = static_cast<long>(j);
  return at(a, b) + at(a - 1, b - 1) - at(a, b - 1) - at(a - 1, b);
}

std::vector<std::vector<std::int64_t>> BlockRankMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(size(), std::vector<std::int64_t>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) out[i][j] = at(static_cast<long>(i + 1), static_cast<long>(j + 1));
  return out;
}

BlockEntryRule block_entry_rule(const BlockLayout& layout, std::size_t i, std::size_t j) {
  const int n = static_cast<int>(layout.quiver().n());
  const DimensionVector& d = layout.dims();
  const int ii = static_cast<int>(i), jj = static_cast<int>(j);
  const bool top = ii <= n + 1;  // rows stop among the y blocks
  const bool left = jj <= n;     // columns stop among the x blocks

  // Rows y_0..y_last_y and (below) x_n..x_first_x; columns x_first_col..x_n
  // and (right) y_0..y_last_col. first_x = n+1 means no x rows; last_col = -1
  // means no y columns.
  const int last_y = top ? ii - 1 : n;
  const int first_x = top ? n + 1 : 2 * n + 2 - ii;
  const int first_col = left ? n + 1 - jj : 1;
  const int last_col = left ? -1 : jj - n - 1;

  // Identity rows x_m with m >= first_x clear the columns x_m present in the
  // corner; identity columns y_k with k <= last_col clear the rows y_k.
  std::int64_t offset = 0;
  for (int m = std::max(first_x, first_col); m <= n; ++m) offset += d[BipartiteQuiver::x(m)];
  for (int k = 0; k <= std::min(last_y, last_col); ++k) offset += d[BipartiteQuiver::y(k)];

  // What is left is the snake restricted to rows y_{last_col+1..last_y} and
  // columns x_{first_col..first_x-1}: the interval of arrow positions below.
  const int lo = std::max(2 * first_col - 1, 2 * last_col + 2);
  const int hi = std::min(2 * first_x - 2, 2 * last_y + 1);
  if (lo <= hi) return {EntryKind::orbit, offset, Interval::arrows(lo, hi)};

  EntryKind kind = EntryKind::cell;
  if (top && left)
    kind = EntryKind::image;
  else if (!top && !left && ii != 2 * n + 1 && jj != 2 * n + 1)
    kind = EntryKind::image;
  return {kind, offset, std::nullopt};
}

ZelevinskyCellMatrix zelevinsky_map(const Representation& v) {
  const BipartiteQuiver q = v.require_bipartite();
  return ZelevinskyCellMatrix::from_free_block(BlockLayout(q, v.dims()), snake_matrix(v));
}

bool in_zelevinsky_image(const ZelevinskyCellMatrix& z) {
  const BlockLayout& layout = z.layout();
  const int n = static_cast<int>(layout.quiver().n());
  const ExactMatrix& m = z.matrix();
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n) + 1; ++i)
    for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
      const int k = layout.row_vertex(i) / 2;
      const int mm = (layout.col_vertex(j) + 1) / 2;
      if (k == mm - 1 || k == mm) continue;  // alpha_m or beta_m block
      for (std::size_t r = layout.row_end(i - 1); r < layout.row_end(i); ++r)
        for (std::size_t c = layout.col_end(j - 1); c < layout.col_end(j); ++c)
          if (!m.is_zero_at(r, c)) return false;
    }
  return true;
}

BlockRankMatrix block_rank_numeric(const ZelevinskyCellMatrix& z) {
  const BlockLayout& layout = z.layout();
  const std::size_t blocks = layout.block_count();
  BlockRankMatrix b(layout.quiver().n());
  for (std::size_t i = 1; i <= blocks; ++i) {
    const auto top = z.matrix().submatrix(0, 0, layout.row_end(i), layout.size());
    const auto ranks = prefix_column_ranks(top);
    for (std::size_t j = 1; j <= blocks; ++j)
      b.set(i, j, static_cast<std::int64_t>(ranks[layout.col_end(j)]));
  }
  return b;
}

BlockRankMatrix block_rank_symbolic(const RankArray& r, const DimensionVector& d) {
  const BlockLayout layout(r.quiver(), d);
  BlockRankMatrix b(r.quiver().n());
  for (std::size_t i = 1; i <= layout.block_count(); ++i)
    for (std::size_t j = 1; j <= layout.block_count(); ++j) {
      const auto rule = block_entry_rule(layout, i, j);
      b.set(i, j, rule.offset + (rule.interval ? r[*rule.interval] : 0));
    }
  return b;
}

RankArray recover_rank_array(const BlockRankMatrix& b, const DimensionVector& d) {
  const BipartiteQuiver q(b.n());
  const BlockLayout layout(q, d);
  RankArray r(q);
  std::vector<bool> seen(interval_count(q), false);
  for (std::size_t i = 1; i <= layout.block_count(); ++i)
    for (std::size_t j = 1; j <= layout.block_count(); ++j) {
      const auto rule = block_entry_rule(layout, i, j);
      const std::int64_t value = b.at(static_cast<long>(i), static_cast<long>(j));
      const std::string where = "block (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!rule.interval) {
        if (value != rule.offset)
          throw InvalidRankArray(where + " must equal " + std::to_string(rule.offset) +
                                 (rule.kind == EntryKind::image ? " (image condition)"
                                                                : " (cell condition)"));
        continue;
      }
      const std::int64_t rank = value - rule.offset;
      if (rank < 0) throw InvalidRankArray(where + " is below its offset");
      const std::size_t idx = interval_index(q, *rule.interval);
      if (seen[idx] && r[*rule.interval] != rank)
        throw InvalidRankArray(where + " disagrees with another entry for " + rule.interval->name());
      seen[idx] = true;
      r[*rule.interval] = rank;
    }
  for (const auto& j : enumerate_intervals(q))
    if (!j.is_vertex() && !seen[interval_index(q, j)])
      throw InvariantError("no block entry determines " + j.name());
  if (!validate_rank_array(r, d))
    throw InvalidRankArray("recovered array is not a rank array for this dimension vector");
  return r;
}

MinorInventory defining_minor_specs(const RankArray& r, const DimensionVector& d) {
  const BipartiteQuiver& q = r.quiver();
  const BlockLayout layout(q, d);
  MinorInventory inv;
  auto rows_of = [&](std::size_t block) {
    std::vector<std::size_t> out;
    for (std::size_t k = layout.row_end(block - 1); k < layout.row_end(block); ++k) out.push_back(k + 1);
    return out;
  };
  auto cols_of = [&](std::size_t block) {
    std::vector<std::size_t> out;
    for (std::size_t k = layout.col_end(block - 1); k < layout.col_end(block); ++k) out.push_back(k + 1);
    return out;
  };
  for (const auto& j : enumerate_intervals(q)) {
    if (j.is_vertex()) continue;
    MinorSpec spec{{}, {}, static_cast<std::size_t>(r[j]) + 1, "interval " + j.name()};
    for (int z = j.first; z <= j.last; ++z) {
      if (z % 2 == 0) {
        auto rs = rows_of(layout.row_block_of(z));
        spec.rows.insert(spec.rows.end(), rs.begin(), rs.end());
      } else {
        auto cs = cols_of(layout.col_block_of(z));
        spec.cols.insert(spec.cols.end(), cs.begin(), cs.end());
      }
    }
    std::ranges::sort(spec.rows);
    std::ranges::sort(spec.cols);
    inv.interval_specs.push_back(std::move(spec));
  }
  const BlockRankMatrix b = block_rank_symbolic(r, d);
  for (std::size_t i = 1; i <= layout.block_count(); ++i)
    for (std::size_t j = 1; j <= layout.block_count(); ++j) {
      MinorSpec spec{{}, {}, static_cast<std::size_t>(b.at(static_cast<long>(i), static_cast<long>(j))) + 1,
                     "block (" + std::to_string(i) + "," + std::to_string(j) + ")"};
      for (std::size_t k = 1; k <= layout.row_end(i); ++k) spec.rows.push_back(k);
      for (std::size_t k = 1; k <= layout.col_end(j); ++k) spec.cols.push_back(k);
      inv.block_specs.push_back(std::move(spec));
    }
  return inv;
}

}  // namespace qloci
