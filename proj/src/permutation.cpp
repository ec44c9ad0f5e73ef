#include "qloci/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "qloci/errors.hpp"

namespace qloci {

Permutation::Permutation(std::vector<std::size_t> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (auto v : one_line_) {
    if (v < 1 || v > one_line_.size() || seen[v])
      throw InputError("not a permutation of 1.." + std::to_string(one_line_.size()));
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<std::size_t> v(d);
  std::iota(v.begin(), v.end(), std::size_t{1});
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[one_line_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

ExactMatrix Permutation::to_matrix(Field field) const {
  ExactMatrix m(field, size(), size());
  for (std::size_t i = 0; i < size(); ++i) m.set(i, one_line_[i] - 1, 1L);
  return m;
}

BlockSpec BlockSpec::from_layout(const BlockLayout& layout) {
  return {layout.row_sizes(), layout.col_sizes()};
}

std::size_t BlockSpec::size() const {
  return std::accumulate(row_sizes.begin(), row_sizes.end(), std::size_t{0});
}

std::size_t BlockSpec::row_end(std::size_t i) const {
  return std::accumulate(row_sizes.begin(), row_sizes.begin() + static_cast<long>(i), std::size_t{0});
}

std::size_t BlockSpec::col_end(std::size_t j) const {
  return std::accumulate(col_sizes.begin(), col_sizes.begin() + static_cast<long>(j), std::size_t{0});
}

std::size_t BlockSpec::row_block(std::size_t r) const {
  std::size_t end = 0;
  for (std::size_t i = 0; i < row_sizes.size(); ++i) {
    end += row_sizes[i];
    if (r <= end) return i + 1;
  }
  throw InputError("row " + std::to_string(r) + " outside the block structure");
}

std::size_t BlockSpec::col_block(std::size_t c) const {
  std::size_t end = 0;
  for (std::size_t j = 0; j < col_sizes.size(); ++j) {
    end += col_sizes[j];
    if (c <= end) return j + 1;
  }
  throw InputError("column " + std::to_string(c) + " outside the block structure");
}

Permutation zelevinsky_permutation(const BlockRankMatrix& b, const BlockSpec& blocks) {
  const std::size_t s = b.size();
  if (blocks.row_sizes.size() != s || blocks.col_sizes.size() != s)
    throw InputError("block structure does not match the block rank matrix");
  const std::size_t d = blocks.size();
  if (std::accumulate(blocks.col_sizes.begin(), blocks.col_sizes.end(), std::size_t{0}) != d)
    throw InputError("row and column blocks have different totals");

  std::vector<std::size_t> next_row(s), next_col(s);
  for (std::size_t i = 0; i < s; ++i) {
    next_row[i] = blocks.row_end(i) + 1;
    next_col[i] = blocks.col_end(i) + 1;
  }
  std::vector<std::size_t> one_line(d, 0);
  for (std::size_t i = 1; i <= s; ++i)
    for (std::size_t j = 1; j <= s; ++j) {
      const std::int64_t c = b.block_count(i, j);
      const std::string where = "block (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (c < 0) throw InputError(where + " would hold a negative number of 1s");
      const auto cu = static_cast<std::size_t>(c);
      if (next_row[i - 1] + cu > blocks.row_end(i) + 1 || next_col[j - 1] + cu > blocks.col_end(j) + 1)
        throw InputError(where + " cannot hold " + std::to_string(c) + " 1s");
      for (std::size_t k = 0; k < cu; ++k) one_line[next_row[i - 1]++ - 1] = next_col[j - 1]++;
    }
  if (std::ranges::find(one_line, std::size_t{0}) != one_line.end())
    throw InputError("block counts do not fill every row");
  return Permutation(std::move(one_line));
}

std::size_t inversion_length(const Permutation& p) {
  std::size_t count = 0;
  const auto& v = p.one_line();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++count;
  return count;
}

std::int64_t length_from_blocks(const BlockRankMatrix& b) {
  const long s = static_cast<long>(b.size());
  std::int64_t total = 0;
  for (long i = 1; i <= s; ++i)
    for (long j = 1; j <= s; ++j)
      total += b.block_count(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
               (b.at(i - 1, s) - b.at(i - 1, j));
  return total;
}

std::vector<Box> diagram(const Permutation& p) {
  const Permutation inv = p.inverse();
  std::vector<Box> boxes;
  for (std::size_t i = 1; i <= p.size(); ++i)
    for (std::size_t j = 1; j <= p.size(); ++j)
      if (p(i) > j && inv(j) > i) boxes.emplace_back(i, j);
  return boxes;
}

std::vector<Box> essential_set(const Permutation& p) {
  const auto boxes = diagram(p);
  const std::set<Box> in(boxes.begin(), boxes.end());
  std::vector<Box> ess;
  for (const auto& [i, j] : boxes)
    if (!in.contains({i + 1, j}) && !in.contains({i, j + 1})) ess.emplace_back(i, j);
  return ess;
}

bool essential_in_block_corners(const Permutation& p, const BlockSpec& blocks) {
  for (const auto& [i, j] : essential_set(p))
    if (blocks.row_end(blocks.row_block(i)) != i || blocks.col_end(blocks.col_block(j)) != j)
      return false;
  return true;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw InputError("Bruhat comparison of permutations of different sizes");
  const std::size_t d = u.size();
  // cu[q] = #{k <= p : u(k) <= q}, updated row by row.
  std::vector<long> cu(d + 1, 0), cv(d + 1, 0);
  for (std::size_t p = 1; p <= d; ++p) {
    for (std::size_t q = u(p); q <= d; ++q) ++cu[q];
    for (std::size_t q = v(p); q <= d; ++q) ++cv[q];
    for (std::size_t q = 1; q <= d; ++q)
      if (cu[q] < cv[q]) return false;
  }
  return true;
}

Permutation w_of(std::size_t d_x, std::size_t d_y) {
  std::vector<std::size_t> v;
  for (std::size_t i = 1; i <= d_y; ++i) v.push_back(d_x + i);
  for (std::size_t i = 1; i <= d_x; ++i) v.push_back(i);
  return Permutation(std::move(v));
}

Permutation w_of(const BipartiteQuiver& q, const DimensionVector& d) {
  return w_of(total_x(q, d), total_y(q, d));
}

bool is_block_minimal(const Permutation& p, const BlockSpec& blocks) {
  if (blocks.size() != p.size()) throw InputError("block structure does not match the permutation");
  for (std::size_t i = 1; i <= blocks.row_sizes.size(); ++i)
    for (std::size_t r = blocks.row_end(i - 1) + 1; r < blocks.row_end(i); ++r)
      if (p(r) > p(r + 1)) return false;
  const Permutation inv = p.inverse();
  for (std::size_t j = 1; j <= blocks.col_sizes.size(); ++j)
    for (std::size_t c = blocks.col_end(j - 1) + 1; c < blocks.col_end(j); ++c)
      if (inv(c) > inv(c + 1)) return false;
  return true;
}

std::vector<Permutation> admissible_window(const Permutation& lower, const Permutation& upper,
                                           const BlockSpec& blocks) {
  const std::size_t d = lower.size();
  if (d > 10) throw GuardError("admissible window enumeration is limited to d <= 10");
  std::vector<std::size_t> v = Permutation::identity(d).one_line();
  std::vector<Permutation> out;
  do {
    Permutation pi(v);
    if (is_block_minimal(pi, blocks) && bruhat_leq(lower, pi) && bruhat_leq(pi, upper))
      out.push_back(std::move(pi));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace qloci
