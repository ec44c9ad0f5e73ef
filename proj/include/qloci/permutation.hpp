#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qloci/zelevinsky.hpp"

namespace qloci {

/// A permutation of {1..d} in one-line notation; its matrix has a 1 at
/// (i, v(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless the entries are a bijection on 1..d.
  explicit Permutation(std::vector<std::size_t> one_line);
  static Permutation identity(std::size_t d);

  std::size_t size() const { return one_line_.size(); }
  /// v(i), 1-based.
  std::size_t operator()(std::size_t i) const { return one_line_.at(i - 1); }
  const std::vector<std::size_t>& one_line() const { return one_line_; }
  Permutation inverse() const;
  ExactMatrix to_matrix(Field field) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> one_line_;
};

/// Row and column block sizes of a d x d matrix.
struct BlockSpec {
  std::vector<std::size_t> row_sizes;
  std::vector<std::size_t> col_sizes;

  static BlockSpec from_layout(const BlockLayout& layout);
  std::size_t size() const;
  /// Block (1-based) holding matrix row r / column c (1-based).
  std::size_t row_block(std::size_t r) const;
  std::size_t col_block(std::size_t c) const;
  /// Last matrix row (column) of block i (j), 1-based; 0 for block 0.
  std::size_t row_end(std::size_t i) const;
  std::size_t col_end(std::size_t j) const;
};

/// A 1-based (row, column) position.
using Box = std::pair<std::size_t, std::size_t>;

/// The permutation with the prescribed number of 1s in each block, filled
/// northwest to southeast along every block row and column. Throws
/// InputError when a count is negative or the blocks cannot hold it.
Permutation zelevinsky_permutation(const BlockRankMatrix& b, const BlockSpec& blocks);

std::size_t inversion_length(const Permutation& p);
/// sum over blocks (i,j) of (1s in block (i,j)) * (b_{i-1,2n+1} - b_{i-1,j}).
std::int64_t length_from_blocks(const BlockRankMatrix& b);

std::vector<Box> diagram(const Permutation& p);
std::vector<Box> essential_set(const Permutation& p);
/// True when every essential box sits at the southeast corner of a block.
bool essential_in_block_corners(const Permutation& p, const BlockSpec& blocks);

/// Bruhat order by comparing northwest rank counts; throws InputError on a
/// size mismatch.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// The block antidiagonal [[0, 1_{d_y}], [1_{d_x}, 0]].
Permutation w_of(std::size_t d_x, std::size_t d_y);
Permutation w_of(const BipartiteQuiver& q, const DimensionVector& d);

bool is_block_minimal(const Permutation& p, const BlockSpec& blocks);

/// Block-minimal permutations pi with lower <= pi <= upper, in lexicographic
/// order of one-line notation. Exhaustive over S_d; throws GuardError for d > 10.
std::vector<Permutation> admissible_window(const Permutation& lower, const Permutation& upper,
                                           const BlockSpec& blocks);

}  // namespace qloci
