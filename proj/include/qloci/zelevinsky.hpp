#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qloci/matrix.hpp"
#include "qloci/quiver.hpp"
#include "qloci/representation.hpp"

namespace qloci {

/// Block structure of the d x d matrices [[*, 1_{d_y}], [1_{d_x}, 0]].
///
/// Block rows are numbered 1..2n+1 and carry the vertices
/// y_0, ..., y_n, x_n, ..., x_1; block columns carry x_n, ..., x_1, y_0, ..., y_n.
/// All translation between the numeric and vertex labelings lives here.
class BlockLayout {
 public:
  BlockLayout(BipartiteQuiver q, DimensionVector d);

  const BipartiteQuiver& quiver() const { return quiver_; }
  const DimensionVector& dims() const { return dims_; }
  std::size_t block_count() const { return 2 * quiver_.n() + 1; }
  std::size_t size() const { return d_x_ + d_y_; }
  std::size_t d_x() const { return d_x_; }
  std::size_t d_y() const { return d_y_; }

  /// Vertex index of numeric block row i / block column j (1-based).
  int row_vertex(std::size_t i) const;
  int col_vertex(std::size_t j) const;
  std::size_t row_block_of(int vertex) const;
  std::size_t col_block_of(int vertex) const;

  std::size_t row_size(std::size_t i) const { return dims_[row_vertex(i)]; }
  std::size_t col_size(std::size_t j) const { return dims_[col_vertex(j)]; }
  /// Number of matrix rows (columns) in blocks 1..i (1..j); 0 for i = 0.
  std::size_t row_end(std::size_t i) const { return row_end_.at(i); }
  std::size_t col_end(std::size_t j) const { return col_end_.at(j); }

  std::vector<std::size_t> row_sizes() const;
  std::vector<std::size_t> col_sizes() const;

 private:
  BipartiteQuiver quiver_;
  DimensionVector dims_;
  std::size_t d_x_ = 0;
  std::size_t d_y_ = 0;
  std::vector<std::size_t> row_end_;
  std::vector<std::size_t> col_end_;
};

/// A matrix of the opposite cell: identity blocks and zero quadrant fixed,
/// free d_y x d_x block in the northwest.
class ZelevinskyCellMatrix {
 public:
  /// Throws InputError unless `m` has the cell shape for `layout`.
  ZelevinskyCellMatrix(BlockLayout layout, ExactMatrix m);
  static ZelevinskyCellMatrix from_free_block(BlockLayout layout, const ExactMatrix& star);

  const BlockLayout& layout() const { return layout_; }
  const ExactMatrix& matrix() const { return matrix_; }
  ExactMatrix free_block() const;

 private:
  BlockLayout layout_;
  ExactMatrix matrix_;
};

/// (2n+1) x (2n+1) grid of northwest block ranks, 1-based; reads outside
/// 1..2n+1 return 0.
class BlockRankMatrix {
 public:
  BlockRankMatrix() = default;
  explicit BlockRankMatrix(std::size_t n);
  static BlockRankMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t n() const { return n_; }
  std::size_t size() const { return 2 * n_ + 1; }
  std::int64_t at(long i, long j) const;
  void set(std::size_t i, std::size_t j, std::int64_t value);
  /// b_{i,j} + b_{i-1,j-1} - b_{i,j-1} - b_{i-1,j}: the 1s in block (i,j) of v(r).
  std::int64_t block_count(std::size_t i, std::size_t j) const;
  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const BlockRankMatrix&, const BlockRankMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> values_;
};

/// Which family a block rank entry belongs to.
enum class EntryKind {
  cell,   // forced for every matrix of the cell
  image,  // forced for matrices in the image of the Zelevinsky map
  orbit,  // offset + r_J for one interval J
};

struct BlockEntryRule {
  EntryKind kind;
  std::int64_t offset;               // dimensions of identity blocks cleared by the corner
  std::optional<Interval> interval;  // set for orbit entries
};

/// Closed form of b_{i,j} in terms of d and a single rank r_J.
BlockEntryRule block_entry_rule(const BlockLayout& layout, std::size_t i, std::size_t j);

ZelevinskyCellMatrix zelevinsky_map(const Representation& v);
/// True when the free block has the snake shape (zeros off the staircase).
bool in_zelevinsky_image(const ZelevinskyCellMatrix& z);

/// Ranks of the northwest submatrices through each block, by elimination.
BlockRankMatrix block_rank_numeric(const ZelevinskyCellMatrix& z);
/// The same matrix from r and d alone.
BlockRankMatrix block_rank_symbolic(const RankArray& r, const DimensionVector& d);
/// Left inverse of block_rank_symbolic; throws InvalidRankArray when a forced
/// entry is violated or the recovered array is not a rank array.
RankArray recover_rank_array(const BlockRankMatrix& b, const DimensionVector& d);

/// "Minors of size `size` in the submatrix rows x cols of Z", with 1-based
/// indices in Zelevinsky-matrix coordinates.
struct MinorSpec {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::size_t size;
  std::string source;  // "interval [a1,b2]" or "block (i,j)"

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

struct MinorInventory {
  std::vector<MinorSpec> interval_specs;
  std::vector<MinorSpec> block_specs;
};

MinorInventory defining_minor_specs(const RankArray& r, const DimensionVector& d);

}  // namespace qloci
