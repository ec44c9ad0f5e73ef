#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "qloci/field.hpp"

namespace qloci {

/// Dense row-major matrix over a Field. Matrices with zero rows or zero
/// columns are ordinary values with rank 0.
class ExactMatrix {
 public:
  ExactMatrix() : ExactMatrix(Field::rationals(), 0, 0) {}
  ExactMatrix(Field field, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(Field field, std::size_t n);
  /// Row-major integer entries; throws InputError on a size mismatch.
  static ExactMatrix from_integers(Field field, std::size_t rows, std::size_t cols,
                                   const std::vector<long>& entries);
  static ExactMatrix from_rows(Field field, const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldScalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldScalar& value);
  void set(std::size_t r, std::size_t c, long value);
  bool is_zero_at(std::size_t r, std::size_t c) const;
  bool is_zero() const;

  // Raw storage views; the field decides which one is valid.
  std::span<const std::uint32_t> residues() const;
  std::span<std::uint32_t> residues();
  std::span<const mpq_class> rationals() const;

  ExactMatrix transpose() const;
  ExactMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                        std::size_t ncols) const;
  /// Copies `block` into this matrix with its top-left corner at (row0, col0).
  void paste(std::size_t row0, std::size_t col0, const ExactMatrix& block);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t index(std::size_t r, std::size_t c) const { return r * cols_ + c; }
  void check_bounds(std::size_t r, std::size_t c) const;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::variant<std::vector<std::uint32_t>, std::vector<mpq_class>> data_;
};

/// Row rank by exact elimination; fraction-free (Bareiss) over Q.
std::size_t rank(const ExactMatrix& m);

/// Pivot columns of the row echelon form, ascending. The rank of the first q
/// columns equals the number of pivots below q.
std::vector<std::size_t> pivot_columns(const ExactMatrix& m);

/// rank(m[:, 0:q]) for q = 0..cols, from a single elimination.
std::vector<std::size_t> prefix_column_ranks(const ExactMatrix& m);

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b);

/// Throws InputError for non-square or singular input.
ExactMatrix inverse(const ExactMatrix& m);

/// Uniform random entries; prime fields only.
ExactMatrix random_matrix(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
/// Uniform random invertible matrix, by rejection; prime fields only.
ExactMatrix random_invertible(Field field, std::size_t n, std::mt19937_64& rng);

/// Block-diagonal sum diag(a, b).
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

/// Grid of optional blocks; absent blocks are zero. layout[i][j] must have
/// shape row_sizes[i] x col_sizes[j] when present.
using BlockLayoutGrid = std::vector<std::vector<std::optional<ExactMatrix>>>;
ExactMatrix assemble_blocks(Field field, const BlockLayoutGrid& layout,
                            const std::vector<std::size_t>& row_sizes,
                            const std::vector<std::size_t>& col_sizes);

}  // namespace qloci
