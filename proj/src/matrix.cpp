#include "qloci/matrix.hpp"

#include <algorithm>
#include <string>

#include "qloci/errors.hpp"

namespace qloci {

namespace {

std::string shape(const ExactMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_field(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field() == b.field()))
    throw InputError("field mismatch: " + a.field().name() + " vs " + b.field().name());
}

// Row echelon over F_p in place; returns pivot columns.
std::vector<std::size_t> echelon_modp(std::vector<std::uint32_t>& a, std::size_t rows,
                                      std::size_t cols, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
    const std::uint32_t inv = modp::inv(a[r * cols + c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint32_t f = a[i * cols + c];
      if (f == 0) continue;
      const std::uint32_t factor = modp::mul(f, inv, p);
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = modp::sub(a[i * cols + j], modp::mul(factor, a[r * cols + j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Fraction-free (Bareiss) row echelon over Z after clearing denominators
// row by row; returns pivot columns.
std::vector<std::size_t> echelon_bareiss(std::span<const mpq_class> entries, std::size_t rows,
                                         std::size_t cols) {
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), entries[i * cols + j].get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = entries[i * cols + j];
      a[i * cols + j] = q.get_num() * (lcm / q.get_den());
    }
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  mpz_class t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const mpz_class& pv = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = pv * a[i * cols + j] - a[i * cols + c] * a[r * cols + j];
        mpz_divexact(a[i * cols + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    prev = pv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_rational())
    data_ = std::vector<mpq_class>(rows * cols);
  else
    data_ = std::vector<std::uint32_t>(rows * cols, 0);
}

ExactMatrix ExactMatrix::identity(Field field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1L);
  return m;
}

ExactMatrix ExactMatrix::from_integers(Field field, std::size_t rows, std::size_t cols,
                                       const std::vector<long>& entries) {
  if (entries.size() != rows * cols)
    throw InputError("expected " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(entries.size()));
  ExactMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entries[i * cols + j]);
  return m;
}

ExactMatrix ExactMatrix::from_rows(Field field, const std::vector<std::vector<long>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::vector<long> flat;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw InputError("ragged matrix rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_integers(field, rows.size(), ncols, flat);
}

void ExactMatrix::check_bounds(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw InputError("index (" + std::to_string(r) + "," + std::to_string(c) +
                     ") out of range for " + shape(*this));
}

FieldScalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  check_bounds(r, c);
  if (field_.is_rational()) return {field_, std::get<1>(data_)[index(r, c)]};
  return {field_, static_cast<long>(std::get<0>(data_)[index(r, c)])};
}

void ExactMatrix::set(std::size_t r, std::size_t c, const FieldScalar& value) {
  check_bounds(r, c);
  if (!(value.field() == field_))
    throw InputError("field mismatch: " + field_.name() + " vs " + value.field().name());
  if (field_.is_rational())
    std::get<1>(data_)[index(r, c)] = value.rational();
  else
    std::get<0>(data_)[index(r, c)] = value.residue();
}

void ExactMatrix::set(std::size_t r, std::size_t c, long value) {
  check_bounds(r, c);
  if (field_.is_rational())
    std::get<1>(data_)[index(r, c)] = value;
  else
    std::get<0>(data_)[index(r, c)] = modp::reduce(value, field_.characteristic());
}

bool ExactMatrix::is_zero_at(std::size_t r, std::size_t c) const {
  check_bounds(r, c);
  if (field_.is_rational()) return sgn(std::get<1>(data_)[index(r, c)]) == 0;
  return std::get<0>(data_)[index(r, c)] == 0;
}

bool ExactMatrix::is_zero() const {
  if (field_.is_rational())
    return std::ranges::all_of(std::get<1>(data_), [](const mpq_class& q) { return sgn(q) == 0; });
  return std::ranges::all_of(std::get<0>(data_), [](std::uint32_t v) { return v == 0; });
}

std::span<const std::uint32_t> ExactMatrix::residues() const {
  if (field_.is_rational()) throw InputError("residues() on a rational matrix");
  return std::get<0>(data_);
}

std::span<std::uint32_t> ExactMatrix::residues() {
  if (field_.is_rational()) throw InputError("residues() on a rational matrix");
  return std::get<0>(data_);
}

std::span<const mpq_class> ExactMatrix::rationals() const {
  if (!field_.is_rational()) throw InputError("rationals() on a prime-field matrix");
  return std::get<1>(data_);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(t.data_);
        for (std::size_t i = 0; i < rows_; ++i)
          for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
      },
      data_);
  return t;
}

ExactMatrix ExactMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                                   std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw InputError("submatrix out of range for " + shape(*this));
  ExactMatrix s(field_, nrows, ncols);
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(s.data_);
        for (std::size_t i = 0; i < nrows; ++i)
          std::copy_n(src.begin() + (row0 + i) * cols_ + col0, ncols, dst.begin() + i * ncols);
      },
      data_);
  return s;
}

void ExactMatrix::paste(std::size_t row0, std::size_t col0, const ExactMatrix& block) {
  require_same_field(*this, block);
  if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_)
    throw InputError("block " + shape(block) + " does not fit at (" + std::to_string(row0) + "," +
                     std::to_string(col0) + ") in " + shape(*this));
  std::visit(
      [&](auto& dst) {
        const auto& src = std::get<std::decay_t<decltype(dst)>>(block.data_);
        for (std::size_t i = 0; i < block.rows_; ++i)
          std::copy_n(src.begin() + i * block.cols_, block.cols_,
                      dst.begin() + (row0 + i) * cols_ + col0);
      },
      data_);
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::size_t> pivot_columns(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  if (m.field().is_rational()) return echelon_bareiss(m.rationals(), m.rows(), m.cols());
  auto span = m.residues();
  std::vector<std::uint32_t> a(span.begin(), span.end());
  return echelon_modp(a, m.rows(), m.cols(), m.field().characteristic());
}

std::size_t rank(const ExactMatrix& m) { return pivot_columns(m).size(); }

std::vector<std::size_t> prefix_column_ranks(const ExactMatrix& m) {
  std::vector<std::size_t> out(m.cols() + 1, 0);
  const auto pivots = pivot_columns(m);
  std::size_t k = 0;
  for (std::size_t q = 1; q <= m.cols(); ++q) {
    if (k < pivots.size() && pivots[k] == q - 1) ++k;
    out[q] = k;
  }
  return out;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows())
    throw InputError("cannot multiply " + shape(a) + " by " + shape(b));
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  ExactMatrix c(a.field(), n, m);
  if (a.field().is_prime()) {
    const std::uint32_t p = a.field().characteristic();
    auto x = a.residues(), y = b.residues();
    auto z = c.residues();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < k; ++t) {
        const std::uint32_t f = x[i * k + t];
        if (f == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
          z[i * m + j] = modp::add(z[i * m + j], modp::mul(f, y[t * m + j], p), p);
      }
    return c;
  }
  auto x = a.rationals(), y = b.rationals();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      mpq_class s = 0;
      for (std::size_t t = 0; t < k; ++t) s += x[i * k + t] * y[t * m + j];
      c.set(i, j, FieldScalar(a.field(), s));
    }
  return c;
}

ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("cannot add " + shape(a) + " and " + shape(b));
  ExactMatrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a.at(i, j) + b.at(i, j));
  return c;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("cannot invert non-square " + shape(m));
  const std::size_t n = m.rows();
  const Field field = m.field();
  // Gauss-Jordan on [m | I]
  std::vector<FieldScalar> a;
  a.reserve(n * 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));
    for (std::size_t j = 0; j < n; ++j) a.emplace_back(field, i == j ? 1L : 0L);
  }
  const std::size_t w = 2 * n;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * w + c].is_zero()) ++piv;
    if (piv == n) throw InputError("matrix is singular");
    if (piv != c)
      for (std::size_t j = 0; j < w; ++j) std::swap(a[piv * w + j], a[c * w + j]);
    const FieldScalar inv = a[c * w + c].inverse();
    for (std::size_t j = 0; j < w; ++j) a[c * w + j] = a[c * w + j] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i * w + c].is_zero()) continue;
      const FieldScalar f = a[i * w + c];
      for (std::size_t j = 0; j < w; ++j) a[i * w + j] = a[i * w + j] - f * a[c * w + j];
    }
  }
  ExactMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, a[i * w + n + j]);
  return out;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b);
  ExactMatrix s(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  s.paste(0, 0, a);
  s.paste(a.rows(), a.cols(), b);
  return s;
}

ExactMatrix assemble_blocks(Field field, const BlockLayoutGrid& layout,
                            const std::vector<std::size_t>& row_sizes,
                            const std::vector<std::size_t>& col_sizes) {
  if (layout.size() != row_sizes.size())
    throw InputError("block layout has " + std::to_string(layout.size()) + " rows, expected " +
                     std::to_string(row_sizes.size()));
  std::size_t total_rows = 0, total_cols = 0;
  for (auto s : row_sizes) total_rows += s;
  for (auto s : col_sizes) total_cols += s;
  ExactMatrix out(field, total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i].size() != col_sizes.size())
      throw InputError("block layout row " + std::to_string(i) + " has wrong length");
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < col_sizes.size(); ++j) {
      if (const auto& blk = layout[i][j]) {
        if (blk->rows() != row_sizes[i] || blk->cols() != col_sizes[j])
          throw InputError("block (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                           shape(*blk) + ", slot is " + std::to_string(row_sizes[i]) + "x" +
                           std::to_string(col_sizes[j]));
        out.paste(r0, c0, *blk);
      }
      c0 += col_sizes[j];
    }
    r0 += row_sizes[i];
  }
  return out;
}

ExactMatrix random_matrix(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  if (!field.is_prime()) throw InputError("random matrices are only drawn over prime fields");
  std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
  ExactMatrix m(field, rows, cols);
  for (auto& e : m.residues()) e = dist(rng);
  return m;
}

ExactMatrix random_invertible(Field field, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    ExactMatrix m = random_matrix(field, n, n, rng);
    if (rank(m) == n) return m;
  }
}

}  // namespace qloci
