#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qloci {

/// Direction of arrow gamma_i between z_{i-1} and z_i: `left` points at
/// z_{i-1}, `right` at z_i.
enum class Direction { left, right };

/// Type A quiver z_0 - z_1 - ... - z_n with an arbitrary orientation word.
class TypeAQuiver {
 public:
  TypeAQuiver() = default;
  explicit TypeAQuiver(std::vector<Direction> orientation) : orientation_(std::move(orientation)) {}
  /// Parses a word over {L, R}; throws InputError on other characters.
  static TypeAQuiver parse(std::string_view word);

  std::size_t vertex_count() const { return orientation_.size() + 1; }
  std::size_t arrow_count() const { return orientation_.size(); }
  /// Arrows are numbered 1..arrow_count().
  Direction direction(std::size_t arrow) const { return orientation_.at(arrow - 1); }
  std::size_t tail(std::size_t arrow) const;
  std::size_t head(std::size_t arrow) const;
  const std::vector<Direction>& orientation() const { return orientation_; }
  std::string word() const;

  bool is_sink(std::size_t vertex) const;
  bool is_source(std::size_t vertex) const;
  /// Every vertex is a sink or a source.
  bool is_alternating() const;

  friend bool operator==(const TypeAQuiver&, const TypeAQuiver&) = default;

 private:
  std::vector<Direction> orientation_;
};

/// Bipartite type A quiver y_0 <- x_1 -> y_1 <- x_2 -> ... -> y_n.
///
/// Vertices are indexed linearly, y_k = 2k and x_m = 2m - 1, and arrows by
/// position, alpha_m = 2m - 1 and beta_m = 2m; arrow at position q joins
/// vertices q - 1 and q. Indices outside [0, 2n] name the zero-dimensional
/// padding of the longer quiver (x_0 = -1, beta_0 = 0, alpha_{n+1} = 2n + 1).
class BipartiteQuiver {
 public:
  explicit BipartiteQuiver(std::size_t n = 0) : n_(n) {}
  /// The bipartite labeling of an orientation word, if it is one
  /// ("", "LR", "LRLR", ...).
  static std::optional<BipartiteQuiver> from_type_a(const TypeAQuiver& q);

  std::size_t n() const { return n_; }
  std::size_t vertex_count() const { return 2 * n_ + 1; }
  std::size_t arrow_count() const { return 2 * n_; }
  TypeAQuiver as_type_a() const;

  static int y(int k) { return 2 * k; }
  static int x(int m) { return 2 * m - 1; }
  static int alpha(int m) { return 2 * m - 1; }
  static int beta(int m) { return 2 * m; }

  static std::string vertex_name(int index);
  static std::string arrow_name(int position);
  /// Inverse of vertex_name / arrow_name; throws InputError.
  static int parse_vertex(std::string_view name);
  static int parse_arrow(std::string_view name);

  friend bool operator==(const BipartiteQuiver&, const BipartiteQuiver&) = default;
  friend auto operator<=>(const BipartiteQuiver&, const BipartiteQuiver&) = default;

 private:
  std::size_t n_;
};

/// Nonnegative dimension per vertex, in vertex-index order. Reads outside the
/// stored range return 0.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<std::size_t> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  std::size_t operator[](int vertex) const {
    return vertex < 0 || static_cast<std::size_t>(vertex) >= values_.size() ? 0 : values_[vertex];
  }
  void set(std::size_t vertex, std::size_t value) { values_.at(vertex) = value; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t total() const;
  bool is_zero() const { return total() == 0; }

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;

 private:
  std::vector<std::size_t> values_;
};

/// Parses "1,2,3".
DimensionVector parse_dimension_csv(std::string_view csv);

/// Sum of d over x vertices (d_x) and over y vertices (d_y) of a bipartite quiver.
std::size_t total_x(const BipartiteQuiver& q, const DimensionVector& d);
std::size_t total_y(const BipartiteQuiver& q, const DimensionVector& d);

/// A connected range of vertices first..last; its arrows are the positions
/// first+1..last. A single vertex has first == last.
struct Interval {
  int first = 0;
  int last = 0;

  static Interval vertex(int v) { return {v, v}; }
  /// Arrow positions left..right, left <= right.
  static Interval arrows(int left, int right);

  int arrow_count() const { return last - first; }
  bool is_vertex() const { return first == last; }
  bool contains_vertex(int v) const { return first <= v && v <= last; }
  int left_arrow() const { return first + 1; }
  int right_arrow() const { return last; }
  /// True if it reaches outside the vertices of the n-quiver.
  bool has_phantom(std::size_t n) const;

  std::string name() const;

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// All intervals, by left vertex then length.
std::vector<Interval> enumerate_intervals(const BipartiteQuiver& q);
/// Position of an in-range interval in enumerate_intervals order.
std::size_t interval_index(const BipartiteQuiver& q, const Interval& j);
std::size_t interval_count(const BipartiteQuiver& q);

Interval shift_left(const Interval& j);
Interval shift_right(const Interval& j);
/// Common vertices; nullopt when disjoint.
std::optional<Interval> interval_meet(const Interval& a, const Interval& b);
/// Convex hull.
Interval interval_join(const Interval& a, const Interval& b);
/// Arrows shared by a and b.
int shared_arrow_count(const Interval& a, const Interval& b);
/// Truncation to the vertices 0..2n; nullopt if nothing remains.
std::optional<Interval> clip(const Interval& j, const BipartiteQuiver& q);

}  // namespace qloci
