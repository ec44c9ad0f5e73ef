#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qloci/errors.hpp"
#include "qloci/matrix.hpp"
#include "qloci/quiver.hpp"

namespace qloci {

/// A point of rep_Q(d): one matrix of shape d(head) x d(tail) per arrow of a
/// type A quiver, all over one field.
class Representation {
 public:
  /// Throws InputError on any shape or field mismatch.
  Representation(TypeAQuiver quiver, DimensionVector dims, std::vector<ExactMatrix> arrows,
                 Field field);
  static Representation zero(const TypeAQuiver& quiver, const DimensionVector& dims, Field field);
  static Representation zero(const BipartiteQuiver& quiver, const DimensionVector& dims,
                             Field field);

  const TypeAQuiver& quiver() const { return quiver_; }
  const DimensionVector& dims() const { return dims_; }
  const Field& field() const { return field_; }
  /// Arrow matrices, 1-based.
  const ExactMatrix& arrow(std::size_t i) const { return arrows_.at(i - 1); }
  const std::vector<ExactMatrix>& arrows() const { return arrows_; }
  /// Replaces one arrow matrix (shape-checked).
  void set_arrow(std::size_t i, ExactMatrix m);

  std::optional<BipartiteQuiver> bipartite() const { return BipartiteQuiver::from_type_a(quiver_); }
  /// Throws InputError when the quiver is not in bipartite labeling.
  BipartiteQuiver require_bipartite() const;
  const ExactMatrix& alpha(int m) const { return arrow(BipartiteQuiver::alpha(m)); }
  const ExactMatrix& beta(int m) const { return arrow(BipartiteQuiver::beta(m)); }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  TypeAQuiver quiver_;
  DimensionVector dims_;
  std::vector<ExactMatrix> arrows_;
  Field field_;
};

/// Thrown when an array of integers is not the rank array of any representation.
class InvalidRankArray : public InputError {
 public:
  using InputError::InputError;
};

/// Integer function on the intervals of a bipartite quiver, stored densely in
/// enumerate_intervals order.
class IntervalArray {
 public:
  IntervalArray() = default;
  explicit IntervalArray(BipartiteQuiver q);
  IntervalArray(BipartiteQuiver q, std::vector<std::int64_t> values);

  const BipartiteQuiver& quiver() const { return quiver_; }
  std::size_t size() const { return values_.size(); }
  /// In-range intervals only.
  std::int64_t& operator[](const Interval& j);
  std::int64_t operator[](const Interval& j) const;
  const std::vector<std::int64_t>& values() const { return values_; }

  friend bool operator==(const IntervalArray&, const IntervalArray&) = default;
  friend auto operator<=>(const IntervalArray&, const IntervalArray&) = default;

 protected:
  BipartiteQuiver quiver_;
  std::vector<std::int64_t> values_;
};

/// J -> r_J. Reads through `rank()` accept intervals reaching into the zero
/// padding; they are truncated, and empty intervals read as 0.
class RankArray : public IntervalArray {
 public:
  using IntervalArray::IntervalArray;
  std::int64_t rank(const std::optional<Interval>& j) const;
  /// Componentwise order.
  bool leq(const RankArray& other) const;
};

/// J -> s_J, multiplicity of the indecomposable supported on J.
class LaceArray : public IntervalArray {
 public:
  using IntervalArray::IntervalArray;
  /// d(z) = sum of s_J over J containing z.
  DimensionVector dimension() const;
};

/// The staircase M_J; single-vertex intervals give a d(v) x 0 matrix.
ExactMatrix assemble_interval_matrix(const Representation& v, const Interval& j);
/// The full snake matrix M_Q.
ExactMatrix snake_matrix(const Representation& v);

std::size_t rank_function(const Representation& v, const Interval& j);
RankArray rank_array(const Representation& v);

/// r_J = sum_J' s_J' * ceil(#(J cap J') / 2).
RankArray lace_to_rank(const LaceArray& s);
/// The signed four-term combination of shifted ranks for an interval with at
/// least one arrow.
std::int64_t shifted_rank_combination(const RankArray& r, const Interval& j);
/// Throws InvalidRankArray on a negative multiplicity.
LaceArray rank_to_lace(const RankArray& r, const DimensionVector& d);
bool validate_rank_array(const RankArray& f, const DimensionVector& d);

/// The indecomposable I_J with dimension 1 on J and identity maps inside J.
Representation indecomposable_rep(const BipartiteQuiver& q, const Interval& j, Field field);
/// Realizes a lace array as a direct sum of indecomposables.
Representation realize_lace(const LaceArray& s, Field field);

Representation direct_sum(const Representation& u, const Representation& v);

/// Uniform random point of rep_Q(d)(F_p).
Representation random_representation(const TypeAQuiver& q, const DimensionVector& d, Field field,
                                     std::mt19937_64& rng);

/// One invertible matrix per vertex.
using BaseChange = std::vector<ExactMatrix>;
/// g . V = (g_{ha} V_a g_{ta}^{-1}); throws InputError on a singular or
/// mis-sized g_z.
Representation act(const BaseChange& g, const Representation& v);
BaseChange compose(const BaseChange& g, const BaseChange& h);
/// Uniform random element of GL(d)(F_p).
BaseChange random_base_change(const DimensionVector& d, Field field, std::mt19937_64& rng);

}  // namespace qloci
