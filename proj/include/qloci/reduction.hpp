#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "qloci/quiver.hpp"
#include "qloci/representation.hpp"

namespace qloci {

/// The vertex w_i and arrow delta_i inserted at an equioriented junction z_i.
struct Insertion {
  std::size_t junction = 0;  // i, so the junction vertex is z_i
  bool sink = true;          // z_{i-1} -> z_i -> (sink w_i) or <- z_i <- (source w_i)
  int vertex = 0;            // w_i as a vertex of the target
  int delta = 0;             // delta_i as an arrow position of the target

  friend bool operator==(const Insertion&, const Insertion&) = default;
};

/// Bipartite double of a type A quiver of arbitrary orientation, with the
/// correspondence tables needed to move dimension vectors, representations and
/// base changes between the two.
struct ReductionContext {
  TypeAQuiver source;
  BipartiteQuiver target;
  /// A zero-dimensional sink was added before the first (after the last)
  /// vertex so that the target starts and ends at a sink.
  bool pad_left = false;
  bool pad_right = false;
  /// z_i -> target vertex index.
  std::vector<int> vertex_image;
  /// gamma_i (stored at i - 1) -> target arrow position.
  std::vector<int> arrow_image;
  std::vector<Insertion> insertions;

  /// The insertion at junction z_i, if any.
  const Insertion* insertion_at(std::size_t junction) const;

  friend bool operator==(const ReductionContext&, const ReductionContext&) = default;
};

ReductionContext bipartite_double(const TypeAQuiver& q);

DimensionVector lift_dimension(const ReductionContext& ctx, const DimensionVector& d);
/// Places each V_gamma on its image arrow and the identity on every delta_i.
Representation lift_rep(const ReductionContext& ctx, const Representation& v);
/// True when every delta map is invertible.
bool in_open_locus(const ReductionContext& ctx, const Representation& lifted);
/// Composes out the delta maps; throws InputError outside the open locus.
Representation project(const ReductionContext& ctx, const Representation& lifted);

/// rank_array(lift_rep(v)).
RankArray rank_array_arbitrary(const ReductionContext& ctx, const Representation& v);

/// The GL(d) factor of a base change of the target.
BaseChange project_base_change(const ReductionContext& ctx, const BaseChange& g);
/// Identity at every original vertex and g_star[k] at the k-th inserted vertex.
BaseChange embed_g_star(const ReductionContext& ctx, const DimensionVector& lifted_dims,
                        const std::vector<ExactMatrix>& g_star, Field field);

/// Uniform random point of the target representation space with invertible
/// delta maps (prime fields only).
Representation random_point_in_open_locus(const ReductionContext& ctx, const DimensionVector& d,
                                          Field field, std::mt19937_64& rng);

}  // namespace qloci
