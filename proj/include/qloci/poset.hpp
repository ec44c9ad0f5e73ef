#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qloci/exec.hpp"
#include "qloci/permutation.hpp"
#include "qloci/representation.hpp"
#include "qloci/zelevinsky.hpp"

namespace qloci {

/// One GL(d)-orbit of rep_Q(d), identified by its Krull-Schmidt type.
struct OrbitNode {
  LaceArray lace;
  RankArray rank;
  BlockRankMatrix blocks;
  Permutation permutation;
  std::size_t length = 0;
  std::int64_t dimension = 0;

  /// Canonical serialization of the rank array, used as the node identity.
  std::string key() const;
};

/// Orbits of one (Q, d) with the covering relations of the rank-array order.
struct DegenerationPoset {
  BipartiteQuiver quiver;
  DimensionVector dims;
  std::vector<OrbitNode> nodes;
  /// Pairs [lower, upper] of node indices.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  /// Indices of the nodes with nothing above (below) them.
  std::vector<std::size_t> maximal() const;
  std::vector<std::size_t> minimal() const;
};

/// Upper bound on the number of lace arrays visited by the orbit search:
/// the product over arrow intervals J of (1 + min_{z in J} d(z)), saturated
/// at UINT64_MAX.
std::uint64_t orbit_search_estimate(const BipartiteQuiver& q, const DimensionVector& d);

/// Every lace array of total dimension d, in a fixed order. Throws GuardError
/// when orbit_search_estimate exceeds `guard`.
std::vector<LaceArray> enumerate_laces(const BipartiteQuiver& q, const DimensionVector& d,
                                       std::uint64_t guard);

OrbitNode make_orbit_node(const LaceArray& s);
std::vector<OrbitNode> enumerate_orbits(const BipartiteQuiver& q, const DimensionVector& d,
                                        std::uint64_t guard = kDefaultGuard,
                                        Exec exec = Exec::parallel);

DegenerationPoset hasse(const BipartiteQuiver& q, const DimensionVector& d,
                        std::vector<OrbitNode> nodes, Exec exec = Exec::parallel);

/// d_x d_y - length_from_blocks(b(r)).
std::int64_t orbit_dimension(const OrbitNode& node);

/// The maximal orbit, confirmed by the rank array of a representation with
/// entries drawn uniformly from F_32003; one resample is allowed before an
/// InvariantError.
OrbitNode dense_orbit(const BipartiteQuiver& q, const DimensionVector& d, std::uint64_t seed = 0,
                      std::uint64_t guard = kDefaultGuard);

struct OrderReport {
  std::size_t pairs = 0;
  /// Node index pairs (a, b) where r_a <= r_b and v(r_a) >= v(r_b) disagree.
  std::vector<std::pair<std::size_t, std::size_t>> counterexamples;
  bool consistent() const { return counterexamples.empty(); }
};

OrderReport order_equivalence_report(const DegenerationPoset& poset, Exec exec = Exec::parallel);

/// Graphviz digraph with edges pointing from each orbit to the ones it covers.
std::string to_dot(const DegenerationPoset& poset);

}  // namespace qloci
