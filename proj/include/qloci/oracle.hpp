#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qloci/exec.hpp"
#include "qloci/permutation.hpp"
#include "qloci/reduction.hpp"
#include "qloci/representation.hpp"

namespace qloci {

/// rep_Q(d)(F_p) for a small prime p, with points numbered 0..p^E - 1 by
/// reading all matrix entries (arrow by arrow, row-major) as base-p digits,
/// first entry most significant.
class PointSpace {
 public:
  /// Throws GuardError when p^E exceeds `guard`, InputError unless p is a
  /// prime below 256.
  PointSpace(TypeAQuiver q, DimensionVector d, std::uint32_t p, std::uint64_t guard = kDefaultGuard);

  const TypeAQuiver& quiver() const { return quiver_; }
  const DimensionVector& dims() const { return dims_; }
  std::uint32_t p() const { return p_; }
  Field field() const { return Field::prime(p_); }
  std::size_t entry_count() const { return entries_; }
  std::uint64_t size() const { return size_; }

  Representation decode(std::uint64_t index) const;
  std::uint64_t encode(const Representation& v) const;
  void digits(std::uint64_t index, std::vector<std::uint8_t>& out) const;
  std::uint64_t index_of(const std::vector<std::uint8_t>& digits) const;
  /// Offset of arrow a (1-based) in the digit string.
  std::size_t arrow_offset(std::size_t a) const { return offsets_[a - 1]; }

 private:
  TypeAQuiver quiver_;
  DimensionVector dims_;
  std::uint32_t p_;
  std::size_t entries_ = 0;
  std::uint64_t size_ = 1;
  std::vector<std::size_t> offsets_;
};

/// Every point of rep_Q(d)(F_p) in index order.
std::vector<Representation> enumerate_reps(const TypeAQuiver& q, const DimensionVector& d,
                                           std::uint32_t p, std::uint64_t guard = kDefaultGuard);

/// |GL_k(F_p)|.
std::uint64_t gl_order(std::size_t k, std::uint32_t p);

/// Partition of rep_Q(d)(F_p) into GL(d)-orbits.
struct OrbitCensus {
  std::uint32_t p = 2;
  TypeAQuiver quiver;
  DimensionVector dims;
  std::uint64_t point_count = 0;
  std::uint64_t group_order = 1;
  /// Each orbit as ascending point indices; orbits ordered by smallest point.
  std::vector<std::vector<std::uint64_t>> orbits;

  std::vector<std::uint64_t> sizes() const;
};

/// Full group sweep from the smallest unassigned point until every point is
/// labelled. Throws GuardError when p^E or |GL(d)(F_p)| exceeds `guard`.
OrbitCensus brute_orbit_partition(const PointSpace& space, std::uint64_t guard = kDefaultGuard,
                                  Exec exec = Exec::parallel);

/// Outcome of comparing the brute orbit partition with an invariant's fibers.
struct OracleVerdict {
  bool passed = false;
  std::size_t orbit_count = 0;
  std::size_t fiber_count = 0;
  std::string counterexample;  // empty when passed
};

/// Rank-array fibers against brute orbits. Bipartite quivers use rank_array;
/// other orientations use rank_array_arbitrary on the bipartite double.
OracleVerdict verify_rank_determines_orbit(const TypeAQuiver& q, const DimensionVector& d,
                                           std::uint32_t p, std::uint64_t guard = kDefaultGuard,
                                           Exec exec = Exec::parallel);

/// Over the open locus U of the doubled space, the G*-orbits are exactly the
/// fibers of project.
OracleVerdict verify_fiber_transitivity(const ReductionContext& ctx, const DimensionVector& d,
                                        std::uint32_t p, std::uint64_t guard = kDefaultGuard,
                                        Exec exec = Exec::parallel);

/// Orbit sizes sum to p^E, each divides |GL(d)|, and the orbit count equals
/// the number of lace arrays of d.
OracleVerdict census_sanity(const OrbitCensus& census);

/// Number of Krull-Schmidt types of total dimension d on a path with
/// d.size() vertices.
std::size_t count_lace_arrays(const DimensionVector& d, std::uint64_t guard = kDefaultGuard);

/// Bruhat order on S_d as the transitive closure of length-one transposition
/// covers. Throws GuardError for d > 6.
class BruhatCoverOrder {
 public:
  explicit BruhatCoverOrder(std::size_t d);
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool leq(const Permutation& u, const Permutation& v) const;
  /// Number of cover pairs.
  std::size_t cover_count() const { return covers_; }

 private:
  std::size_t index(const Permutation& u) const;

  std::size_t degree_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<bool>> leq_;
  std::size_t covers_ = 0;
};

BruhatCoverOrder bruhat_via_covers(std::size_t d);

}  // namespace qloci
