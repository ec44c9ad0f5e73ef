#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qloci/permutation.hpp"
#include "qloci/representation.hpp"
#include "qloci/zelevinsky.hpp"

namespace qloci::testing {

/// The n = 3 worked example with d = (1,2,3,2,3,2,1), over `field`.
Representation example_rep(Field field = Field::rationals());
/// Its block rank matrix and Zelevinsky permutation as printed.
BlockRankMatrix example_block_ranks();
Permutation example_permutation();

/// Every dimension vector of length `len` with entries in [0, max].
std::vector<DimensionVector> all_dims(std::size_t len, std::size_t max);

/// Rank over Q by plain Gauss-Jordan on mpq_class, independent of ExactMatrix's
/// elimination.
std::size_t naive_rank(const ExactMatrix& m);

ExactMatrix random_rational_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, long range = 5);

/// The length formula with b_{i-1,n+1} in place of b_{i-1,2n+1}, exactly as
/// it appears in print. Kept to document that it undercounts.
std::int64_t length_printed_formula(const BlockRankMatrix& b);

/// The componentwise order on rank arrays from lace arrays alone, computed
/// directly from ranks of the realized representations.
RankArray rank_of_lace(const LaceArray& s, Field field);

}  // namespace qloci::testing
