#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qloci/oracle.hpp"
#include "qloci/permutation.hpp"
#include "qloci/poset.hpp"
#include "qloci/reduction.hpp"
#include "qloci/representation.hpp"
#include "qloci/zelevinsky.hpp"

namespace qloci::io {

using nlohmann::json;

// All from_json functions throw InputError on malformed input.

json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

json to_json(const TypeAQuiver& q);
/// {"orientation": "LRLR"} or {"n": 2}.
TypeAQuiver quiver_from_json(const json& j);
/// A path to a JSON file, inline JSON, or a bare orientation word.
TypeAQuiver parse_quiver_argument(std::string_view text);

/// "{y0}", "[a1]", "[a1,b2]".
Interval parse_interval(std::string_view name);

json to_json(const DimensionVector& d);
DimensionVector dims_from_json(const json& j);

/// {"quiver", "field", "dims", "arrows": {name: matrix}}. Bipartite quivers
/// name arrows a1, b1, ...; others g1, g2, .... An arrow may also be given as
/// a bare list of rows, or omitted to mean zero.
json to_json(const Representation& v);
Representation representation_from_json(const json& j);

/// [{"interval": "[a1]", "rank": 1}, ...] over the arrow intervals.
json to_json(const RankArray& r);
RankArray rank_array_from_json(const BipartiteQuiver& q, const json& j);
/// [{"interval": "{y0}", "multiplicity": 1}, ...] over the nonzero entries.
json to_json(const LaceArray& s);
LaceArray lace_array_from_json(const BipartiteQuiver& q, const json& j);

/// {"n": n, "entries": [[...], ...]}.
json to_json(const BlockRankMatrix& b);
BlockRankMatrix block_rank_from_json(const json& j);

json to_json(const MinorSpec& m);
json to_json(const MinorInventory& inv);
MinorInventory minor_inventory_from_json(const json& j);

/// One-line array.
json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);
/// [[row, col], ...].
json boxes_to_json(const std::vector<Box>& boxes);
std::vector<Box> boxes_from_json(const json& j);

json to_json(const OrbitNode& node);
/// {"quiver", "dims", "nodes": [...], "covers": [[lower, upper], ...]}.
json to_json(const DegenerationPoset& poset);
DegenerationPoset poset_from_json(const json& j);
json to_json(const OrderReport& report);

json to_json(const ReductionContext& ctx);
ReductionContext reduction_from_json(const json& j);

/// Orbit sizes with the rank array of each orbit's first point.
struct CensusSummary {
  std::uint32_t p = 2;
  TypeAQuiver quiver;
  DimensionVector dims;
  std::vector<std::uint64_t> sizes;
  std::vector<RankArray> rank_arrays;

  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};
CensusSummary summarize(const OrbitCensus& census);
/// {"p", "quiver", "dims", "orbits": [{"size", "rank_array"}, ...]}.
json to_json(const CensusSummary& census);
CensusSummary census_from_json(const json& j);

json to_json(const OracleVerdict& verdict);

/// Block matrix with blocks separated by rules; zero blocks print as 0 and
/// identity blocks as 1_k.
std::string render_blocks(const ExactMatrix& m, const std::vector<std::size_t>& row_sizes,
                          const std::vector<std::size_t>& col_sizes);
std::string render_matrix(const ExactMatrix& m);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);
/// Parses JSON text, mapping parse errors to InputError.
json parse_json(std::string_view text);

}  // namespace qloci::io
