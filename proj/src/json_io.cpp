#include "qloci/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qloci/errors.hpp"

namespace qloci::io {

namespace {

template <typename F>
auto guarded(std::string_view what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError("malformed " + std::string(what) + ": " + e.what());
  }
}

json scalar_to_json(const FieldScalar& s) {
  if (s.field().is_prime()) return s.residue();
  const mpq_class& q = s.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s.to_string();
}

FieldScalar scalar_from_json(Field field, const json& j) {
  if (j.is_number_integer()) return FieldScalar(field, j.get<long>());
  if (j.is_string()) return FieldScalar::parse(field, j.get<std::string>());
  throw InputError("matrix entries must be integers or \"p/q\" strings, got " + j.dump());
}

ExactMatrix rows_to_matrix(Field field, const json& rows, std::size_t nrows, std::size_t ncols) {
  if (!rows.is_array() || rows.size() != nrows)
    throw InputError("expected " + std::to_string(nrows) + " matrix rows, got " + rows.dump());
  ExactMatrix m(field, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    if (!rows[r].is_array() || rows[r].size() != ncols)
      throw InputError("matrix row " + std::to_string(r) + " must have " + std::to_string(ncols) + " entries");
    for (std::size_t c = 0; c < ncols; ++c) m.set(r, c, scalar_from_json(field, rows[r][c]));
  }
  return m;
}

std::string arrow_label(const TypeAQuiver& q, std::size_t a) {
  if (BipartiteQuiver::from_type_a(q)) return BipartiteQuiver::arrow_name(static_cast<int>(a));
  return "g" + std::to_string(a);
}

std::size_t parse_arrow_label(const TypeAQuiver& q, const std::string& name) {
  std::size_t a = 0;
  if (name.size() >= 2 && name[0] == 'g') {
    try {
      std::size_t used = 0;
      a = std::stoul(name.substr(1), &used);
      if (used != name.size() - 1) a = 0;
    } catch (const std::exception&) {
      a = 0;
    }
  } else if (BipartiteQuiver::from_type_a(q)) {
    a = static_cast<std::size_t>(std::max(0, BipartiteQuiver::parse_arrow(name)));
  }
  if (a < 1 || a > q.arrow_count()) throw InputError("unknown arrow '" + name + "'");
  return a;
}

int parse_z(const std::string& name) {
  if (name.size() < 2 || name[0] != 'z') throw InputError("bad source vertex name '" + name + "'");
  return std::stoi(name.substr(1));
}

BipartiteQuiver census_quiver(const TypeAQuiver& q) {
  if (auto b = BipartiteQuiver::from_type_a(q)) return *b;
  return bipartite_double(q).target;
}

}  // namespace

json to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"field", m.field().name()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    const Field field = Field::parse(j.at("field").get<std::string>());
    return rows_to_matrix(field, j.at("entries"), j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  });
}

json to_json(const TypeAQuiver& q) {
  json out{{"orientation", q.word()}};
  if (auto b = BipartiteQuiver::from_type_a(q)) out["n"] = b->n();
  return out;
}

TypeAQuiver quiver_from_json(const json& j) {
  return guarded("quiver", [&] {
    if (j.is_string()) return TypeAQuiver::parse(j.get<std::string>());
    if (j.contains("orientation")) {
      const auto q = TypeAQuiver::parse(j.at("orientation").get<std::string>());
      if (j.contains("n")) {
        const auto b = BipartiteQuiver::from_type_a(q);
        if (!b || b->n() != j.at("n").get<std::size_t>())
          throw InputError("quiver 'n' does not match its orientation word");
      }
      return q;
    }
    return BipartiteQuiver(j.at("n").get<std::size_t>()).as_type_a();
  });
}

TypeAQuiver parse_quiver_argument(std::string_view text) {
  const std::string s(text);
  std::error_code ec;
  if (!s.empty() && std::filesystem::is_regular_file(s, ec)) return quiver_from_json(parse_json(read_file(s)));
  if (!s.empty() && (s.front() == '{' || s.front() == '"')) return quiver_from_json(parse_json(s));
  return TypeAQuiver::parse(s);
}

Interval parse_interval(std::string_view name) {
  const std::string s(name);
  if (s.size() >= 3 && s.front() == '{' && s.back() == '}')
    return Interval::vertex(BipartiteQuiver::parse_vertex(s.substr(1, s.size() - 2)));
  if (s.size() >= 3 && s.front() == '[' && s.back() == ']') {
    const std::string body = s.substr(1, s.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string::npos) {
      const int a = BipartiteQuiver::parse_arrow(body);
      return Interval::arrows(a, a);
    }
    return Interval::arrows(BipartiteQuiver::parse_arrow(body.substr(0, comma)),
                            BipartiteQuiver::parse_arrow(body.substr(comma + 1)));
  }
  throw InputError("bad interval name '" + s + "'");
}

json to_json(const DimensionVector& d) { return d.values(); }

DimensionVector dims_from_json(const json& j) {
  return guarded("dimension vector", [&] {
    std::vector<std::size_t> v;
    for (const auto& e : j) {
      if (!e.is_number_integer() || e.get<long>() < 0) throw InputError("dimensions must be nonnegative integers");
      v.push_back(e.get<std::size_t>());
    }
    return DimensionVector(std::move(v));
  });
}

json to_json(const Representation& v) {
  json arrows = json::object();
  for (std::size_t a = 1; a <= v.quiver().arrow_count(); ++a) arrows[arrow_label(v.quiver(), a)] = to_json(v.arrow(a));
  return {{"quiver", to_json(v.quiver())}, {"field", v.field().name()}, {"dims", to_json(v.dims())}, {"arrows", arrows}};
}

Representation representation_from_json(const json& j) {
  return guarded("representation", [&] {
    const TypeAQuiver q = quiver_from_json(j.at("quiver"));
    const Field field = j.contains("field") ? Field::parse(j.at("field").get<std::string>()) : Field::rationals();
    const DimensionVector d = dims_from_json(j.at("dims"));
    Representation v = Representation::zero(q, d, field);
    const json& arrows = j.contains("arrows") ? j.at("arrows") : json::object();
    if (!arrows.is_object()) throw InputError("'arrows' must be an object keyed by arrow name");
    for (const auto& [name, value] : arrows.items()) {
      const std::size_t a = parse_arrow_label(q, name);
      const std::size_t rows = d[static_cast<int>(q.head(a))], cols = d[static_cast<int>(q.tail(a))];
      ExactMatrix m = value.is_array() ? rows_to_matrix(field, value, rows, cols) : matrix_from_json(value);
      if (!(m.field() == field)) throw InputError("arrow " + name + " is over " + m.field().name());
      v.set_arrow(a, std::move(m));
    }
    return v;
  });
}

json to_json(const RankArray& r) {
  json out = json::array();
  for (const auto& j : enumerate_intervals(r.quiver()))
    if (!j.is_vertex()) out.push_back({{"interval", j.name()}, {"rank", r[j]}});
  return out;
}

RankArray rank_array_from_json(const BipartiteQuiver& q, const json& j) {
  return guarded("rank array", [&] {
    RankArray r(q);
    for (const auto& e : j) {
      const Interval iv = parse_interval(e.at("interval").get<std::string>());
      if (iv.has_phantom(q.n())) throw InputError("interval " + iv.name() + " is outside the quiver");
      r[iv] = e.at("rank").get<std::int64_t>();
    }
    return r;
  });
}

json to_json(const LaceArray& s) {
  json out = json::array();
  for (const auto& j : enumerate_intervals(s.quiver()))
    if (s[j] != 0) out.push_back({{"interval", j.name()}, {"multiplicity", s[j]}});
  return out;
}

LaceArray lace_array_from_json(const BipartiteQuiver& q, const json& j) {
  return guarded("lace array", [&] {
    LaceArray s(q);
    for (const auto& e : j) {
      const Interval iv = parse_interval(e.at("interval").get<std::string>());
      if (iv.has_phantom(q.n())) throw InputError("interval " + iv.name() + " is outside the quiver");
      s[iv] = e.at("multiplicity").get<std::int64_t>();
    }
    return s;
  });
}

json to_json(const BlockRankMatrix& b) { return {{"n", b.n()}, {"entries", b.rows()}}; }

BlockRankMatrix block_rank_from_json(const json& j) {
  return guarded("block rank matrix", [&] {
    const auto rows = j.at("entries").get<std::vector<std::vector<std::int64_t>>>();
    BlockRankMatrix b = BlockRankMatrix::from_rows(rows);
    if (j.contains("n") && j.at("n").get<std::size_t>() != b.n()) throw InputError("'n' does not match the entries");
    return b;
  });
}

json to_json(const MinorSpec& m) {
  return {{"rows", m.rows}, {"cols", m.cols}, {"size", m.size}, {"source", m.source}};
}

json to_json(const MinorInventory& inv) {
  json a = json::array(), b = json::array();
  for (const auto& m : inv.interval_specs) a.push_back(to_json(m));
  for (const auto& m : inv.block_specs) b.push_back(to_json(m));
  return {{"interval_minors", a}, {"block_minors", b}};
}

MinorInventory minor_inventory_from_json(const json& j) {
  return guarded("minor inventory", [&] {
    auto read = [](const json& list) {
      std::vector<MinorSpec> out;
      for (const auto& e : list)
        out.push_back({e.at("rows").get<std::vector<std::size_t>>(), e.at("cols").get<std::vector<std::size_t>>(),
                       e.at("size").get<std::size_t>(), e.at("source").get<std::string>()});
      return out;
    };
    return MinorInventory{read(j.at("interval_minors")), read(j.at("block_minors"))};
  });
}

json to_json(const Permutation& p) { return p.one_line(); }

Permutation permutation_from_json(const json& j) {
  return guarded("permutation", [&] { return Permutation(j.get<std::vector<std::size_t>>()); });
}

json boxes_to_json(const std::vector<Box>& boxes) {
  json out = json::array();
  for (const auto& [r, c] : boxes) out.push_back({r, c});
  return out;
}

std::vector<Box> boxes_from_json(const json& j) {
  return guarded("box list", [&] {
    std::vector<Box> out;
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 2) throw InputError("boxes are [row, col] pairs");
      out.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return out;
  });
}

json to_json(const OrbitNode& node) {
  return {{"key", node.key()},
          {"rank_array", to_json(node.rank)},
          {"lace", to_json(node.lace)},
          {"block_rank", to_json(node.blocks)},
          {"permutation", to_json(node.permutation)},
          {"length", node.length},
          {"dimension", node.dimension}};
}

json to_json(const DegenerationPoset& poset) {
  json nodes = json::array();
  for (const auto& n : poset.nodes) nodes.push_back(to_json(n));
  json covers = json::array();
  for (const auto& [lo, hi] : poset.covers) covers.push_back({lo, hi});
  return {{"quiver", to_json(poset.quiver.as_type_a())}, {"dims", to_json(poset.dims)}, {"nodes", nodes}, {"covers", covers}};
}

DegenerationPoset poset_from_json(const json& j) {
  return guarded("poset", [&] {
    const auto b = BipartiteQuiver::from_type_a(quiver_from_json(j.at("quiver")));
    if (!b) throw InputError("poset quiver must be bipartite");
    DegenerationPoset poset{*b, dims_from_json(j.at("dims")), {}, {}};
    for (const auto& e : j.at("nodes")) {
      OrbitNode node;
      node.lace = lace_array_from_json(*b, e.at("lace"));
      node.rank = rank_array_from_json(*b, e.at("rank_array"));
      node.blocks = block_rank_from_json(e.at("block_rank"));
      node.permutation = permutation_from_json(e.at("permutation"));
      node.length = e.at("length").get<std::size_t>();
      node.dimension = e.at("dimension").get<std::int64_t>();
      poset.nodes.push_back(std::move(node));
    }
    for (const auto& c : j.at("covers")) {
      const auto lo = c.at(0).get<std::size_t>(), hi = c.at(1).get<std::size_t>();
      if (lo >= poset.nodes.size() || hi >= poset.nodes.size()) throw InputError("cover refers to a missing node");
      poset.covers.emplace_back(lo, hi);
    }
    return poset;
  });
}

json to_json(const OrderReport& report) {
  json bad = json::array();
  for (const auto& [a, b] : report.counterexamples) bad.push_back({a, b});
  return {{"pairs", report.pairs}, {"consistent", report.consistent()}, {"counterexamples", bad}};
}

json to_json(const ReductionContext& ctx) {
  json vertices = json::array(), arrows = json::array(), insertions = json::array();
  for (std::size_t z = 0; z < ctx.vertex_image.size(); ++z)
    vertices.push_back({{"source", "z" + std::to_string(z)}, {"target", BipartiteQuiver::vertex_name(ctx.vertex_image[z])}});
  for (std::size_t i = 0; i < ctx.arrow_image.size(); ++i)
    arrows.push_back({{"source", "g" + std::to_string(i + 1)}, {"target", BipartiteQuiver::arrow_name(ctx.arrow_image[i])}});
  for (const auto& ins : ctx.insertions)
    insertions.push_back({{"junction", "z" + std::to_string(ins.junction)},
                          {"kind", ins.sink ? "sink" : "source"},
                          {"vertex", BipartiteQuiver::vertex_name(ins.vertex)},
                          {"delta", BipartiteQuiver::arrow_name(ins.delta)}});
  return {{"source", to_json(ctx.source)},
          {"target", to_json(ctx.target.as_type_a())},
          {"pad_left", ctx.pad_left},
          {"pad_right", ctx.pad_right},
          {"vertices", vertices},
          {"arrows", arrows},
          {"insertions", insertions}};
}

ReductionContext reduction_from_json(const json& j) {
  return guarded("reduction context", [&] {
    ReductionContext ctx;
    ctx.source = quiver_from_json(j.at("source"));
    const auto target = BipartiteQuiver::from_type_a(quiver_from_json(j.at("target")));
    if (!target) throw InputError("reduction target must be bipartite");
    ctx.target = *target;
    ctx.pad_left = j.at("pad_left").get<bool>();
    ctx.pad_right = j.at("pad_right").get<bool>();
    ctx.vertex_image.assign(ctx.source.vertex_count(), -1);
    for (const auto& v : j.at("vertices")) {
      const int z = parse_z(v.at("source").get<std::string>());
      if (z < 0 || static_cast<std::size_t>(z) >= ctx.vertex_image.size()) throw InputError("vertex table out of range");
      ctx.vertex_image[static_cast<std::size_t>(z)] = BipartiteQuiver::parse_vertex(v.at("target").get<std::string>());
    }
    ctx.arrow_image.assign(ctx.source.arrow_count(), -1);
    for (const auto& a : j.at("arrows")) {
      const std::size_t i = parse_arrow_label(ctx.source, a.at("source").get<std::string>());
      ctx.arrow_image[i - 1] = BipartiteQuiver::parse_arrow(a.at("target").get<std::string>());
    }
    for (const auto& e : j.at("insertions")) {
      const std::string kind = e.at("kind").get<std::string>();
      if (kind != "sink" && kind != "source") throw InputError("insertion kind must be sink or source");
      ctx.insertions.push_back({static_cast<std::size_t>(parse_z(e.at("junction").get<std::string>())), kind == "sink",
                                BipartiteQuiver::parse_vertex(e.at("vertex").get<std::string>()),
                                BipartiteQuiver::parse_arrow(e.at("delta").get<std::string>())});
    }
    if (std::ranges::find(ctx.vertex_image, -1) != ctx.vertex_image.end() ||
        std::ranges::find(ctx.arrow_image, -1) != ctx.arrow_image.end())
      throw InputError("reduction context tables are incomplete");
    return ctx;
  });
}

CensusSummary summarize(const OrbitCensus& census) {
  const PointSpace space(census.quiver, census.dims, census.p, census.point_count);
  const auto bipartite = BipartiteQuiver::from_type_a(census.quiver);
  const ReductionContext ctx = bipartite_double(census.quiver);
  CensusSummary out{census.p, census.quiver, census.dims, census.sizes(), {}};
  for (const auto& orbit : census.orbits) {
    const auto v = space.decode(orbit.front());
    out.rank_arrays.push_back(bipartite ? rank_array(v) : rank_array_arbitrary(ctx, v));
  }
  return out;
}

json to_json(const CensusSummary& census) {
  json orbits = json::array();
  for (std::size_t i = 0; i < census.sizes.size(); ++i)
    orbits.push_back({{"size", census.sizes[i]}, {"rank_array", to_json(census.rank_arrays[i])}});
  return {{"p", census.p}, {"quiver", to_json(census.quiver)}, {"dims", to_json(census.dims)}, {"orbits", orbits}};
}

CensusSummary census_from_json(const json& j) {
  return guarded("census", [&] {
    CensusSummary out;
    out.p = j.at("p").get<std::uint32_t>();
    out.quiver = quiver_from_json(j.at("quiver"));
    out.dims = dims_from_json(j.at("dims"));
    const BipartiteQuiver b = census_quiver(out.quiver);
    for (const auto& o : j.at("orbits")) {
      out.sizes.push_back(o.at("size").get<std::uint64_t>());
      out.rank_arrays.push_back(rank_array_from_json(b, o.at("rank_array")));
    }
    return out;
  });
}

json to_json(const OracleVerdict& verdict) {
  json out{{"passed", verdict.passed}, {"orbits", verdict.orbit_count}, {"fibers", verdict.fiber_count}};
  if (!verdict.counterexample.empty()) out["counterexample"] = verdict.counterexample;
  return out;
}

std::string render_matrix(const ExactMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r][c] = m.at(r, c).to_string();
      width = std::max(width, cells[r][c].size());
    }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? " " : "") << std::string(width - row[c].size(), ' ') << row[c];
    out << '\n';
  }
  return out.str();
}

std::string render_blocks(const ExactMatrix& m, const std::vector<std::size_t>& row_sizes,
                          const std::vector<std::size_t>& col_sizes) {
  std::vector<std::vector<std::string>> cells;
  std::size_t r0 = 0;
  for (auto rs : row_sizes) {
    std::vector<std::string> row;
    std::size_t c0 = 0;
    for (auto cs : col_sizes) {
      const ExactMatrix blk = m.submatrix(r0, c0, rs, cs);
      std::string cell;
      if (rs == 0 || cs == 0)
        cell = ".";
      else if (blk.is_zero())
        cell = "0";
      else if (rs == cs && blk == ExactMatrix::identity(m.field(), rs))
        cell = "1_" + std::to_string(rs);
      else {
        cell = "[";
        for (std::size_t r = 0; r < rs; ++r) {
          if (r) cell += "; ";
          for (std::size_t c = 0; c < cs; ++c) cell += (c ? " " : "") + blk.at(r, c).to_string();
        }
        cell += "]";
      }
      row.push_back(std::move(cell));
      c0 += cs;
    }
    cells.push_back(std::move(row));
    r0 += rs;
  }
  std::vector<std::size_t> width(col_sizes.size(), 1);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? " | " : "") << row[c] << std::string(width[c] - row[c].size(), ' ');
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace qloci::io
