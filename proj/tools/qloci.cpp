// qloci: orbit and degeneration structure of type A quiver representations.
//
//   qloci decompose  --rep rep.json
//   qloci zelevinsky --rep rep.json [--format text]
//   qloci poset      --quiver LRLR --dims 1,1,1,1,1 [--format dot]
//   qloci reduce     --quiver RRLL [--dims 1,2,2,1,1]
//   qloci oracle     --quiver LR --dims 1,1,1 --p 3
//
// Exit codes: 0 success, 2 input error, 3 guard exceeded, 4 invariant failure.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qloci/errors.hpp"
#include "qloci/json_io.hpp"
#include "qloci/oracle.hpp"
#include "qloci/poset.hpp"
#include "qloci/reduction.hpp"
#include "qloci/zelevinsky.hpp"

namespace {

using namespace qloci;
using io::json;

constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInvariant = 4;

struct JobConfig {
  std::string quiver;
  std::string rep;
  std::string dims;
  std::string field;
  std::uint32_t p = 0;
  std::string format = "json";
  bool reduce = false;
  std::uint64_t seed = 0;
  std::uint64_t guard = 0;
};

std::uint64_t effective_guard(const JobConfig& cfg) { return cfg.guard ? cfg.guard : default_guard(); }

std::optional<Field> field_override(const JobConfig& cfg) {
  if (cfg.field.empty()) {
    if (cfg.p) return Field::prime(cfg.p);
    return std::nullopt;
  }
  if (cfg.field == "Q") return Field::rationals();
  if (cfg.field == "Fp") return Field::prime(cfg.p ? cfg.p : Field::kDefaultPrime);
  return Field::parse(cfg.field);
}

Representation load_rep(const JobConfig& cfg) {
  if (cfg.rep.empty()) throw InputError("--rep is required");
  json j = io::parse_json(io::read_file(cfg.rep));
  if (auto f = field_override(cfg)) j["field"] = f->name();
  return io::representation_from_json(j);
}

DimensionVector load_dims(const JobConfig& cfg, const TypeAQuiver& q) {
  if (cfg.dims.empty()) throw InputError("--dims is required");
  DimensionVector d = parse_dimension_csv(cfg.dims);
  if (d.size() != q.vertex_count())
    throw InputError("--dims has " + std::to_string(d.size()) + " entries, quiver has " +
                     std::to_string(q.vertex_count()) + " vertices");
  return d;
}

TypeAQuiver load_quiver(const JobConfig& cfg) {
  if (cfg.quiver.empty()) throw InputError("--quiver is required");
  return io::parse_quiver_argument(cfg.quiver);
}

// The representation to analyse, moved to the bipartite double when needed.
struct Bipartite {
  Representation rep;
  std::optional<ReductionContext> ctx;
};

Bipartite to_bipartite(const Representation& v, bool reduce) {
  if (v.bipartite()) return {v, std::nullopt};
  if (!reduce)
    throw InputError("quiver '" + v.quiver().word() + "' is not bipartite; pass --reduce to use its bipartite double");
  ReductionContext ctx = bipartite_double(v.quiver());
  return {lift_rep(ctx, v), std::move(ctx)};
}

std::string rank_text(const RankArray& r) {
  std::ostringstream out;
  for (const auto& j : enumerate_intervals(r.quiver()))
    if (!j.is_vertex()) out << "  r" << j.name() << " = " << r[j] << '\n';
  return out.str();
}

std::string lace_text(const LaceArray& s) {
  std::ostringstream out;
  for (const auto& j : enumerate_intervals(s.quiver()))
    if (s[j] != 0) out << "  s" << j.name() << " = " << s[j] << '\n';
  return out.str();
}

std::string one_line(const Permutation& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p.one_line()[i];
  out << ']';
  return out.str();
}

int cmd_decompose(const JobConfig& cfg) {
  const auto v = load_rep(cfg);
  const auto b = to_bipartite(v, cfg.reduce);
  const RankArray r = rank_array(b.rep);
  const LaceArray s = rank_to_lace(r, b.rep.dims());
  if (cfg.format == "text") {
    std::cout << "lace array (nonzero multiplicities):\n" << lace_text(s) << "rank array:\n" << rank_text(r);
    return 0;
  }
  json out{{"quiver", io::to_json(b.rep.quiver())}, {"dims", io::to_json(b.rep.dims())},
           {"lace", io::to_json(s)}, {"rank_array", io::to_json(r)}};
  if (b.ctx) out["reduction"] = io::to_json(*b.ctx);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_zelevinsky(const JobConfig& cfg) {
  const auto v = load_rep(cfg);
  const auto b = to_bipartite(v, cfg.reduce);
  const BipartiteQuiver q = b.rep.require_bipartite();
  const BlockLayout layout(q, b.rep.dims());
  const ZelevinskyCellMatrix z = zelevinsky_map(b.rep);
  const BlockRankMatrix blocks = block_rank_numeric(z);
  const RankArray r = rank_array(b.rep);
  if (!(block_rank_symbolic(r, b.rep.dims()) == blocks))
    throw InvariantError("block ranks of the Zelevinsky matrix disagree with the rank array");
  const BlockSpec spec = BlockSpec::from_layout(layout);
  const Permutation perm = zelevinsky_permutation(blocks, spec);
  const auto length = inversion_length(perm);
  const auto dimension =
      static_cast<std::int64_t>(layout.d_x() * layout.d_y()) - length_from_blocks(blocks);

  if (cfg.format == "text") {
    std::cout << "Zelevinsky matrix:\n" << io::render_blocks(z.matrix(), layout.row_sizes(), layout.col_sizes());
    std::cout << "block rank matrix b(r):\n";
    for (const auto& row : blocks.rows()) {
      for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "  ") << row[j];
      std::cout << '\n';
    }
    std::cout << "Zelevinsky permutation v(r): " << one_line(perm) << "\nlength: " << length
              << "\nessential set:";
    for (const auto& [i, j] : essential_set(perm)) std::cout << " (" << i << "," << j << ")";
    std::cout << "\norbit dimension: " << dimension << '\n';
    return 0;
  }
  json out{{"quiver", io::to_json(b.rep.quiver())},
           {"dims", io::to_json(b.rep.dims())},
           {"zelevinsky_matrix", io::to_json(z.matrix())},
           {"block_rank", io::to_json(blocks)},
           {"permutation", io::to_json(perm)},
           {"length", length},
           {"essential_set", io::boxes_to_json(essential_set(perm))},
           {"dimension", dimension}};
  if (b.ctx) out["reduction"] = io::to_json(*b.ctx);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_poset(const JobConfig& cfg) {
  const TypeAQuiver source = load_quiver(cfg);
  const DimensionVector source_dims = load_dims(cfg, source);
  std::optional<ReductionContext> ctx;
  BipartiteQuiver q;
  DimensionVector d;
  if (auto b = BipartiteQuiver::from_type_a(source)) {
    q = *b;
    d = source_dims;
  } else if (cfg.reduce) {
    ctx = bipartite_double(source);
    q = ctx->target;
    d = lift_dimension(*ctx, source_dims);
  } else {
    throw InputError("quiver '" + source.word() + "' is not bipartite; pass --reduce to use its bipartite double");
  }

  auto nodes = enumerate_orbits(q, d, effective_guard(cfg));
  if (ctx) {
    // Orbits of the source are the doubled orbits whose delta maps are isomorphisms.
    std::erase_if(nodes, [&](const OrbitNode& n) {
      for (const auto& ins : ctx->insertions)
        if (n.rank[Interval::arrows(ins.delta, ins.delta)] != static_cast<std::int64_t>(d[ins.vertex])) return true;
      return false;
    });
  }
  const DegenerationPoset poset = hasse(q, d, std::move(nodes));
  const OrderReport report = order_equivalence_report(poset);
  if (!ctx) {
    const OrbitNode top = dense_orbit(q, d, cfg.seed, effective_guard(cfg));
    if (poset.maximal().size() != 1 || !(poset.nodes[poset.maximal().front()].rank == top.rank))
      throw InvariantError("maximal poset node is not the dense orbit");
  }

  if (cfg.format == "dot") {
    std::cout << to_dot(poset) << "// order equivalence: " << report.pairs << " pairs, "
              << (report.consistent() ? "consistent" : "INCONSISTENT") << '\n';
  } else if (cfg.format == "text") {
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
      const auto& n = poset.nodes[i];
      std::cout << "node " << i << ": r=(" << n.key() << ") v=" << one_line(n.permutation)
                << " dim=" << n.dimension << '\n';
    }
    for (const auto& [lo, hi] : poset.covers) std::cout << "cover " << lo << " < " << hi << '\n';
    std::cout << "order equivalence: " << report.pairs << " pairs, "
              << (report.consistent() ? "consistent" : "INCONSISTENT") << '\n';
  } else {
    json out = io::to_json(poset);
    out["order_report"] = io::to_json(report);
    if (ctx) out["reduction"] = io::to_json(*ctx);
    std::cout << out.dump(2) << '\n';
  }
  return report.consistent() ? 0 : kExitInvariant;
}

int cmd_reduce(const JobConfig& cfg) {
  const TypeAQuiver source = load_quiver(cfg);
  const ReductionContext ctx = bipartite_double(source);
  std::optional<DimensionVector> lifted;
  if (!cfg.dims.empty()) lifted = lift_dimension(ctx, load_dims(cfg, source));
  if (cfg.format == "text") {
    std::cout << "source: " << (source.word().empty() ? "(single vertex)" : source.word())
              << "\ntarget: " << ctx.target.as_type_a().word() << " (n=" << ctx.target.n() << ")\n";
    for (std::size_t z = 0; z < ctx.vertex_image.size(); ++z)
      std::cout << "  z" << z << " -> " << BipartiteQuiver::vertex_name(ctx.vertex_image[z]) << '\n';
    for (const auto& ins : ctx.insertions)
      std::cout << "  inserted " << (ins.sink ? "sink " : "source ") << BipartiteQuiver::vertex_name(ins.vertex)
                << " with arrow " << BipartiteQuiver::arrow_name(ins.delta) << " at z" << ins.junction << '\n';
    if (lifted) {
      std::cout << "lifted dims:";
      for (auto v : lifted->values()) std::cout << ' ' << v;
      std::cout << '\n';
    }
    return 0;
  }
  json out = io::to_json(ctx);
  if (lifted) out["lifted_dims"] = io::to_json(*lifted);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_oracle(const JobConfig& cfg) {
  const TypeAQuiver q = load_quiver(cfg);
  const DimensionVector d = load_dims(cfg, q);
  const std::uint32_t p = cfg.p ? cfg.p : 2;
  const std::uint64_t guard = effective_guard(cfg);
  const PointSpace space(q, d, p, guard);
  const OrbitCensus census = brute_orbit_partition(space, guard);

  json checks = json::object();
  checks["census"] = io::to_json(census_sanity(census));
  checks["rank_determines_orbit"] = io::to_json(verify_rank_determines_orbit(q, d, p, guard));
  if (!BipartiteQuiver::from_type_a(q))
    checks["fiber_transitivity"] = io::to_json(verify_fiber_transitivity(bipartite_double(q), d, p, guard));
  bool all = true;
  for (const auto& [name, c] : checks.items()) all = all && c.at("passed").get<bool>();

  if (cfg.format == "text") {
    std::cout << "F_" << p << ", " << census.point_count << " points, " << census.orbits.size() << " orbits\n";
    for (const auto& [name, c] : checks.items()) {
      std::cout << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << name;
      if (c.contains("counterexample")) std::cout << ": " << c.at("counterexample").get<std::string>();
      std::cout << '\n';
    }
  } else {
    json out{{"census", io::to_json(io::summarize(census))}, {"checks", checks}, {"passed", all}};
    std::cout << out.dump(2) << '\n';
  }
  return all ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit closures of type A quiver representations"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--quiver", cfg.quiver, "Quiver: JSON file, inline JSON, or orientation word over L/R");
    sub->add_option("--rep", cfg.rep, "Representation JSON file");
    sub->add_option("--dims", cfg.dims, "Dimension vector as comma-separated integers");
    sub->add_option("--field", cfg.field, "Q, Fp, or Fp:<p>");
    sub->add_option("--p", cfg.p, "Prime for Fp and the oracle");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_flag("--reduce", cfg.reduce, "Move non-bipartite input to its bipartite double");
    sub->add_option("--seed", cfg.seed, "Seed for random sampling");
    sub->add_option("--guard", cfg.guard, "Enumeration ceiling (default 2^20 or $QLOCI_GUARD)")
        ->check(CLI::PositiveNumber);
  };
  auto* decompose = app.add_subcommand("decompose", "Krull-Schmidt multiplicities and rank array");
  auto* zelevinsky = app.add_subcommand("zelevinsky", "Zelevinsky matrix, block ranks, permutation, dimension");
  auto* poset = app.add_subcommand("poset", "Degeneration poset of all orbits");
  auto* reduce = app.add_subcommand("reduce", "Bipartite double of an arbitrary orientation");
  auto* oracle = app.add_subcommand("oracle", "Brute-force finite-field verification");
  for (auto* sub : {decompose, zelevinsky, poset, reduce, oracle}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*decompose) return cmd_decompose(cfg);
    if (*zelevinsky) return cmd_zelevinsky(cfg);
    if (*poset) return cmd_poset(cfg);
    if (*reduce) return cmd_reduce(cfg);
    return cmd_oracle(cfg);
  } catch (const InputError& e) {
    std::cerr << "qloci: " << e.what() << '\n';
    return kExitInput;
  } catch (const GuardError& e) {
    std::cerr << "qloci: guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const InvariantError& e) {
    std::cerr << "qloci: invariant failure: " << e.what() << '\n';
    return kExitInvariant;
  }
}
