#include "qloci/reduction.hpp"

#include <string>

#include "qloci/errors.hpp"

namespace qloci {

const Insertion* ReductionContext::insertion_at(std::size_t junction) const {
  for (const auto& ins : insertions)
    if (ins.junction == junction) return &ins;
  return nullptr;
}

ReductionContext bipartite_double(const TypeAQuiver& q) {
  ReductionContext ctx;
  ctx.source = q;
  const std::size_t n = q.arrow_count();

  std::vector<Direction> word;
  std::vector<int> vertex_image{0};
  std::vector<int> arrow_image;
  std::vector<Insertion> insertions;
  int last_vertex = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Direction dir = q.direction(i);
    const bool equioriented = i < n && q.direction(i + 1) == dir;
    word.push_back(dir);
    arrow_image.push_back(static_cast<int>(word.size()));
    if (equioriented) {
      // z_{i-1} -gamma_i- w_i -delta_i- z_i, with delta_i pointing into a new
      // sink (after a right arrow) or out of a new source (after a left one).
      const int w = ++last_vertex;
      word.push_back(dir == Direction::right ? Direction::left : Direction::right);
      insertions.push_back({i, dir == Direction::right, w, static_cast<int>(word.size())});
    }
    vertex_image.push_back(++last_vertex);
  }

  ctx.pad_left = !word.empty() && word.front() == Direction::right;
  ctx.pad_right = !word.empty() && word.back() == Direction::left;
  const int shift = ctx.pad_left ? 1 : 0;
  if (ctx.pad_left) word.insert(word.begin(), Direction::left);
  if (ctx.pad_right) word.push_back(Direction::right);
  for (auto& v : vertex_image) v += shift;
  for (auto& a : arrow_image) a += shift;
  for (auto& ins : insertions) {
    ins.vertex += shift;
    ins.delta += shift;
  }

  const auto target = BipartiteQuiver::from_type_a(TypeAQuiver(word));
  if (!target) throw InvariantError("doubled quiver is not bipartite: " + TypeAQuiver(word).word());
  ctx.target = *target;
  ctx.vertex_image = std::move(vertex_image);
  ctx.arrow_image = std::move(arrow_image);
  ctx.insertions = std::move(insertions);
  return ctx;
}

DimensionVector lift_dimension(const ReductionContext& ctx, const DimensionVector& d) {
  if (d.size() != ctx.source.vertex_count())
    throw InputError("dimension vector does not match the quiver");
  std::vector<std::size_t> lifted(ctx.target.vertex_count(), 0);
  for (std::size_t z = 0; z < d.size(); ++z) lifted[ctx.vertex_image[z]] = d[static_cast<int>(z)];
  for (const auto& ins : ctx.insertions) lifted[ins.vertex] = d[static_cast<int>(ins.junction)];
  return DimensionVector(std::move(lifted));
}

Representation lift_rep(const ReductionContext& ctx, const Representation& v) {
  if (!(v.quiver() == ctx.source)) throw InputError("representation is not over the source quiver");
  const DimensionVector lifted = lift_dimension(ctx, v.dims());
  Representation out = Representation::zero(ctx.target, lifted, v.field());
  for (std::size_t i = 1; i <= ctx.source.arrow_count(); ++i)
    out.set_arrow(static_cast<std::size_t>(ctx.arrow_image[i - 1]), v.arrow(i));
  for (const auto& ins : ctx.insertions)
    out.set_arrow(static_cast<std::size_t>(ins.delta),
                  ExactMatrix::identity(v.field(), v.dims()[static_cast<int>(ins.junction)]));
  return out;
}

bool in_open_locus(const ReductionContext& ctx, const Representation& lifted) {
  for (const auto& ins : ctx.insertions) {
    const ExactMatrix& m = lifted.arrow(static_cast<std::size_t>(ins.delta));
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

Representation project(const ReductionContext& ctx, const Representation& lifted) {
  if (!(lifted.quiver() == ctx.target.as_type_a()))
    throw InputError("representation is not over the doubled quiver");
  std::vector<std::size_t> dims;
  for (int t : ctx.vertex_image) dims.push_back(lifted.dims()[t]);
  std::vector<ExactMatrix> arrows;
  for (std::size_t i = 1; i <= ctx.source.arrow_count(); ++i) {
    const ExactMatrix& gamma = lifted.arrow(static_cast<std::size_t>(ctx.arrow_image[i - 1]));
    const Insertion* ins = ctx.insertion_at(i);
    if (ins == nullptr) {
      arrows.push_back(gamma);
      continue;
    }
    const ExactMatrix& delta = lifted.arrow(static_cast<std::size_t>(ins->delta));
    if (rank(delta) != delta.rows())
      throw InputError("delta map at junction z" + std::to_string(i) +
                       " is singular; the point is outside the open locus");
    arrows.push_back(ins->sink ? multiply(inverse(delta), gamma) : multiply(gamma, inverse(delta)));
  }
  return Representation(ctx.source, DimensionVector(std::move(dims)), std::move(arrows), lifted.field());
}

RankArray rank_array_arbitrary(const ReductionContext& ctx, const Representation& v) {
  return rank_array(lift_rep(ctx, v));
}

BaseChange project_base_change(const ReductionContext& ctx, const BaseChange& g) {
  if (g.size() != ctx.target.vertex_count()) throw InputError("base change is not over the doubled quiver");
  BaseChange out;
  for (int t : ctx.vertex_image) out.push_back(g[static_cast<std::size_t>(t)]);
  return out;
}

BaseChange embed_g_star(const ReductionContext& ctx, const DimensionVector& lifted_dims,
                        const std::vector<ExactMatrix>& g_star, Field field) {
  if (g_star.size() != ctx.insertions.size())
    throw InputError("need one matrix per inserted vertex");
  if (lifted_dims.size() != ctx.target.vertex_count())
    throw InputError("dimension vector is not over the doubled quiver");
  BaseChange g;
  for (auto dz : lifted_dims.values()) g.push_back(ExactMatrix::identity(field, dz));
  for (std::size_t k = 0; k < g_star.size(); ++k) g[static_cast<std::size_t>(ctx.insertions[k].vertex)] = g_star[k];
  return g;
}

Representation random_point_in_open_locus(const ReductionContext& ctx, const DimensionVector& d,
                                          Field field, std::mt19937_64& rng) {
  const DimensionVector lifted = lift_dimension(ctx, d);
  Representation v = random_representation(ctx.target.as_type_a(), lifted, field, rng);
  for (const auto& ins : ctx.insertions)
    v.set_arrow(static_cast<std::size_t>(ins.delta),
                random_invertible(field, d[static_cast<int>(ins.junction)], rng));
  return v;
}

}  // namespace qloci
