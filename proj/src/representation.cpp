#include "qloci/representation.hpp"

#include <string>

namespace qloci {

namespace {

std::string shape_of(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

Representation::Representation(TypeAQuiver quiver, DimensionVector dims,
                               std::vector<ExactMatrix> arrows, Field field)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), arrows_(std::move(arrows)), field_(field) {
  if (dims_.size() != quiver_.vertex_count())
    throw InputError("dimension vector has " + std::to_string(dims_.size()) + " entries, quiver has " +
                     std::to_string(quiver_.vertex_count()) + " vertices");
  if (arrows_.size() != quiver_.arrow_count())
    throw InputError("expected " + std::to_string(quiver_.arrow_count()) + " arrow matrices, got " +
                     std::to_string(arrows_.size()));
  for (std::size_t a = 1; a <= arrows_.size(); ++a) set_arrow(a, arrows_[a - 1]);
}

void Representation::set_arrow(std::size_t i, ExactMatrix m) {
  const std::size_t rows = dims_[static_cast<int>(quiver_.head(i))];
  const std::size_t cols = dims_[static_cast<int>(quiver_.tail(i))];
  if (!(m.field() == field_))
    throw InputError("arrow " + std::to_string(i) + " is over " + m.field().name() +
                     ", representation over " + field_.name());
  if (m.rows() != rows || m.cols() != cols)
    throw InputError("arrow " + std::to_string(i) + " has shape " + shape_of(m.rows(), m.cols()) +
                     ", expected " + shape_of(rows, cols));
  arrows_.at(i - 1) = std::move(m);
}

Representation Representation::zero(const TypeAQuiver& quiver, const DimensionVector& dims,
                                    Field field) {
  if (dims.size() != quiver.vertex_count())
    throw InputError("dimension vector does not match the quiver");
  std::vector<ExactMatrix> arrows;
  for (std::size_t a = 1; a <= quiver.arrow_count(); ++a)
    arrows.emplace_back(field, dims[static_cast<int>(quiver.head(a))],
                        dims[static_cast<int>(quiver.tail(a))]);
  return Representation(quiver, dims, std::move(arrows), field);
}

Representation Representation::zero(const BipartiteQuiver& quiver, const DimensionVector& dims,
                                    Field field) {
  return zero(quiver.as_type_a(), dims, field);
}

BipartiteQuiver Representation::require_bipartite() const {
  auto b = bipartite();
  if (!b)
    throw InputError("quiver with orientation '" + quiver_.word() +
                     "' is not in bipartite labeling (expected LRLR...)");
  return *b;
}

IntervalArray::IntervalArray(BipartiteQuiver q)
    : quiver_(q), values_(interval_count(q), 0) {}

IntervalArray::IntervalArray(BipartiteQuiver q, std::vector<std::int64_t> values)
    : quiver_(q), values_(std::move(values)) {
  if (values_.size() != interval_count(q))
    throw InputError("interval array has " + std::to_string(values_.size()) + " entries, expected " +
                     std::to_string(interval_count(q)));
}

std::int64_t& IntervalArray::operator[](const Interval& j) {
  return values_[interval_index(quiver_, j)];
}

std::int64_t IntervalArray::operator[](const Interval& j) const {
  return values_[interval_index(quiver_, j)];
}

std::int64_t RankArray::rank(const std::optional<Interval>& j) const {
  if (!j) return 0;
  const auto clipped = clip(*j, quiver_);
  if (!clipped) return 0;
  return (*this)[*clipped];
}

bool RankArray::leq(const RankArray& other) const {
  if (!(quiver_ == other.quiver_)) throw InputError("comparing rank arrays of different quivers");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] > other.values_[i]) return false;
  return true;
}

DimensionVector LaceArray::dimension() const {
  std::vector<std::size_t> d(quiver_.vertex_count(), 0);
  for (const auto& j : enumerate_intervals(quiver_))
    for (int z = j.first; z <= j.last; ++z) d[z] += static_cast<std::size_t>((*this)[j]);
  return DimensionVector(std::move(d));
}

ExactMatrix assemble_interval_matrix(const Representation& v, const Interval& j) {
  const BipartiteQuiver q = v.require_bipartite();
  const auto clipped = clip(j, q);
  if (!clipped) return ExactMatrix(v.field(), 0, 0);
  const Interval& c = *clipped;
  const DimensionVector& d = v.dims();
  if (c.is_vertex()) return ExactMatrix(v.field(), d[c.first], 0);

  // Rows y_k ascending, columns x_m descending, as in the snake matrix.
  std::vector<int> ys, xs;
  for (int z = c.first; z <= c.last; ++z)
    if (z % 2 == 0) ys.push_back(z / 2);
  for (int z = c.last; z >= c.first; --z)
    if (z % 2 != 0) xs.push_back((z + 1) / 2);
  std::vector<std::size_t> row_sizes, col_sizes;
  for (int k : ys) row_sizes.push_back(d[BipartiteQuiver::y(k)]);
  for (int m : xs) col_sizes.push_back(d[BipartiteQuiver::x(m)]);

  BlockLayoutGrid grid(ys.size(), std::vector<std::optional<ExactMatrix>>(xs.size()));
  auto place = [&](int k, int m, const ExactMatrix& blk) {
    const auto r = static_cast<std::size_t>(k - ys.front());
    const auto col = static_cast<std::size_t>(xs.front() - m);
    grid[r][col] = blk;
  };
  for (int pos = c.left_arrow(); pos <= c.right_arrow(); ++pos) {
    if (pos % 2 == 1) {
      const int m = (pos + 1) / 2;
      place(m - 1, m, v.alpha(m));
    } else {
      const int m = pos / 2;
      place(m, m, v.beta(m));
    }
  }
  return assemble_blocks(v.field(), grid, row_sizes, col_sizes);
}

ExactMatrix snake_matrix(const Representation& v) {
  const BipartiteQuiver q = v.require_bipartite();
  if (q.n() == 0) return ExactMatrix(v.field(), v.dims()[0], 0);
  return assemble_interval_matrix(v, Interval{0, static_cast<int>(2 * q.n())});
}

std::size_t rank_function(const Representation& v, const Interval& j) {
  return rank(assemble_interval_matrix(v, j));
}

RankArray rank_array(const Representation& v) {
  const BipartiteQuiver q = v.require_bipartite();
  RankArray r(q);
  for (const auto& j : enumerate_intervals(q))
    if (!j.is_vertex()) r[j] = static_cast<std::int64_t>(rank_function(v, j));
  return r;
}

RankArray lace_to_rank(const LaceArray& s) {
  const BipartiteQuiver& q = s.quiver();
  const auto intervals = enumerate_intervals(q);
  RankArray r(q);
  for (const auto& j : intervals) {
    std::int64_t total = 0;
    for (const auto& jp : intervals) {
      const std::int64_t mult = s[jp];
      if (mult == 0) continue;
      total += mult * ((shared_arrow_count(j, jp) + 1) / 2);
    }
    r[j] = total;
  }
  return r;
}

std::int64_t shifted_rank_combination(const RankArray& r, const Interval& j) {
  const Interval left = shift_left(j), right = shift_right(j);
  const std::int64_t value =
      r.rank(left) + r.rank(right) - r.rank(interval_meet(left, right)) -
      r.rank(interval_join(left, right));
  return j.arrow_count() % 2 == 0 ? value : -value;
}

namespace {

// Multiplicities from the shifted-rank formula, without sign checks.
LaceArray raw_lace(const RankArray& r, const DimensionVector& d) {
  const BipartiteQuiver& q = r.quiver();
  if (d.size() != q.vertex_count())
    throw InputError("dimension vector does not match the quiver");
  LaceArray s(q);
  std::vector<std::int64_t> covered(q.vertex_count(), 0);
  for (const auto& j : enumerate_intervals(q)) {
    if (j.is_vertex()) continue;
    const std::int64_t m = shifted_rank_combination(r, j);
    s[j] = m;
    for (int z = j.first; z <= j.last; ++z) covered[z] += m;
  }
  for (std::size_t z = 0; z < q.vertex_count(); ++z)
    s[Interval::vertex(static_cast<int>(z))] =
        static_cast<std::int64_t>(d[static_cast<int>(z)]) - covered[z];
  return s;
}

}  // namespace

LaceArray rank_to_lace(const RankArray& r, const DimensionVector& d) {
  LaceArray s = raw_lace(r, d);
  for (const auto& j : enumerate_intervals(r.quiver()))
    if (s[j] < 0)
      throw InvalidRankArray("not a rank array: multiplicity of " + j.name() + " would be " +
                             std::to_string(s[j]));
  return s;
}

bool validate_rank_array(const RankArray& f, const DimensionVector& d) {
  const LaceArray s = raw_lace(f, d);
  for (auto m : s.values())
    if (m < 0) return false;
  return lace_to_rank(s) == f;
}

Representation indecomposable_rep(const BipartiteQuiver& q, const Interval& j, Field field) {
  if (j.has_phantom(q.n()) || j.first > j.last)
    throw InputError("interval " + j.name() + " is not inside the quiver");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (int z = j.first; z <= j.last; ++z) dims[z] = 1;
  Representation v = Representation::zero(q, DimensionVector(dims), field);
  for (int pos = j.left_arrow(); pos <= j.right_arrow(); ++pos)
    v.set_arrow(static_cast<std::size_t>(pos), ExactMatrix::identity(field, 1));
  return v;
}

Representation realize_lace(const LaceArray& s, Field field) {
  const BipartiteQuiver& q = s.quiver();
  Representation v = Representation::zero(q, DimensionVector(std::vector<std::size_t>(q.vertex_count(), 0)), field);
  for (const auto& j : enumerate_intervals(q)) {
    if (s[j] < 0) throw InputError("negative multiplicity in lace array");
    for (std::int64_t k = 0; k < s[j]; ++k) v = direct_sum(v, indecomposable_rep(q, j, field));
  }
  return v;
}

Representation direct_sum(const Representation& u, const Representation& v) {
  if (!(u.quiver() == v.quiver())) throw InputError("direct sum of representations of different quivers");
  if (!(u.field() == v.field())) throw InputError("direct sum over different fields");
  std::vector<std::size_t> dims(u.dims().size());
  for (std::size_t z = 0; z < dims.size(); ++z)
    dims[z] = u.dims()[static_cast<int>(z)] + v.dims()[static_cast<int>(z)];
  std::vector<ExactMatrix> arrows;
  for (std::size_t a = 1; a <= u.quiver().arrow_count(); ++a)
    arrows.push_back(direct_sum(u.arrow(a), v.arrow(a)));
  return Representation(u.quiver(), DimensionVector(dims), std::move(arrows), u.field());
}

Representation act(const BaseChange& g, const Representation& v) {
  const TypeAQuiver& q = v.quiver();
  if (g.size() != q.vertex_count())
    throw InputError("base change needs one matrix per vertex");
  BaseChange inv;
  for (std::size_t z = 0; z < g.size(); ++z) {
    const std::size_t dz = v.dims()[static_cast<int>(z)];
    if (g[z].rows() != dz || g[z].cols() != dz)
      throw InputError("base change at vertex " + std::to_string(z) + " must be " + shape_of(dz, dz));
    inv.push_back(inverse(g[z]));
  }
  std::vector<ExactMatrix> arrows;
  for (std::size_t a = 1; a <= q.arrow_count(); ++a)
    arrows.push_back(multiply(multiply(g[q.head(a)], v.arrow(a)), inv[q.tail(a)]));
  return Representation(q, v.dims(), std::move(arrows), v.field());
}

BaseChange compose(const BaseChange& g, const BaseChange& h) {
  if (g.size() != h.size()) throw InputError("composing base changes of different quivers");
  BaseChange out;
  for (std::size_t z = 0; z < g.size(); ++z) out.push_back(multiply(g[z], h[z]));
  return out;
}

Representation random_representation(const TypeAQuiver& q, const DimensionVector& d, Field field,
                                     std::mt19937_64& rng) {
  std::vector<ExactMatrix> arrows;
  for (std::size_t a = 1; a <= q.arrow_count(); ++a)
    arrows.push_back(random_matrix(field, d[static_cast<int>(q.head(a))], d[static_cast<int>(q.tail(a))], rng));
  return Representation(q, d, std::move(arrows), field);
}

BaseChange random_base_change(const DimensionVector& d, Field field, std::mt19937_64& rng) {
  BaseChange g;
  for (auto dz : d.values()) g.push_back(random_invertible(field, dz, rng));
  return g;
}

}  // namespace qloci
