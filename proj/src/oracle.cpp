#include "qloci/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "qloci/poset.hpp"

namespace qloci {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Small dense matrices over F_p, kept apart from ExactMatrix so the oracle's
// group action shares no code with the library under test.
using SmallMatrix = std::vector<std::uint32_t>;

struct GLTable {
  std::size_t k = 0;
  std::vector<SmallMatrix> elements;
  std::vector<SmallMatrix> inverses;
};

bool small_invert(SmallMatrix a, std::size_t k, std::uint32_t p, SmallMatrix& inv) {
  inv.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) inv[i * k + i] = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv * k + c] == 0) ++piv;
    if (piv == k) return false;
    for (std::size_t j = 0; j < k; ++j) {
      std::swap(a[c * k + j], a[piv * k + j]);
      std::swap(inv[c * k + j], inv[piv * k + j]);
    }
    // Inverse of the pivot as pivot^(p-2).
    std::uint32_t s = 1;
    for (std::uint32_t e = 0; e + 2 < p; ++e) s = s * a[c * k + c] % p;
    for (std::size_t j = 0; j < k; ++j) {
      a[c * k + j] = a[c * k + j] * s % p;
      inv[c * k + j] = inv[c * k + j] * s % p;
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r * k + c] == 0) continue;
      const std::uint32_t f = a[r * k + c];
      for (std::size_t j = 0; j < k; ++j) {
        a[r * k + j] = (a[r * k + j] + (p - f) * a[c * k + j]) % p;
        inv[r * k + j] = (inv[r * k + j] + (p - f) * inv[c * k + j]) % p;
      }
    }
  }
  return true;
}

GLTable build_gl(std::size_t k, std::uint32_t p, std::uint64_t guard) {
  GLTable t;
  t.k = k;
  std::uint64_t all = 1;
  for (std::size_t i = 0; i < k * k; ++i) all = saturating_mul(all, p);
  if (all > guard)
    throw GuardError("listing GL_" + std::to_string(k) + "(F_" + std::to_string(p) + ") needs " +
                     std::to_string(all) + " candidate matrices, above the guard");
  SmallMatrix m(k * k, 0), inv;
  for (std::uint64_t code = 0; code < all; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = k * k; i-- > 0;) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (small_invert(m, k, p, inv)) {
      t.elements.push_back(m);
      t.inverses.push_back(inv);
    }
  }
  return t;
}

// Sweeps a subgroup of GL(d) (the factors at `active` vertices; identity
// elsewhere) over points of a PointSpace.
class Sweeper {
 public:
  Sweeper(const PointSpace& space, const std::vector<bool>& active, std::uint64_t guard)
      : space_(space) {
    const auto& d = space.dims();
    std::map<std::size_t, std::size_t> by_size;
    order_ = 1;
    for (std::size_t z = 0; z < d.size(); ++z) {
      if (!active[z] || d[static_cast<int>(z)] == 0) continue;
      const std::size_t k = d[static_cast<int>(z)];
      if (!by_size.contains(k)) {
        by_size[k] = tables_.size();
        tables_.push_back(build_gl(k, space.p(), guard));
      }
      factors_.push_back({z, by_size[k]});
      order_ = saturating_mul(order_, tables_[by_size[k]].elements.size());
    }
    if (order_ > guard)
      throw GuardError("group has " + (order_ == kSaturated ? std::string("too many") : std::to_string(order_)) +
                       " elements, above the guard " + std::to_string(guard));
  }

  std::uint64_t order() const { return order_; }

  // Images of `x` under every group element, ascending and deduplicated.
  std::vector<std::uint64_t> orbit_of(std::uint64_t x, Exec exec) const {
    std::vector<std::uint8_t> src;
    space_.digits(x, src);
    std::vector<std::uint64_t> images;
    const auto total = static_cast<long>(order_);
    if (exec == Exec::serial) {
      Scratch s;
      for (long g = 0; g < total; ++g) images.push_back(image(src, static_cast<std::uint64_t>(g), s));
    } else {
#pragma omp parallel
      {
        Scratch s;
        std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
        for (long g = 0; g < total; ++g) local.push_back(image(src, static_cast<std::uint64_t>(g), s));
#pragma omp critical
        images.insert(images.end(), local.begin(), local.end());
      }
    }
    std::ranges::sort(images);
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return images;
  }

 private:
  struct Factor {
    std::size_t vertex;
    std::size_t table;
  };
  struct Scratch {
    std::vector<const SmallMatrix*> g;
    std::vector<const SmallMatrix*> g_inv;
    std::vector<std::uint8_t> dst;
    SmallMatrix tmp;
  };

  std::uint64_t image(const std::vector<std::uint8_t>& src, std::uint64_t code, Scratch& s) const {
    const auto& q = space_.quiver();
    const auto& d = space_.dims();
    const std::uint32_t p = space_.p();
    s.g.assign(d.size(), nullptr);
    s.g_inv.assign(d.size(), nullptr);
    for (const auto& f : factors_) {
      const auto& t = tables_[f.table];
      const auto e = code % t.elements.size();
      code /= t.elements.size();
      s.g[f.vertex] = &t.elements[e];
      s.g_inv[f.vertex] = &t.inverses[e];
    }
    s.dst = src;
    for (std::size_t a = 1; a <= q.arrow_count(); ++a) {
      const std::size_t h = q.head(a), tl = q.tail(a);
      const std::size_t rows = d[static_cast<int>(h)], cols = d[static_cast<int>(tl)];
      if (rows == 0 || cols == 0) continue;
      const std::size_t off = space_.arrow_offset(a);
      // tmp = g_h * V
      s.tmp.assign(rows * cols, 0);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          std::uint32_t acc = 0;
          for (std::size_t k = 0; k < rows; ++k) {
            const std::uint32_t gik = s.g[h] ? (*s.g[h])[i * rows + k] : (i == k ? 1u : 0u);
            acc += gik * src[off + k * cols + j];
          }
          s.tmp[i * cols + j] = acc % p;
        }
      // dst = tmp * g_t^{-1}
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          std::uint32_t acc = 0;
          for (std::size_t k = 0; k < cols; ++k) {
            const std::uint32_t gkj = s.g_inv[tl] ? (*s.g_inv[tl])[k * cols + j] : (k == j ? 1u : 0u);
            acc += s.tmp[i * cols + k] * gkj;
          }
          s.dst[off + i * cols + j] = static_cast<std::uint8_t>(acc % p);
        }
    }
    return space_.index_of(s.dst);
  }

  const PointSpace& space_;
  std::vector<GLTable> tables_;
  std::vector<Factor> factors_;
  std::uint64_t order_ = 1;
};

// Orbits of the points selected by `include`, each as a sorted index list.
std::vector<std::vector<std::uint64_t>> partition(const PointSpace& space, const Sweeper& sweeper,
                                                  const std::vector<bool>* include, Exec exec) {
  std::vector<bool> assigned(space.size(), false);
  std::vector<std::vector<std::uint64_t>> orbits;
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    if (assigned[x] || (include && !(*include)[x])) continue;
    auto orbit = sweeper.orbit_of(x, exec);
    for (auto y : orbit) {
      if (assigned[y] || (include && !(*include)[y]))
        throw InvariantError("group sweep left its own orbit at point " + std::to_string(y));
      assigned[y] = true;
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

template <typename Key>
OracleVerdict compare_with_fibers(const std::vector<std::vector<std::uint64_t>>& orbits,
                                  const std::vector<Key>& key_of_point,
                                  const std::vector<std::uint64_t>& point_slot) {
  OracleVerdict verdict;
  verdict.orbit_count = orbits.size();
  std::map<Key, std::size_t> owner;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const Key& key = key_of_point[point_slot[orbits[o].front()]];
    for (auto x : orbits[o])
      if (!(key_of_point[point_slot[x]] == key)) {
        verdict.counterexample = "points " + std::to_string(orbits[o].front()) + " and " + std::to_string(x) +
                                 " share an orbit but not an invariant";
        return verdict;
      }
    auto [it, fresh] = owner.emplace(key, o);
    if (!fresh) {
      verdict.counterexample = "orbits of points " + std::to_string(orbits[it->second].front()) + " and " +
                               std::to_string(orbits[o].front()) + " share an invariant";
      return verdict;
    }
  }
  verdict.fiber_count = owner.size();
  verdict.passed = true;
  return verdict;
}

}  // namespace

PointSpace::PointSpace(TypeAQuiver q, DimensionVector d, std::uint32_t p, std::uint64_t guard)
    : quiver_(std::move(q)), dims_(std::move(d)), p_(p) {
  if (p >= 256) throw InputError("the oracle works over primes below 256");
  (void)Field::prime(p);
  if (dims_.size() != quiver_.vertex_count()) throw InputError("dimension vector does not match the quiver");
  for (std::size_t a = 1; a <= quiver_.arrow_count(); ++a) {
    offsets_.push_back(entries_);
    entries_ += dims_[static_cast<int>(quiver_.head(a))] * dims_[static_cast<int>(quiver_.tail(a))];
  }
  for (std::size_t i = 0; i < entries_; ++i) size_ = saturating_mul(size_, p);
  if (size_ > guard)
    throw GuardError("rep space has " + (size_ == kSaturated ? std::string("too many") : std::to_string(size_)) +
                     " points over F_" + std::to_string(p) + ", above the guard " + std::to_string(guard));
}

void PointSpace::digits(std::uint64_t index, std::vector<std::uint8_t>& out) const {
  out.assign(entries_, 0);
  for (std::size_t i = entries_; i-- > 0;) {
    out[i] = static_cast<std::uint8_t>(index % p_);
    index /= p_;
  }
}

std::uint64_t PointSpace::index_of(const std::vector<std::uint8_t>& digits) const {
  std::uint64_t index = 0;
  for (auto v : digits) index = index * p_ + v;
  return index;
}

Representation PointSpace::decode(std::uint64_t index) const {
  std::vector<std::uint8_t> dg;
  digits(index, dg);
  const Field f = field();
  std::vector<ExactMatrix> arrows;
  for (std::size_t a = 1; a <= quiver_.arrow_count(); ++a) {
    ExactMatrix m(f, dims_[static_cast<int>(quiver_.head(a))], dims_[static_cast<int>(quiver_.tail(a))]);
    auto res = m.residues();
    std::copy_n(dg.begin() + static_cast<long>(offsets_[a - 1]), res.size(), res.begin());
    arrows.push_back(std::move(m));
  }
  return Representation(quiver_, dims_, std::move(arrows), f);
}

std::uint64_t PointSpace::encode(const Representation& v) const {
  if (!(v.quiver() == quiver_) || !(v.dims() == dims_) || !(v.field() == field()))
    throw InputError("representation is not a point of this space");
  std::vector<std::uint8_t> dg;
  for (const auto& m : v.arrows())
    for (auto r : m.residues()) dg.push_back(static_cast<std::uint8_t>(r));
  return index_of(dg);
}

std::vector<Representation> enumerate_reps(const TypeAQuiver& q, const DimensionVector& d,
                                           std::uint32_t p, std::uint64_t guard) {
  const PointSpace space(q, d, p, guard);
  std::vector<Representation> out;
  out.reserve(space.size());
  for (std::uint64_t x = 0; x < space.size(); ++x) out.push_back(space.decode(x));
  return out;
}

std::uint64_t gl_order(std::size_t k, std::uint32_t p) {
  std::uint64_t pk = 1;
  for (std::size_t i = 0; i < k; ++i) pk = saturating_mul(pk, p);
  std::uint64_t order = 1, pi = 1;
  for (std::size_t i = 0; i < k; ++i) {
    order = saturating_mul(order, pk - pi);
    pi *= p;
  }
  return order;
}

std::vector<std::uint64_t> OrbitCensus::sizes() const {
  std::vector<std::uint64_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  return out;
}

OrbitCensus brute_orbit_partition(const PointSpace& space, std::uint64_t guard, Exec exec) {
  const Sweeper sweeper(space, std::vector<bool>(space.dims().size(), true), guard);
  OrbitCensus census;
  census.p = space.p();
  census.quiver = space.quiver();
  census.dims = space.dims();
  census.point_count = space.size();
  census.group_order = sweeper.order();
  census.orbits = partition(space, sweeper, nullptr, exec);
  return census;
}

OracleVerdict verify_rank_determines_orbit(const TypeAQuiver& q, const DimensionVector& d,
                                           std::uint32_t p, std::uint64_t guard, Exec exec) {
  const PointSpace space(q, d, p, guard);
  const OrbitCensus census = brute_orbit_partition(space, guard, exec);
  const auto bipartite = BipartiteQuiver::from_type_a(q);
  const ReductionContext ctx = bipartite_double(q);
  std::vector<std::vector<std::int64_t>> keys(space.size());
  const auto total = static_cast<long>(space.size());
  auto key_of = [&](long x) {
    const auto v = space.decode(static_cast<std::uint64_t>(x));
    keys[static_cast<std::size_t>(x)] = bipartite ? rank_array(v).values() : rank_array_arbitrary(ctx, v).values();
  };
  if (exec == Exec::serial) {
    for (long x = 0; x < total; ++x) key_of(x);
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (long x = 0; x < total; ++x) key_of(x);
  }
  std::vector<std::uint64_t> slot(space.size());
  std::iota(slot.begin(), slot.end(), std::uint64_t{0});
  return compare_with_fibers(census.orbits, keys, slot);
}

OracleVerdict verify_fiber_transitivity(const ReductionContext& ctx, const DimensionVector& d,
                                        std::uint32_t p, std::uint64_t guard, Exec exec) {
  const DimensionVector lifted = lift_dimension(ctx, d);
  const PointSpace space(ctx.target.as_type_a(), lifted, p, guard);
  const PointSpace base(ctx.source, d, p, kSaturated);
  std::vector<bool> active(lifted.size(), false);
  for (const auto& ins : ctx.insertions) active[static_cast<std::size_t>(ins.vertex)] = true;
  const Sweeper sweeper(space, active, guard);

  std::vector<bool> in_u(space.size(), false);
  std::vector<std::uint64_t> keys(space.size(), 0);
  const auto total = static_cast<long>(space.size());
  auto classify = [&](long x) {
    const auto v = space.decode(static_cast<std::uint64_t>(x));
    if (!in_open_locus(ctx, v)) return;
    in_u[static_cast<std::size_t>(x)] = true;
    keys[static_cast<std::size_t>(x)] = base.encode(project(ctx, v));
  };
  // vector<bool> packs bits, so concurrent writes to neighbours would race.
  for (long x = 0; x < total; ++x) classify(x);
  const auto orbits = partition(space, sweeper, &in_u, exec);
  std::vector<std::uint64_t> slot(space.size());
  std::iota(slot.begin(), slot.end(), std::uint64_t{0});
  return compare_with_fibers(orbits, keys, slot);
}

std::size_t count_lace_arrays(const DimensionVector& d, std::uint64_t guard) {
  if (d.size() == 0) return 1;
  std::vector<std::size_t> padded = d.values();
  if (padded.size() % 2 == 0) padded.push_back(0);
  const BipartiteQuiver q((padded.size() - 1) / 2);
  return enumerate_laces(q, DimensionVector(padded), guard).size();
}

OracleVerdict census_sanity(const OrbitCensus& census) {
  OracleVerdict verdict;
  verdict.orbit_count = census.orbits.size();
  std::uint64_t sum = 0;
  for (const auto& o : census.orbits) {
    sum += o.size();
    if (census.group_order % o.size() != 0) {
      verdict.counterexample = "orbit of size " + std::to_string(o.size()) + " does not divide |GL(d)| = " +
                               std::to_string(census.group_order);
      return verdict;
    }
  }
  if (sum != census.point_count) {
    verdict.counterexample = "orbit sizes sum to " + std::to_string(sum) + ", expected " +
                             std::to_string(census.point_count);
    return verdict;
  }
  verdict.fiber_count = count_lace_arrays(census.dims, kSaturated);
  if (verdict.fiber_count != census.orbits.size()) {
    verdict.counterexample = std::to_string(census.orbits.size()) + " orbits but " +
                             std::to_string(verdict.fiber_count) + " lace arrays";
    return verdict;
  }
  verdict.passed = true;
  return verdict;
}

BruhatCoverOrder::BruhatCoverOrder(std::size_t d) : degree_(d) {
  if (d > 6) throw GuardError("cover-closure Bruhat order is limited to S_6");
  std::vector<std::size_t> v = Permutation::identity(d).one_line();
  do elements_.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));

  const std::size_t count = elements_.size();
  std::vector<std::vector<std::size_t>> up(count);
  for (std::size_t u = 0; u < count; ++u) {
    const auto& w = elements_[u].one_line();
    const std::size_t len = inversion_length(elements_[u]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        if (w[i] > w[j]) continue;
        auto swapped = w;
        std::swap(swapped[i], swapped[j]);
        Permutation t(std::move(swapped));
        if (inversion_length(t) == len + 1) {
          up[u].push_back(index(t));
          ++covers_;
        }
      }
  }
  leq_.assign(count, std::vector<bool>(count, false));
  for (std::size_t u = 0; u < count; ++u) {
    std::vector<std::size_t> stack{u};
    leq_[u][u] = true;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (auto y : up[x])
        if (!leq_[u][y]) {
          leq_[u][y] = true;
          stack.push_back(y);
        }
    }
  }
}

std::size_t BruhatCoverOrder::index(const Permutation& u) const {
  // Lehmer code rank, matching the lexicographic order of elements_.
  const auto& w = u.one_line();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[j] < w[i]) ++smaller;
    rank = rank * (w.size() - i) + smaller;
  }
  return rank;
}

bool BruhatCoverOrder::leq(const Permutation& u, const Permutation& v) const {
  if (u.size() != degree_ || v.size() != degree_) throw InputError("permutation size does not match the order");
  return leq_[index(u)][index(v)];
}

BruhatCoverOrder bruhat_via_covers(std::size_t d) { return BruhatCoverOrder(d); }

}  // namespace qloci
