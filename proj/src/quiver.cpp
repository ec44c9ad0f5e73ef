#include "qloci/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "qloci/errors.hpp"

namespace qloci {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw InputError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

TypeAQuiver TypeAQuiver::parse(std::string_view word) {
  std::vector<Direction> dirs;
  for (char c : word) {
    if (c == 'L')
      dirs.push_back(Direction::left);
    else if (c == 'R')
      dirs.push_back(Direction::right);
    else
      throw InputError("orientation word may only contain L and R, got '" + std::string(word) + "'");
  }
  return TypeAQuiver(std::move(dirs));
}

std::size_t TypeAQuiver::tail(std::size_t arrow) const {
  return direction(arrow) == Direction::right ? arrow - 1 : arrow;
}

std::size_t TypeAQuiver::head(std::size_t arrow) const {
  return direction(arrow) == Direction::right ? arrow : arrow - 1;
}

std::string TypeAQuiver::word() const {
  std::string s;
  for (auto d : orientation_) s.push_back(d == Direction::left ? 'L' : 'R');
  return s;
}

bool TypeAQuiver::is_sink(std::size_t v) const {
  for (std::size_t a = 1; a <= arrow_count(); ++a)
    if (tail(a) == v) return false;
  return true;
}

bool TypeAQuiver::is_source(std::size_t v) const {
  for (std::size_t a = 1; a <= arrow_count(); ++a)
    if (head(a) == v) return false;
  return true;
}

bool TypeAQuiver::is_alternating() const {
  for (std::size_t i = 1; i < orientation_.size(); ++i)
    if (orientation_[i] == orientation_[i - 1]) return false;
  return true;
}

std::optional<BipartiteQuiver> BipartiteQuiver::from_type_a(const TypeAQuiver& q) {
  if (q.arrow_count() % 2 != 0) return std::nullopt;
  for (std::size_t a = 1; a <= q.arrow_count(); ++a) {
    const Direction expected = a % 2 == 1 ? Direction::left : Direction::right;
    if (q.direction(a) != expected) return std::nullopt;
  }
  return BipartiteQuiver(q.arrow_count() / 2);
}

TypeAQuiver BipartiteQuiver::as_type_a() const {
  std::vector<Direction> dirs;
  for (std::size_t m = 0; m < n_; ++m) {
    dirs.push_back(Direction::left);
    dirs.push_back(Direction::right);
  }
  return TypeAQuiver(std::move(dirs));
}

std::string BipartiteQuiver::vertex_name(int index) {
  // x_m = 2m-1 (so x_0 = -1), y_k = 2k
  if (index % 2 == 0) return "y" + std::to_string(index / 2);
  return "x" + std::to_string((index + 1) / 2);
}

std::string BipartiteQuiver::arrow_name(int position) {
  if (position % 2 == 0) return "b" + std::to_string(position / 2);
  return "a" + std::to_string((position + 1) / 2);
}

int BipartiteQuiver::parse_vertex(std::string_view name) {
  if (name.size() < 2) throw InputError("bad vertex name '" + std::string(name) + "'");
  const int k = parse_int(name.substr(1), "vertex name");
  if (name[0] == 'y') return y(k);
  if (name[0] == 'x') return x(k);
  throw InputError("bad vertex name '" + std::string(name) + "'");
}

int BipartiteQuiver::parse_arrow(std::string_view name) {
  if (name.size() < 2) throw InputError("bad arrow name '" + std::string(name) + "'");
  const int k = parse_int(name.substr(1), "arrow name");
  if (name[0] == 'a') return alpha(k);
  if (name[0] == 'b') return beta(k);
  throw InputError("bad arrow name '" + std::string(name) + "'");
}

std::size_t DimensionVector::total() const {
  return std::accumulate(values_.begin(), values_.end(), std::size_t{0});
}

DimensionVector parse_dimension_csv(std::string_view csv) {
  std::vector<std::size_t> values;
  if (csv.empty()) return DimensionVector{};
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    const auto token = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
    const int v = parse_int(token, "dimension");
    if (v < 0) throw InputError("dimensions must be nonnegative");
    values.push_back(static_cast<std::size_t>(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DimensionVector(std::move(values));
}

std::size_t total_x(const BipartiteQuiver& q, const DimensionVector& d) {
  std::size_t s = 0;
  for (int m = 1; m <= static_cast<int>(q.n()); ++m) s += d[BipartiteQuiver::x(m)];
  return s;
}

std::size_t total_y(const BipartiteQuiver& q, const DimensionVector& d) {
  std::size_t s = 0;
  for (int k = 0; k <= static_cast<int>(q.n()); ++k) s += d[BipartiteQuiver::y(k)];
  return s;
}

Interval Interval::arrows(int left, int right) {
  if (left > right) throw InputError("interval arrows out of order");
  return {left - 1, right};
}

bool Interval::has_phantom(std::size_t n) const {
  return first < 0 || last > static_cast<int>(2 * n);
}

std::string Interval::name() const {
  if (is_vertex()) return "{" + BipartiteQuiver::vertex_name(first) + "}";
  if (arrow_count() == 1) return "[" + BipartiteQuiver::arrow_name(right_arrow()) + "]";
  return "[" + BipartiteQuiver::arrow_name(left_arrow()) + "," +
         BipartiteQuiver::arrow_name(right_arrow()) + "]";
}

std::vector<Interval> enumerate_intervals(const BipartiteQuiver& q) {
  std::vector<Interval> out;
  const int last = static_cast<int>(2 * q.n());
  out.reserve(interval_count(q));
  for (int u = 0; u <= last; ++u)
    for (int w = u; w <= last; ++w) out.push_back({u, w});
  return out;
}

std::size_t interval_count(const BipartiteQuiver& q) {
  const std::size_t v = q.vertex_count();
  return v * (v + 1) / 2;
}

std::size_t interval_index(const BipartiteQuiver& q, const Interval& j) {
  const int v = static_cast<int>(q.vertex_count());
  if (j.first < 0 || j.last >= v || j.first > j.last)
    throw InputError("interval " + j.name() + " is not inside the quiver");
  // sum_{u' < u} (v - u') + (w - u)
  const int u = j.first;
  return static_cast<std::size_t>(u * v - u * (u - 1) / 2 + (j.last - j.first));
}

Interval shift_left(const Interval& j) { return {j.first - 1, j.last - 1}; }
Interval shift_right(const Interval& j) { return {j.first + 1, j.last + 1}; }

std::optional<Interval> interval_meet(const Interval& a, const Interval& b) {
  const int lo = std::max(a.first, b.first), hi = std::min(a.last, b.last);
  if (lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

Interval interval_join(const Interval& a, const Interval& b) {
  return {std::min(a.first, b.first), std::max(a.last, b.last)};
}

int shared_arrow_count(const Interval& a, const Interval& b) {
  return std::max(0, std::min(a.last, b.last) - std::max(a.first, b.first));
}

std::optional<Interval> clip(const Interval& j, const BipartiteQuiver& q) {
  return interval_meet(j, Interval{0, static_cast<int>(2 * q.n())});
}

}  // namespace qloci
