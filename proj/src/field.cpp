#include "qloci/field.hpp"

#include <charconv>

#include "qloci/errors.hpp"

namespace qloci {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpq_class q;
  try {
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s, 10));
    } else {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      if (den == 0) throw InputError("zero denominator in '" + s + "'");
      q = mpq_class(num, den);
      q.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw InputError("not a rational number: '" + s + "'");
  }
  return q;
}

}  // namespace

namespace modp {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw InputError("division by zero in F_" + std::to_string(p));
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace modp

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p))
    throw InputError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    std::uint32_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc{} || ptr != body.data() + body.size())
      throw InputError("bad field tag '" + std::string(text) + "'");
    return prime(p);
  }
  throw InputError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

FieldScalar::FieldScalar(Field field, long value) : field_(field) {
  if (field.is_rational())
    value_ = mpq_class(value);
  else
    value_ = modp::reduce(value, field.characteristic());
}

FieldScalar::FieldScalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = q;
    return;
  }
  const std::uint32_t p = field.characteristic();
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw InputError("denominator vanishes in " + field.name());
  value_ = modp::mul(static_cast<std::uint32_t>(num.get_ui()),
                     modp::inv(static_cast<std::uint32_t>(den.get_ui()), p), p);
}

FieldScalar FieldScalar::parse(Field field, std::string_view text) {
  return FieldScalar(field, parse_rational(text));
}

bool FieldScalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

std::uint32_t FieldScalar::residue() const {
  if (field_.is_rational()) throw InputError("residue() on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& FieldScalar::rational() const {
  if (!field_.is_rational()) throw InputError("rational() on a residue");
  return std::get<mpq_class>(value_);
}

std::string FieldScalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

void FieldScalar::require_same_field(const FieldScalar& o) const {
  if (!(field_ == o.field_))
    throw InputError("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  require_same_field(o);
  if (field_.is_rational()) return {field_, mpq_class(rational() + o.rational())};
  FieldScalar r = *this;
  r.value_ = modp::add(residue(), o.residue(), field_.characteristic());
  return r;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  require_same_field(o);
  if (field_.is_rational()) return {field_, mpq_class(rational() - o.rational())};
  FieldScalar r = *this;
  r.value_ = modp::sub(residue(), o.residue(), field_.characteristic());
  return r;
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  require_same_field(o);
  if (field_.is_rational()) return {field_, mpq_class(rational() * o.rational())};
  FieldScalar r = *this;
  r.value_ = modp::mul(residue(), o.residue(), field_.characteristic());
  return r;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (field_.is_rational()) return {field_, mpq_class(1 / rational())};
  FieldScalar r = *this;
  r.value_ = modp::inv(residue(), field_.characteristic());
  return r;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

FieldScalar FieldScalar::operator-() const { return zero(field_) - *this; }

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

}  // namespace qloci
