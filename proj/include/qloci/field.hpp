#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace qloci {

/// The ground field: either the rationals or a prime field F_p.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rationals() { return Field{0}; }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An element of a Field. Rationals are kept canonical (reduced, positive
/// denominator); residues lie in [0, p).
class FieldScalar {
 public:
  FieldScalar(Field field, long value);
  FieldScalar(Field field, const mpq_class& value);
  static FieldScalar zero(Field field) { return {field, 0L}; }
  static FieldScalar one(Field field) { return {field, 1L}; }
  /// Parses an integer or "p/q" in the given field.
  static FieldScalar parse(Field field, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  std::uint32_t residue() const;           // prime fields only
  const mpq_class& rational() const;       // Q only
  std::string to_string() const;

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar inverse() const;

  friend bool operator==(const FieldScalar& a, const FieldScalar& b);

 private:
  void require_same_field(const FieldScalar& o) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

namespace modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + (p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
/// Reduces a signed integer into [0, p).
std::uint32_t reduce(long value, std::uint32_t p);

}  // namespace modp

}  // namespace qloci
