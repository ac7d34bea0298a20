#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gralg {

/// Ground field descriptor: the rationals or a prime field GF(p).
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rational() { return Field(Kind::Rational, 0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Parses "rational", "Q", "gf:5", "gf5" or "GF(5)".
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  bool is_finite() const noexcept { return kind_ == Kind::Prime; }
  /// Characteristic; 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  /// "rational" or "gf(p)"; used as the field tag in reports.
  std::string tag() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; GF(p) values are canonical residues in [0, p).
class Scalar {
 public:
  explicit Scalar(Field field = Field::rational()) : field_(field) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);
  Scalar(Field field, const mpz_class& value);

  /// Parses an integer or "p/q" string.
  static Scalar parse(Field field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Only meaningful over the rationals.
  const mpq_class& rational() const noexcept { return q_; }
  /// Only meaningful over GF(p).
  std::uint64_t residue() const noexcept { return r_; }

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order within one field (numeric for Q, by residue for GF(p)).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// "3", "-1/2"; GF(p) residues print as plain integers.
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace gralg
