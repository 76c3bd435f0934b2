#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hopfdual {

enum class FieldKind { Rationals, PrimeField };

/// Coefficient domain: the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  /// Throws Error(NotPrime) unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == FieldKind::PrimeField; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  explicit Scalar(Field field = Field::rationals()) : field_(field) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpz_class& value);
  /// Rationals only: numerator / denominator.
  Scalar(Field field, const mpq_class& value);

  /// Parses "a", "a/b" (rationals) or a decimal residue (prime fields;
  /// any integer or fraction is reduced mod p). Throws Error(ParseError).
  static Scalar parse(Field field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical string form: "a/b" with b > 0 and gcd 1 ("a" for integers),
  /// or the residue in [0, p).
  std::string to_string() const;

  /// Underlying rational; throws for prime fields.
  const mpq_class& rational() const;
  /// Underlying residue; throws for the rationals.
  std::uint64_t residue() const;

  Scalar inverse() const;  // throws InvalidArgument on zero
  Scalar pow(std::uint64_t exponent) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  mpq_class rat_;
  std::uint64_t residue_ = 0;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
Vector unit_vector(Field field, std::size_t n, std::size_t index);
bool is_zero(const Vector& v);

}  // namespace hopfdual
