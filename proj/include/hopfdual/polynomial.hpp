#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfdual/field.hpp"
#include "hopfdual/matrix.hpp"
#include "hopfdual/rng.hpp"

namespace hopfdual {

/// Univariate polynomial, coefficients from the constant term up. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
 public:
  explicit Poly(Field field) : field_(field) {}
  Poly(Field field, Vector coeffs);
  static Poly constant(Field field, long c);
  /// x - a
  static Poly linear(const Scalar& a);
  static Poly x(Field field) { return Poly(field, {Scalar(field), Scalar(field, 1L)}); }
  static Poly from_ints(Field field, const std::vector<long>& coeffs);

  const Field& field() const noexcept { return field_; }
  const Vector& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(field_); }
  const Scalar& leading() const { return c_.back(); }
  Poly monic() const;
  Poly derivative() const;
  Scalar operator()(const Scalar& x) const;
  /// Evaluation at a square matrix (Horner).
  Matrix operator()(const Matrix& m) const;
  /// "x^2 + 4x + 1" style.
  std::string to_string() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s);
  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

 private:
  void trim();
  Field field_;
  Vector c_;
};

/// Quotient and remainder; throws InvalidArgument for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero when both are zero).
Poly gcd(Poly a, Poly b);
Poly pow(const Poly& a, std::size_t e);
/// a^e mod m by repeated squaring, with big exponents.
Poly powmod(const Poly& a, const mpz_class& e, const Poly& m);

/// Upper Hessenberg reduction followed by the usual recurrence; valid over
/// any field.
Poly characteristic_polynomial(const Matrix& m);
/// First linear dependency among I, T, T^2, ...; monic.
Poly minimal_polynomial(const Matrix& t);
/// Companion matrix with ones on the subdiagonal and -c_i in the last column.
Matrix companion(const Poly& monic);

/// Monic irreducibles of the given degree over a prime field, in
/// lexicographic order of coefficients from the top down.
std::vector<Poly> monic_irreducibles(Field prime_field, std::size_t degree);
/// Factorization into monic irreducibles by trial division over increasing
/// degrees; returns (factor, multiplicity) sorted by degree, then
/// lexicographically. Prime fields only.
std::vector<std::pair<Poly, std::size_t>> factor_by_trial(const Poly& f);

/// Rational roots via the rational root test. Returns nullopt when the
/// cleared coefficients are too large to enumerate divisors.
std::optional<std::vector<Scalar>> rational_roots(const Poly& f);

/// Some monic factor g of f with 0 < deg g < deg f, or nullopt when f is
/// seen to be irreducible (or, over the rationals, when no rational root or
/// repeated factor is found). Over F_p this is exact: squarefree part,
/// distinct-degree and equal-degree splitting with the given generator.
std::optional<Poly> proper_factor(const Poly& f, SeededRng& rng);

}  // namespace hopfdual
