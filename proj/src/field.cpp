#include "hopfdual/field.hpp"


#include "hopfdual/error.hpp"

namespace hopfdual {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  return Field(FieldKind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string Field::describe() const {
  return is_prime() ? "F_" + std::to_string(p_) : "Q";
}

namespace {

std::uint64_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  // a^(p-2) by square and multiply
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field_.is_prime())
    residue_ = reduce(mpz_class(value), field_.characteristic());
  else
    rat_ = value;
}

Scalar::Scalar(Field field, const mpz_class& value) : field_(field) {
  if (field_.is_prime())
    residue_ = reduce(value, field_.characteristic());
  else
    rat_ = mpq_class(value);
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field_.is_prime()) {
    mpq_class v = value;
    v.canonicalize();
    std::uint64_t den = reduce(v.get_den(), field_.characteristic());
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "denominator vanishes in " + field_.describe());
    residue_ = reduce(v.get_num(), field_.characteristic()) * inverse_mod(den, field_.characteristic()) %
               field_.characteristic();
  } else {
    rat_ = value;
    rat_.canonicalize();
  }
}

Scalar Scalar::parse(Field field, std::string_view text) {
  auto fail = [&] { throw Error(ErrorCode::ParseError, "malformed scalar \"" + std::string(text) + "\""); };
  if (text.empty()) fail();
  auto slash = text.find('/');
  auto integer_ok = [](std::string_view s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!integer_ok(num, true)) fail();
  if (slash != std::string_view::npos && !integer_ok(den, false)) fail();
  std::string num_str(num);
  if (!num_str.empty() && num_str[0] == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
  if (d == 0) fail();
  return Scalar(field, mpq_class(n, d));
}

bool Scalar::is_zero() const { return field_.is_prime() ? residue_ == 0 : sgn(rat_) == 0; }

bool Scalar::is_one() const { return field_.is_prime() ? residue_ == 1 : rat_ == 1; }

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue_);
  return rat_.get_str(10);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_prime()) throw Error(ErrorCode::FieldMismatch, "rational() on a prime-field element");
  return rat_;
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime()) throw Error(ErrorCode::FieldMismatch, "residue() on a rational element");
  return residue_;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_))
    throw Error(ErrorCode::FieldMismatch, field_.describe() + " vs " + other.field_.describe());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  Scalar out(field_);
  if (field_.is_prime())
    out.residue_ = inverse_mod(residue_, field_.characteristic());
  else
    out.rat_ = 1 / rat_;
  return out;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result(field_, 1L), base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_prime())
    out.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
  else
    out.rat_ = -rat_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime())
    residue_ = (residue_ + other.residue_) % field_.characteristic();
  else
    rat_ += other.rat_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime())
    residue_ = (residue_ + field_.characteristic() - other.residue_) % field_.characteristic();
  else
    rat_ -= other.rat_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime())
    residue_ = residue_ * other.residue_ % field_.characteristic();
  else
    rat_ *= other.rat_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_prime() ? a.residue_ == b.residue_ : a.rat_ == b.rat_;
}

Vector zero_vector(Field field, std::size_t n) { return Vector(n, Scalar(field)); }

Vector unit_vector(Field field, std::size_t n, std::size_t index) {
  Vector v = zero_vector(field, n);
  v.at(index) = Scalar(field, 1L);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace hopfdual
