#include "hopfdual/polynomial.hpp"

#include <algorithm>
#include <set>

#include "hopfdual/error.hpp"

namespace hopfdual {

Poly::Poly(Field field, Vector coeffs) : field_(field), c_(std::move(coeffs)) {
  for (const auto& s : c_)
    if (!(s.field() == field_)) throw Error(ErrorCode::FieldMismatch, "polynomial coefficient from another field");
  trim();
}

Poly Poly::constant(Field field, long c) { return Poly(field, {Scalar(field, c)}); }

Poly Poly::linear(const Scalar& a) { return Poly(a.field(), {-a, Scalar(a.field(), 1L)}); }

Poly Poly::from_ints(Field field, const std::vector<long>& coeffs) {
  Vector v;
  for (long c : coeffs) v.emplace_back(field, c);
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = leading().inverse();
  Poly out = *this;
  for (auto& c : out.c_) c *= inv;
  return out;
}

Poly Poly::derivative() const {
  Vector d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(field_, static_cast<long>(i)));
  return Poly(field_, std::move(d));
}

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Poly::operator()(const Matrix& m) const {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "polynomial evaluated at a non-square matrix");
  const std::size_t n = m.rows();
  Matrix acc(field_, n, n);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Scalar& c = c_[k];
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    bool negative = !s.empty() && s[0] == '-';
    if (negative) s.erase(0, 1);
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (k == 0 || s != "1") out += s;
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!(o.field_ == field_)) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  Vector out(a.c_.size() + b.c_.size() - 1, Scalar(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(a.field_, std::move(out));
}

Poly operator*(Poly a, const Scalar& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  const Field f = a.field();
  Vector r = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {Poly(f), a};
  Vector q(static_cast<std::size_t>(a.degree() - db + 1), Scalar(f));
  const Scalar inv = b.leading().inverse();
  for (long k = a.degree(); k >= db; --k) {
    Scalar t = r[static_cast<std::size_t>(k)] * inv;
    if (t.is_zero()) continue;
    q[static_cast<std::size_t>(k - db)] = t;
    for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= t * b.coeffs()[static_cast<std::size_t>(i)];
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly pow(const Poly& a, std::size_t e) {
  Poly out = Poly::constant(a.field(), 1);
  for (std::size_t i = 0; i < e; ++i) out = out * a;
  return out;
}

Poly powmod(const Poly& a, const mpz_class& e, const Poly& m) {
  Poly result = divmod(Poly::constant(a.field(), 1), m).second;
  Poly base = divmod(a, m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * base, m).second;
  }
  return result;
}

Poly characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t r = c + 1;
    while (r < n && h(r, c).is_zero()) ++r;
    if (r == n) continue;
    if (r != c + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(r, k), h(c + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, r), h(k, c + 1));
    }
    const Scalar inv = h(c + 1, c).inverse();
    for (std::size_t i = c + 2; i < n; ++i) {
      Scalar t = h(i, c) * inv;
      if (t.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) h(i, k) -= t * h(c + 1, k);
      for (std::size_t k = 0; k < n; ++k) h(k, c + 1) += t * h(k, i);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (h_{m,m-1} ... h_{m-i+1,m-i}) p_{m-i-1}, 1-indexed
  auto at = [&](std::size_t r, std::size_t c) -> const Scalar& { return h(r - 1, c - 1); };
  std::vector<Poly> p{Poly::constant(f, 1)};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next = Poly::linear(at(k, k)) * p[k - 1];
    Scalar prod(f, 1L);
    for (std::size_t i = 1; i < k; ++i) {
      prod *= at(k - i + 1, k - i);
      next -= p[k - i - 1] * (at(k - i, k) * prod);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Poly minimal_polynomial(const Matrix& t) {
  if (!t.is_square()) throw Error(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
  const Field f = t.field();
  const std::size_t n = t.rows();
  std::vector<Vector> powers{flatten(Matrix::identity(f, n))};
  Matrix current = Matrix::identity(f, n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * t;
    Vector target = flatten(current);
    auto c = solve(Matrix::from_columns(f, powers, n * n), target);
    if (c) {
      Vector coeffs;
      for (const auto& x : *c) coeffs.push_back(-x);
      coeffs.emplace_back(f, 1L);
      return Poly(f, std::move(coeffs));
    }
    powers.push_back(std::move(target));
  }
  throw Error(ErrorCode::InvalidArgument, "no dependency among matrix powers");
}

Matrix companion(const Poly& monic) {
  const Field f = monic.field();
  if (monic.degree() < 1 || !monic.leading().is_one())
    throw Error(ErrorCode::InvalidArgument, "companion matrix needs a monic polynomial of positive degree");
  const auto n = static_cast<std::size_t>(monic.degree());
  Matrix c(f, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = Scalar(f, 1L);
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -monic.coeff(i);
  return c;
}

namespace {

void require_prime(const Field& f) {
  if (!f.is_prime()) throw Error(ErrorCode::InvalidArgument, "operation needs a prime field");
}

// All monic polynomials of degree d, top coefficients most significant.
std::vector<Poly> all_monic(Field f, std::size_t d) {
  const std::uint64_t p = f.characteristic();
  double count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= static_cast<double>(p);
  if (count > 2e6) throw Error(ErrorCode::BudgetExceeded, "too many monic polynomials to enumerate");
  std::vector<Poly> out;
  std::vector<std::uint64_t> digits(d, 0);  // digits[0] is the x^{d-1} coefficient
  while (true) {
    Vector c(d + 1, Scalar(f));
    for (std::size_t i = 0; i < d; ++i) c[d - 1 - i] = Scalar(f, static_cast<long>(digits[i]));
    c[d] = Scalar(f, 1L);
    out.emplace_back(f, std::move(c));
    std::size_t i = d;
    while (i > 0 && ++digits[i - 1] == p) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace

std::vector<Poly> monic_irreducibles(Field f, std::size_t degree) {
  require_prime(f);
  if (degree == 0) return {};
  std::vector<Poly> smaller;
  for (std::size_t d = 1; 2 * d <= degree; ++d)
    for (auto& q : monic_irreducibles(f, d)) smaller.push_back(std::move(q));
  std::vector<Poly> out;
  for (auto& cand : all_monic(f, degree)) {
    bool irreducible = true;
    for (const auto& q : smaller)
      if (divmod(cand, q).second.is_zero()) {
        irreducible = false;
        break;
      }
    if (irreducible) out.push_back(std::move(cand));
  }
  return out;
}

std::vector<std::pair<Poly, std::size_t>> factor_by_trial(const Poly& f) {
  require_prime(f.field());
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  std::vector<std::pair<Poly, std::size_t>> out;
  Poly rest = f.monic();
  for (std::size_t d = 1;; ++d) {
    if (static_cast<long>(2 * d) > rest.degree()) {
      if (rest.degree() > 0) out.emplace_back(rest, 1);
      break;
    }
    for (const auto& q : monic_irreducibles(f.field(), d)) {
      std::size_t mult = 0;
      while (true) {
        auto [quot, rem] = divmod(rest, q);
        if (!rem.is_zero()) break;
        rest = std::move(quot);
        ++mult;
      }
      if (mult > 0) out.emplace_back(q, mult);
    }
  }
  return out;
}

namespace {

const mpz_class kDivisorLimit("1000000000000");

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::optional<std::vector<Scalar>> rational_roots(const Poly& f) {
  if (f.field().is_prime()) throw Error(ErrorCode::InvalidArgument, "rational root test needs the rationals");
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "every scalar is a root of zero");
  const Field q = f.field();
  mpz_class lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> a;
  for (const auto& c : f.coeffs()) a.push_back(mpz_class(c.rational() * lcm));
  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.emplace_back(q, 0L);
  if (static_cast<long>(a.size() - low) <= 1) return roots;
  if (abs(a[low]) > kDivisorLimit || abs(a.back()) > kDivisorLimit) return std::nullopt;
  std::vector<mpq_class> found;
  for (const auto& num : divisors(a[low]))
    for (const auto& den : divisors(a.back()))
      for (int sign : {1, -1}) {
        mpq_class r(sign * num, den);
        r.canonicalize();
        if (std::find(found.begin(), found.end(), r) != found.end()) continue;
        if (f(Scalar(q, r)).is_zero()) found.push_back(r);
      }
  std::sort(found.begin(), found.end());
  for (const auto& r : found) roots.emplace_back(q, r);
  std::sort(roots.begin(), roots.end(),
            [](const Scalar& x, const Scalar& y) { return x.rational() < y.rational(); });
  return roots;
}

namespace {

Poly random_below(Field f, long degree, SeededRng& rng) {
  Vector c;
  for (long i = 0; i < degree; ++i) c.emplace_back(f, static_cast<long>(rng.below(f.characteristic())));
  return Poly(f, std::move(c));
}

bool proper(const Poly& g, const Poly& f) { return g.degree() > 0 && g.degree() < f.degree(); }

std::optional<Poly> equal_degree_split(const Poly& f, std::size_t d, SeededRng& rng) {
  const Field fld = f.field();
  const std::uint64_t p = fld.characteristic();
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, d);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Poly a = random_below(fld, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly g = gcd(f, a);
    if (proper(g, f)) return g;
    Poly b(fld);
    if (p == 2) {
      Poly term = a;
      for (std::size_t i = 0; i < d; ++i) {
        b += term;
        term = divmod(term * term, f).second;
      }
    } else {
      b = powmod(a, (q - 1) / 2, f) - Poly::constant(fld, 1);
    }
    g = gcd(f, b);
    if (proper(g, f)) return g;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Poly> proper_factor(const Poly& input, SeededRng& rng) {
  if (input.degree() <= 1) return std::nullopt;
  const Poly f = input.monic();
  const Field fld = f.field();
  Poly df = f.derivative();
  if (df.is_zero()) {
    // f(x) = r(x^p) = r(x)^p over F_p
    const std::size_t p = fld.characteristic();
    Vector c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
    return Poly(fld, std::move(c)).monic();
  }
  Poly g = gcd(f, df);
  if (g.degree() > 0) return g;
  if (!fld.is_prime()) {
    auto roots = rational_roots(f);
    if (roots && !roots->empty()) return Poly::linear(roots->front());
    return std::nullopt;
  }
  const Poly x = Poly::x(fld);
  Poly h = x;
  const mpz_class p(static_cast<unsigned long>(fld.characteristic()));
  for (std::size_t d = 1; static_cast<long>(2 * d) <= f.degree(); ++d) {
    h = powmod(h, p, f);
    g = gcd(f, h - x);
    if (proper(g, f)) return g;
    if (g == f) return equal_degree_split(f, d, rng);
  }
  return std::nullopt;
}

}  // namespace hopfdual
