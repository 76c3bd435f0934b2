#include "hopfdual/lie.hpp"

#include <algorithm>
#include <cstdint>

#include "hopfdual/error.hpp"

namespace hopfdual {

namespace {

Scalar binomial(Field f, unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Scalar(f, b);
}

Scalar factorial(Field f, unsigned n) {
  mpz_class b;
  mpz_fac_ui(b.get_mpz_t(), n);
  return Scalar(f, b);
}

unsigned total(const std::vector<unsigned>& e) {
  unsigned t = 0;
  for (auto a : e) t += a;
  return t;
}

// Exponent vectors of total degree n, decreasing lexicographically.
void exponents_of_degree(std::size_t vars, unsigned n, std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> e(vars, 0);
  auto rec = [&](auto& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == vars) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  if (vars == 0) {
    if (n == 0) out.push_back(e);
    return;
  }
  rec(rec, 0, n);
}

void require_char0(const Field& f) {
  if (f.is_prime())
    throw Error(ErrorCode::CharacteristicNotZero, "needs characteristic 0; n! may vanish in F_" +
                                                      std::to_string(f.characteristic()));
}

using Word = std::vector<std::uint8_t>;

class Rewriter {
 public:
  explicit Rewriter(const TruncatedEnveloping& u) : u_(u) {}

  const LinComb& normal_form(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    LinComb out;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      std::vector<unsigned> e(u_.lie.dim, 0);
      for (auto letter : w) ++e[letter];
      out[u_.index_of(e)] = Scalar(u_.lie.field, 1L);
    } else {
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      LinComb first = normal_form(swapped);
      out = std::move(first);
      for (const auto& [k, c] : u_.lie.bracket(w[i], w[i + 1])) {
        Word shorter(w.begin(), w.begin() + static_cast<long>(i));
        shorter.push_back(static_cast<std::uint8_t>(k));
        shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        for (const auto& [m, x] : normal_form(shorter)) accumulate(out, m, c * x);
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  const TruncatedEnveloping& u_;
  std::map<Word, LinComb> memo_;
};

Word word_of(const std::vector<unsigned>& e) {
  Word w;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (unsigned k = 0; k < e[i]; ++k) w.push_back(static_cast<std::uint8_t>(i));
  return w;
}

}  // namespace

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out = zero_vector(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      for (const auto& [k, c] : bracket(i, j)) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

LieAlgebra make_lie_algebra(Field field, std::vector<std::string> basis,
                            const std::vector<std::tuple<std::size_t, std::size_t, SparseVec>>& upper) {
  const std::size_t d = basis.size();
  LieAlgebra l{field, d, std::move(basis), std::vector<SparseVec>(d * d)};
  for (const auto& [i, j, v] : upper) {
    if (i >= j || j >= d) throw Error(ErrorCode::InvalidArgument, "brackets are listed for i < j < dim");
    LinComb pos, neg;
    for (const auto& [k, c] : v) {
      if (k >= d) throw Error(ErrorCode::DimensionMismatch, "bracket index out of range");
      if (!(c.field() == field)) throw Error(ErrorCode::FieldMismatch, "bracket coefficient");
      accumulate(pos, k, c);
      accumulate(neg, k, -c);
    }
    l.brackets[i * d + j] = to_sparse(pos);
    l.brackets[j * d + i] = to_sparse(neg);
  }
  return l;
}

Report verify_lie(const LieAlgebra& l) {
  Report report("Lie algebra");
  const std::size_t d = l.dim;
  if (l.brackets.size() != d * d || l.basis.size() != d) {
    report.fail("shape", "bracket tensor has the wrong size");
    return report;
  }
  std::size_t bad = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      LinComb sum;
      for (const auto& [k, c] : l.bracket(i, j)) accumulate(sum, k, c);
      if (i != j)
        for (const auto& [k, c] : l.bracket(j, i)) accumulate(sum, k, c);
      if (!sum.empty()) {
        report.fail("antisymmetry", "(" + l.basis[i] + "," + l.basis[j] + ")");
        ++bad;
      }
    }
  if (bad == 0) report.pass("antisymmetry");
  bad = 0;
  auto e = [&](std::size_t i) { return unit_vector(l.field, d, i); };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Vector x = e(i), y = e(j), z = e(k);
        Vector s = add(add(l.bracket(x, l.bracket(y, z)), l.bracket(y, l.bracket(z, x))), l.bracket(z, l.bracket(x, y)));
        if (!is_zero(s)) {
          report.fail("Jacobi", "(" + l.basis[i] + "," + l.basis[j] + "," + l.basis[k] + ")");
          ++bad;
        }
      }
  if (bad == 0) report.pass("Jacobi");
  return report;
}

namespace lie_algebras {

LieAlgebra abelian(std::size_t d, Field field) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back(d <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1));
  return make_lie_algebra(field, std::move(names), {});
}

LieAlgebra heisenberg(Field field) {
  return make_lie_algebra(field, {"x", "y", "z"}, {{0, 1, {{2, Scalar(field, 1L)}}}});
}

LieAlgebra sl2(Field field) {
  return make_lie_algebra(field, {"e", "f", "h"},
                          {{0, 1, {{2, Scalar(field, 1L)}}}, {0, 2, {{0, Scalar(field, -2L)}}}, {1, 2, {{1, Scalar(field, 2L)}}}});
}

}  // namespace lie_algebras

std::size_t TruncatedEnveloping::index_of(const std::vector<unsigned>& exponents) const {
  auto it = lookup.find(exponents);
  if (it == lookup.end()) throw Error(ErrorCode::OutOfTruncation, "monomial beyond the truncation");
  return it->second;
}

std::string monomial_name(const LieAlgebra& l, const std::vector<unsigned>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += l.basis[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

TruncatedEnveloping enveloping_truncated(const LieAlgebra& l, unsigned order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "truncation order must be at least 1");
  if (!verify_lie(l).passed()) throw Error(ErrorCode::InvalidArgument, "bracket is not a Lie bracket");
  TruncatedEnveloping u{l, order, {}, {}, {}};
  for (unsigned n = 0; n <= order; ++n) exponents_of_degree(l.dim, n, u.monomials);
  const std::size_t n = u.monomials.size();
  for (std::size_t i = 0; i < n; ++i) u.lookup[u.monomials[i]] = i;
  FinBialgebra& a = u.algebra;
  const Field f = l.field;
  a.field = f;
  a.dim = n;
  a.filtration.emplace();
  for (const auto& m : u.monomials) {
    a.basis.push_back(monomial_name(l, m));
    a.filtration->push_back(total(m));
  }
  Rewriter rw(u);
  std::vector<SparseVec> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (total(u.monomials[i]) + total(u.monomials[j]) > order) continue;
      Word w = word_of(u.monomials[i]);
      Word right = word_of(u.monomials[j]);
      w.insert(w.end(), right.begin(), right.end());
      mult[i * n + j] = to_sparse(rw.normal_form(w));
    }
  a.mult = std::move(mult);
  a.unit = unit_vector(f, n, 0);
  std::vector<SparseVec> comult(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& e = u.monomials[k];
    LinComb acc;
    std::vector<unsigned> b(l.dim, 0);
    while (true) {
      Scalar c(f, 1L);
      std::vector<unsigned> rest(l.dim);
      for (std::size_t i = 0; i < l.dim; ++i) {
        c *= binomial(f, e[i], b[i]);
        rest[i] = e[i] - b[i];
      }
      accumulate(acc, u.index_of(b) * n + u.index_of(rest), c);
      std::size_t i = 0;
      while (i < l.dim && b[i] == e[i]) b[i++] = 0;
      if (i == l.dim) break;
      ++b[i];
    }
    comult[k] = to_sparse(acc);
  }
  a.comult = std::move(comult);
  a.counit = unit_vector(f, n, 0);
  return u;
}

const std::vector<SparseVec>& coproduct_on_U(const TruncatedEnveloping& u) { return *u.algebra.comult; }

GradedCheck graded_check(const TruncatedEnveloping& u) {
  require_char0(u.lie.field);
  const Field f = u.lie.field;
  const FinBialgebra& a = u.algebra;
  const std::size_t d = u.lie.dim, n = a.dim;
  GradedCheck out{{1}, Report("graded pieces")};
  std::vector<Vector> filt{*a.unit};
  std::size_t prev = 1;
  for (unsigned deg = 1; deg <= u.order; ++deg) {
    std::vector<Vector> next = filt;
    for (const auto& v : filt)
      for (std::size_t i = 0; i < d; ++i) next.push_back(a.multiply(v, unit_vector(f, n, u.generator(i))));
    filt = span_basis(f, next, n);
    out.dims.push_back(filt.size() - prev);
    prev = filt.size();
  }
  for (unsigned deg = 0; deg <= u.order; ++deg) {
    mpz_class expected = deg == 0 ? 1 : 0;
    if (d > 0) mpz_bin_uiui(expected.get_mpz_t(), d + deg - 1, deg);
    out.report.expect(out.dims[deg] == expected.get_ui(), "dim U_" + std::to_string(deg) + "/U_" + std::to_string(deg - 1) +
                                                               " = C(d+n-1,n)",
                      std::to_string(out.dims[deg]) + " vs " + expected.get_str());
  }
  // symmetrization S^n L -> gr_n in PBW coordinates
  for (unsigned deg = 1; deg <= u.order; ++deg) {
    std::vector<std::vector<unsigned>> top;
    exponents_of_degree(d, deg, top);
    const Scalar nfact = factorial(f, deg);
    bool identity = true, bookkeeping = true;
    for (std::size_t col = 0; col < top.size(); ++col) {
      Word w = word_of(top[col]);
      Vector distinct_sum = zero_vector(f, n);
      do {
        Vector v = *a.unit;
        for (auto letter : w) v = a.multiply(v, unit_vector(f, n, u.generator(letter)));
        distinct_sum = add(distinct_sum, v);
      } while (std::next_permutation(w.begin(), w.end()));
      Scalar stabiliser(f, 1L);
      for (auto e : top[col]) stabiliser *= factorial(f, e);
      Vector full_sum = scale(distinct_sum, stabiliser);  // sum over all of S_n
      Vector sym = scale(full_sum, nfact.inverse());
      for (std::size_t row = 0; row < top.size(); ++row) {
        const std::size_t idx = u.index_of(top[row]);
        Scalar expect(f, row == col ? 1L : 0L);
        identity = identity && sym[idx] == expect;
        bookkeeping = bookkeeping && full_sum[idx] == expect * nfact;
      }
    }
    out.report.expect(identity, "symmetrization S^" + std::to_string(deg) + "L -> gr_" + std::to_string(deg) + " iso",
                      "leading terms differ from the PBW monomials");
    out.report.expect(bookkeeping, "sum over S_" + std::to_string(deg) + " = " + nfact.to_string() + " * PBW monomial",
                      "n! factor mismatch");
  }
  return out;
}

PrimitiveSpace primitives_of_U(const TruncatedEnveloping& u) {
  const Field f = u.lie.field;
  PrimitiveSpace out{primitives(u.algebra), Report("primitive elements")};
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < u.lie.dim; ++i) gens.push_back(unit_vector(f, u.algebra.dim, u.generator(i)));
  std::vector<Vector> both = out.basis;
  both.insert(both.end(), gens.begin(), gens.end());
  const std::size_t r = span_dimension(f, both, u.algebra.dim);
  out.report.expect(out.basis.size() == u.lie.dim && r == u.lie.dim, "primitives = L",
                    "primitive space has dimension " + std::to_string(out.basis.size()));
  return out;
}

LieFunctor lie_morphism_functor(const LieAlgebra& source, const LieAlgebra& target, const Matrix& f, unsigned order) {
  if (!(source.field == target.field) || !(f.field() == source.field))
    throw Error(ErrorCode::FieldMismatch, "Lie algebras over different fields");
  if (f.rows() != target.dim || f.cols() != source.dim) throw Error(ErrorCode::DimensionMismatch, "map has the wrong shape");
  LieFunctor out;
  out.report = Report("Lie functor");
  const Field fld = source.field;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < source.dim; ++i)
    for (std::size_t j = i + 1; j < source.dim; ++j) {
      Vector lhs = f * to_dense(source.bracket(i, j), fld, source.dim);
      Vector rhs = target.bracket(f.column(i), f.column(j));
      if (!(lhs == rhs)) {
        out.report.fail("f[x,y] = [fx,fy]", "(" + source.basis[i] + "," + source.basis[j] + ")");
        ++bad;
      }
    }
  if (bad > 0) return out;
  out.report.pass("f[x,y] = [fx,fy]");
  out.lie_morphism = true;
  TruncatedEnveloping us = enveloping_truncated(source, order), ut = enveloping_truncated(target, order);
  const std::size_t nt = ut.algebra.dim;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < source.dim; ++i) {
    Vector v = zero_vector(fld, nt);
    for (std::size_t r = 0; r < target.dim; ++r) v[ut.generator(r)] = f(r, i);
    images.push_back(std::move(v));
  }
  std::vector<Vector> columns;
  for (const auto& m : us.monomials) {
    Vector v = *ut.algebra.unit;
    for (auto letter : word_of(m)) v = ut.algebra.multiply(v, images[letter]);
    columns.push_back(std::move(v));
  }
  out.extension = Matrix::from_columns(fld, columns, nt);
  out.report.merge(check_morphism(us.algebra, ut.algebra, out.extension, MorphismKind::Bialgebra), "U(f): ");
  return out;
}

DividedPowers divided_power_bialgebra(unsigned order, Field field) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "truncation order must be at least 1");
  const std::size_t n = order + 1;
  FinBialgebra a;
  a.field = field;
  a.dim = n;
  a.filtration.emplace();
  for (unsigned i = 0; i <= order; ++i) {
    a.basis.push_back("w" + std::to_string(i));
    a.filtration->push_back(i);
  }
  std::vector<SparseVec> mult(n * n), comult(n);
  for (unsigned i = 0; i <= order; ++i)
    for (unsigned j = 0; i + j <= order; ++j) {
      Scalar c = binomial(field, i + j, i);
      if (!c.is_zero()) mult[i * n + j] = {{i + j, c}};
    }
  for (unsigned k = 0; k <= order; ++k)
    for (unsigned i = 0; i <= k; ++i) comult[k].emplace_back(i * n + (k - i), Scalar(field, 1L));
  a.mult = std::move(mult);
  a.comult = std::move(comult);
  a.unit = unit_vector(field, n, 0);
  a.counit = unit_vector(field, n, 0);
  Matrix s(field, n, n);
  for (unsigned i = 0; i <= order; ++i) s(i, i) = Scalar(field, i % 2 ? -1L : 1L);
  a.antipode = s;

  DividedPowers out{a, Matrix(field, n, n), Report("divided powers")};
  out.report.merge(verify_bialgebra(a));
  Vector power = *a.unit;
  bool powers_ok = true;
  for (unsigned k = 1; k <= order; ++k) {
    power = a.multiply(power, unit_vector(field, n, 1));
    if (!(power == scale(unit_vector(field, n, k), factorial(field, k)))) {
      out.report.fail("w1^n = n! w_n", "n = " + std::to_string(k));
      powers_ok = false;
    }
  }
  if (powers_ok) out.report.pass("w1^n = n! w_n", "n <= " + std::to_string(order));
  TruncatedEnveloping u = enveloping_truncated(lie_algebras::abelian(1, field), order);
  for (unsigned k = 0; k <= order; ++k) out.comparison(k, u.index_of({k})) = factorial(field, k);
  out.report.merge(check_morphism(u.algebra, a, out.comparison, MorphismKind::Bialgebra), "x^n -> n! w_n: ");
  out.report.expect(inverse(out.comparison).has_value(), "x^n -> n! w_n degree-wise iso",
                    "some n! vanishes in " + field.describe());
  return out;
}

GroupPreset parse_group_preset(const std::string& name) {
  if (name == "ga" || name == "Ga" || name == "additive") return GroupPreset::Additive;
  if (name == "gm" || name == "Gm" || name == "multiplicative") return GroupPreset::Multiplicative;
  if (name == "u2" || name == "U2" || name == "unipotent") return GroupPreset::UpperUnipotent;
  throw Error(ErrorCode::UnsupportedPreset, "unknown group preset '" + name + "'");
}

std::string preset_name(GroupPreset p) {
  switch (p) {
    case GroupPreset::Additive:
      return "Ga";
    case GroupPreset::Multiplicative:
      return "Gm";
    case GroupPreset::UpperUnipotent:
      return "U2";
  }
  return "?";
}

namespace {

// Polynomials in two commuting variables a (left factor) and b (right
// factor), truncated to each degree at most `top`.
using Bivariate = std::map<std::pair<unsigned, unsigned>, Scalar>;

Bivariate bimul(const Bivariate& x, const Bivariate& y, unsigned top) {
  Bivariate out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) {
      std::pair<unsigned, unsigned> e{ex.first + ey.first, ex.second + ey.second};
      if (e.first > top || e.second > top) continue;
      auto [it, fresh] = out.try_emplace(e, cx.field());
      it->second += cx * cy;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Univariate truncated power series in u.
Vector series_mul(const Vector& x, const Vector& y) {
  Vector out(x.size(), Scalar(x.front().field()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; i + j < x.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

}  // namespace

Distributions dist_at_identity(GroupPreset preset, unsigned order, Field field) {
  require_char0(field);
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "truncation order must be at least 1");
  const Scalar one(field, 1L);
  const std::size_t n = order + 1;
  // group law Delta(u) = P(u (x) 1, 1 (x) u) and the antipode S(u) as a series
  Bivariate law;
  Vector inverse_series(n, Scalar(field));
  switch (preset) {
    case GroupPreset::Additive:
      law = {{{1, 0}, one}, {{0, 1}, one}};
      inverse_series[1] = -one;
      break;
    case GroupPreset::Multiplicative:
      // t = 1 + u, Delta t = t (x) t, t^-1 - 1 = sum_{i >= 1} (-u)^i
      law = {{{1, 0}, one}, {{0, 1}, one}, {{1, 1}, one}};
      for (std::size_t i = 1; i < n; ++i) inverse_series[i] = Scalar(field, i % 2 ? -1L : 1L);
      break;
    case GroupPreset::UpperUnipotent: {
      // coordinate u = x_12 on [[1, u], [0, 1]]; Delta x_12 = sum_l x_1l (x) x_l2
      Bivariate x11 = {{{0, 0}, one}}, x22 = {{{0, 0}, one}};
      Bivariate left12 = {{{1, 0}, one}}, right12 = {{{0, 1}, one}};
      Bivariate sum = bimul(x11, right12, order);
      for (const auto& [e, c] : bimul(left12, x22, order)) {
        auto [it, fresh] = sum.try_emplace(e, field);
        it->second += c;
      }
      law = sum;
      // [[1, u], [0, 1]]^-1 = [[1, -u], [0, 1]]
      inverse_series[1] = -one;
      break;
    }
  }
  std::vector<Bivariate> powers{{{{0, 0}, one}}};
  for (unsigned k = 1; k <= order; ++k) powers.push_back(bimul(powers.back(), law, order));

  FinBialgebra a;
  a.field = field;
  a.dim = n;
  a.filtration.emplace();
  for (unsigned i = 0; i <= order; ++i) {
    a.basis.push_back("d" + std::to_string(i));
    a.filtration->push_back(i);
  }
  std::vector<SparseVec> mult(n * n), comult(n);
  for (unsigned i = 0; i <= order; ++i)
    for (unsigned j = 0; i + j <= order; ++j) {
      LinComb acc;
      for (unsigned k = 0; k <= order; ++k) {
        auto it = powers[k].find({i, j});
        if (it != powers[k].end()) accumulate(acc, k, it->second);
      }
      mult[i * n + j] = to_sparse(acc);
    }
  for (unsigned k = 0; k <= order; ++k)
    for (unsigned i = 0; i <= k; ++i) comult[k].emplace_back(i * n + (k - i), one);
  a.mult = std::move(mult);
  a.comult = std::move(comult);
  a.unit = unit_vector(field, n, 0);
  a.counit = unit_vector(field, n, 0);
  // S*(d_k) = sum_m <d_k, S(u)^m> d_m
  Matrix s(field, n, n);
  Vector power = unit_vector(field, n, 0);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) s(m, k) = power[k];
    power = series_mul(power, inverse_series);
  }
  a.antipode = s;

  Distributions out{a, Matrix(field, n, n), Report("Dist " + preset_name(preset))};
  out.report.merge(verify_bialgebra(a));
  out.report.merge(check_hopf(a), "antipode: ");
  LinComb d1 = {{n, one}, {1, one}};  // d1 (x) d0 + d0 (x) d1
  out.report.expect(a.coproduct(1) == to_sparse(d1), "d1 primitive", "tangent vector is not primitive");
  TruncatedEnveloping u = enveloping_truncated(lie_algebras::abelian(1, field), order);
  Vector v = *a.unit;
  for (unsigned k = 0; k <= order; ++k) {
    for (std::size_t r = 0; r < n; ++r) out.comparison(r, u.index_of({k})) = v[r];
    v = a.multiply(v, unit_vector(field, n, 1));
  }
  out.report.merge(check_morphism(u.algebra, a, out.comparison, MorphismKind::Bialgebra), "U(T_e) -> Dist: ");
  out.report.expect(inverse(out.comparison).has_value(), "U(T_e) -> Dist degree-wise iso", "comparison is singular");
  return out;
}

AdicGraded iadic_graded(AdicPreset preset, unsigned order, std::size_t variables, Field field) {
  if (preset == AdicPreset::Multiplicative) variables = 1;
  if (variables == 0) throw Error(ErrorCode::InvalidArgument, "need at least one coordinate");
  const unsigned top = order + 1;
  std::vector<std::vector<unsigned>> monos;
  for (unsigned d = 0; d <= top; ++d) exponents_of_degree(variables, d, monos);
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  const std::size_t dim = monos.size();
  auto multiply = [&](const Vector& x, const Vector& y) {
    Vector out = zero_vector(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (y[j].is_zero() || total(monos[i]) + total(monos[j]) > top) continue;
        std::vector<unsigned> e = monos[i];
        for (std::size_t v = 0; v < variables; ++v) e[v] += monos[j][v];
        out[index.at(e)] += x[i] * y[j];
      }
    }
    return out;
  };
  std::vector<Vector> gens;
  for (std::size_t v = 0; v < variables; ++v) {
    std::vector<unsigned> e(variables, 0);
    e[v] = 1;
    gens.push_back(unit_vector(field, dim, index.at(e)));
  }
  if (preset == AdicPreset::Multiplicative) {
    // t^-1 - 1 in the chart t = 1 + u
    Vector g = zero_vector(field, dim);
    for (unsigned i = 1; i <= top; ++i) g[index.at({i})] = Scalar(field, i % 2 ? -1L : 1L);
    gens.push_back(std::move(g));
  }
  std::vector<Vector> ideal;
  for (std::size_t i = 0; i < dim; ++i)
    for (const auto& g : gens) ideal.push_back(multiply(unit_vector(field, dim, i), g));
  ideal = span_basis(field, ideal, dim);
  AdicGraded out{{}, Report(preset == AdicPreset::Multiplicative ? "I-adic, Gm at 1" : "I-adic, polynomial at 0")};
  std::size_t prev = dim;
  for (unsigned n = 0; n <= order; ++n) {
    out.dims.push_back(prev - ideal.size());
    prev = ideal.size();
    std::vector<Vector> next;
    for (const auto& v : ideal)
      for (const auto& g : gens) next.push_back(multiply(v, g));
    ideal = span_basis(field, next, dim);
  }
  for (unsigned n = 0; n <= order; ++n) {
    mpz_class expected;
    mpz_bin_uiui(expected.get_mpz_t(), variables + n - 1, n);
    out.report.expect(out.dims[n] == expected.get_ui(), "dim I^" + std::to_string(n) + "/I^" + std::to_string(n + 1) + " = dim S^n(I/I^2)",
                      std::to_string(out.dims[n]) + " vs " + expected.get_str());
  }
  return out;
}

}  // namespace hopfdual
