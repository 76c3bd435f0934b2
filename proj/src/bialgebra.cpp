#include "hopfdual/bialgebra.hpp"

#include <algorithm>

#include "hopfdual/error.hpp"

namespace hopfdual {

void accumulate(LinComb& acc, std::size_t index, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) acc.erase(it);
  }
}

SparseVec to_sparse(const LinComb& acc) {
  SparseVec out;
  out.reserve(acc.size());
  for (const auto& [i, c] : acc)
    if (!c.is_zero()) out.emplace_back(i, c);
  return out;
}

SparseVec to_sparse(const Vector& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) out.emplace_back(i, dense[i]);
  return out;
}

Vector to_dense(const SparseVec& v, Field field, std::size_t dim) {
  Vector out = zero_vector(field, dim);
  for (const auto& [i, c] : v) out.at(i) = c;
  return out;
}

unsigned FinBialgebra::max_degree() const {
  if (!filtration || filtration->empty()) return 0;
  return *std::max_element(filtration->begin(), filtration->end());
}

bool FinBialgebra::product_defined(std::size_t i, std::size_t j) const {
  return !filtration || degree(i) + degree(j) <= max_degree();
}

Vector FinBialgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out = zero_vector(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, c] : product(i, j)) out[k] += ab * c;
    }
  }
  return out;
}

Vector FinBialgebra::comultiply(const Vector& a) const {
  Vector out = zero_vector(field, dim * dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (a[k].is_zero()) continue;
    for (const auto& [ij, c] : coproduct(k)) out[ij] += a[k] * c;
  }
  return out;
}

Scalar FinBialgebra::apply_counit(const Vector& a) const {
  Scalar out(field);
  for (std::size_t k = 0; k < dim; ++k)
    if (!a[k].is_zero()) out += a[k] * (*counit)[k];
  return out;
}

namespace {

void shape(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

void check_sparse(const SparseVec& v, std::size_t bound, const Field& field, const std::string& what) {
  for (const auto& [i, c] : v) {
    shape(i < bound, what + ": index out of range");
    if (!(c.field() == field)) throw Error(ErrorCode::FieldMismatch, what);
  }
}

void check_dense(const Vector& v, std::size_t n, const Field& field, const std::string& what) {
  shape(v.size() == n, what + ": length");
  for (const auto& c : v)
    if (!(c.field() == field)) throw Error(ErrorCode::FieldMismatch, what);
}

std::string triple_name(const FinBialgebra& a, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + a.basis[i] + "," + a.basis[j] + "," + a.basis[k] + ")";
}

std::string pair_name(const FinBialgebra& a, std::size_t i, std::size_t j) {
  return "(" + a.basis[i] + "," + a.basis[j] + ")";
}

// Product of sparse elements of A.
LinComb product_of(const FinBialgebra& a, const LinComb& x, const LinComb& y) {
  LinComb out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      Scalar c = ci * cj;
      for (const auto& [k, ck] : a.product(i, j)) accumulate(out, k, c * ck);
    }
  return out;
}

LinComb as_comb(const SparseVec& v) { return LinComb(v.begin(), v.end()); }

LinComb basis_comb(const FinBialgebra& a, std::size_t i) {
  LinComb out;
  out.emplace(i, Scalar(a.field, 1L));
  return out;
}

LinComb unit_comb(const FinBialgebra& a) { return as_comb(to_sparse(*a.unit)); }

// Product in A (x) A of two elements with flattened pair indices.
LinComb tensor_product_of(const FinBialgebra& a, const LinComb& x, const LinComb& y) {
  const std::size_t n = a.dim;
  LinComb out;
  for (const auto& [p, cp] : x) {
    std::size_t p1 = p / n, p2 = p % n;
    for (const auto& [q, cq] : y) {
      std::size_t q1 = q / n, q2 = q % n;
      Scalar c = cp * cq;
      for (const auto& [l, cl] : a.product(p1, q1))
        for (const auto& [r, cr] : a.product(p2, q2)) accumulate(out, l * n + r, c * cl * cr);
    }
  }
  return out;
}

LinComb coproduct_of(const FinBialgebra& a, const LinComb& x) {
  LinComb out;
  for (const auto& [k, ck] : x)
    for (const auto& [ij, c] : a.coproduct(k)) accumulate(out, ij, ck * c);
  return out;
}

Scalar counit_of(const FinBialgebra& a, const LinComb& x) {
  Scalar out(a.field);
  for (const auto& [k, c] : x) out += c * (*a.counit)[k];
  return out;
}

void require_algebra(const FinBialgebra& a) {
  if (!a.has_algebra()) throw Error(ErrorCode::InvalidArgument, "multiplication and unit are required");
}

void require_coalgebra(const FinBialgebra& a) {
  if (!a.has_coalgebra()) throw Error(ErrorCode::InvalidArgument, "comultiplication and counit are required");
}

}  // namespace

void validate_shapes(const FinBialgebra& a) {
  const std::size_t n = a.dim;
  shape(a.basis.size() == n, "basis names");
  if (a.filtration) shape(a.filtration->size() == n, "filtration length");
  if (a.mult) {
    shape(a.mult->size() == n * n, "mult tensor");
    for (const auto& row : *a.mult) check_sparse(row, n, a.field, "mult");
  }
  if (a.unit) check_dense(*a.unit, n, a.field, "unit");
  if (a.comult) {
    shape(a.comult->size() == n, "comult tensor");
    for (const auto& row : *a.comult) check_sparse(row, n * n, a.field, "comult");
  }
  if (a.counit) check_dense(*a.counit, n, a.field, "counit");
  if (a.antipode) {
    shape(a.antipode->rows() == n && a.antipode->cols() == n, "antipode shape");
    if (!(a.antipode->field() == a.field)) throw Error(ErrorCode::FieldMismatch, "antipode");
  }
}

Report verify_algebra(const FinBialgebra& a) {
  validate_shapes(a);
  require_algebra(a);
  Report report("algebra axioms");
  const std::size_t n = a.dim;
  std::size_t checked = 0, failed = 0;
  const unsigned top = a.max_degree();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (a.filtration && a.degree(i) + a.degree(j) + a.degree(k) > top) continue;
        ++checked;
        LinComb left = product_of(a, as_comb(a.product(i, j)), basis_comb(a, k));
        LinComb right = product_of(a, basis_comb(a, i), as_comb(a.product(j, k)));
        if (left != right) {
          ++failed;
          report.fail("associativity", triple_name(a, i, j, k) + " associativity");
        }
      }
  if (failed == 0) report.pass("associativity", std::to_string(checked) + " instances");
  LinComb one = unit_comb(a);
  std::size_t unit_failures = 0;
  for (std::size_t i = 0; i < n; ++i) {
    LinComb ei = basis_comb(a, i);
    if (product_of(a, one, ei) != ei) {
      ++unit_failures;
      report.fail("left unit", "1*" + a.basis[i] + " != " + a.basis[i]);
    }
    if (product_of(a, ei, one) != ei) {
      ++unit_failures;
      report.fail("right unit", a.basis[i] + "*1 != " + a.basis[i]);
    }
  }
  if (unit_failures == 0) report.pass("unit laws", std::to_string(n) + " basis elements");
  return report;
}

Report verify_coalgebra(const FinBialgebra& a) {
  validate_shapes(a);
  require_coalgebra(a);
  Report report("coalgebra axioms");
  const std::size_t n = a.dim;
  std::size_t failed = 0;
  for (std::size_t k = 0; k < n; ++k) {
    LinComb left, right;  // flattened triple (x, y, z) -> (x * n + y) * n + z
    for (const auto& [ij, c] : a.coproduct(k)) {
      std::size_t i = ij / n, j = ij % n;
      for (const auto& [xy, c2] : a.coproduct(i)) accumulate(left, xy * n + j, c * c2);
      for (const auto& [yz, c2] : a.coproduct(j)) accumulate(right, i * n * n + yz, c * c2);
    }
    if (left != right) {
      ++failed;
      report.fail("coassociativity", "at " + a.basis[k]);
    }
  }
  if (failed == 0) report.pass("coassociativity", std::to_string(n) + " basis elements");
  std::size_t counit_failures = 0;
  for (std::size_t k = 0; k < n; ++k) {
    LinComb left, right;
    for (const auto& [ij, c] : a.coproduct(k)) {
      std::size_t i = ij / n, j = ij % n;
      accumulate(left, j, c * (*a.counit)[i]);
      accumulate(right, i, c * (*a.counit)[j]);
    }
    LinComb ek = basis_comb(a, k);
    if (left != ek) {
      ++counit_failures;
      report.fail("left counit", "(e(x)id)Delta(" + a.basis[k] + ") != " + a.basis[k]);
    }
    if (right != ek) {
      ++counit_failures;
      report.fail("right counit", "(id(x)e)Delta(" + a.basis[k] + ") != " + a.basis[k]);
    }
  }
  if (counit_failures == 0) report.pass("counit laws", std::to_string(n) + " basis elements");
  return report;
}

Report verify_bialgebra(const FinBialgebra& a) {
  Report report("bialgebra axioms");
  report.merge(verify_algebra(a));
  report.merge(verify_coalgebra(a));
  const std::size_t n = a.dim;
  std::size_t checked = 0, delta_failures = 0, eps_failures = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!a.product_defined(i, j)) continue;
      ++checked;
      LinComb prod = as_comb(a.product(i, j));
      LinComb left = coproduct_of(a, prod);
      LinComb right = tensor_product_of(a, as_comb(a.coproduct(i)), as_comb(a.coproduct(j)));
      if (left != right) {
        ++delta_failures;
        report.fail("comultiplication is multiplicative", "Delta" + pair_name(a, i, j) + " product");
      }
      if (counit_of(a, prod) != (*a.counit)[i] * (*a.counit)[j]) {
        ++eps_failures;
        report.fail("counit is multiplicative", "e" + pair_name(a, i, j) + " product");
      }
    }
  if (delta_failures == 0) report.pass("comultiplication is multiplicative", std::to_string(checked) + " pairs");
  if (eps_failures == 0) report.pass("counit is multiplicative", std::to_string(checked) + " pairs");
  LinComb one = unit_comb(a);
  LinComb one_one;
  for (const auto& [i, ci] : one)
    for (const auto& [j, cj] : one) accumulate(one_one, i * n + j, ci * cj);
  report.expect(coproduct_of(a, one) == one_one, "Delta(1) = 1(x)1", "Delta(1) differs from 1(x)1");
  report.expect(counit_of(a, one).is_one(), "e(1) = 1", "e(1) = " + counit_of(a, one).to_string());
  return report;
}

Report check_hopf(const FinBialgebra& a) {
  validate_shapes(a);
  if (!a.has_antipode()) throw Error(ErrorCode::AntipodeAbsent, "no antipode supplied");
  require_algebra(a);
  require_coalgebra(a);
  Report report("antipode axioms");
  const std::size_t n = a.dim;
  const Matrix& s = *a.antipode;
  LinComb one = unit_comb(a);
  std::size_t failures = 0;
  for (std::size_t k = 0; k < n; ++k) {
    LinComb left, right;
    for (const auto& [ij, c] : a.coproduct(k)) {
      std::size_t i = ij / n, j = ij % n;
      for (std::size_t r = 0; r < n; ++r) {
        if (!s(r, i).is_zero())
          for (const auto& [t, ct] : a.product(r, j)) accumulate(left, t, c * s(r, i) * ct);
        if (!s(r, j).is_zero())
          for (const auto& [t, ct] : a.product(i, r)) accumulate(right, t, c * s(r, j) * ct);
      }
    }
    LinComb expected;
    for (const auto& [t, ct] : one) accumulate(expected, t, ct * (*a.counit)[k]);
    if (left != expected) {
      ++failures;
      report.fail("m(S(x)id)Delta = ue", "at " + a.basis[k]);
    }
    if (right != expected) {
      ++failures;
      report.fail("m(id(x)S)Delta = ue", "at " + a.basis[k]);
    }
  }
  if (failures == 0) report.pass("antipode identities", std::to_string(n) + " basis elements");
  return report;
}

std::optional<Matrix> find_antipode(const FinBialgebra& a) {
  validate_shapes(a);
  require_algebra(a);
  require_coalgebra(a);
  const std::size_t n = a.dim;
  // Unknown S(r, i) at column r * n + i; rows (side, k, t).
  Matrix system(a.field, 2 * n * n, n * n);
  Vector rhs = zero_vector(a.field, 2 * n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [ij, c] : a.coproduct(k)) {
      std::size_t i = ij / n, j = ij % n;
      for (std::size_t r = 0; r < n; ++r) {
        for (const auto& [t, ct] : a.product(r, j)) system(k * n + t, r * n + i) += c * ct;
        for (const auto& [t, ct] : a.product(i, r)) system(n * n + k * n + t, r * n + j) += c * ct;
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      rhs[k * n + t] = (*a.counit)[k] * (*a.unit)[t];
      rhs[n * n + k * n + t] = rhs[k * n + t];
    }
  }
  auto x = solve(system, rhs);
  if (!x) return std::nullopt;
  Matrix s(a.field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < n; ++i) s(r, i) = (*x)[r * n + i];
  return s;
}

bool is_commutative(const FinBialgebra& a) {
  require_algebra(a);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      if (a.product(i, j) != a.product(j, i)) return false;
  return true;
}

bool is_cocommutative(const FinBialgebra& a) {
  require_coalgebra(a);
  const std::size_t n = a.dim;
  for (std::size_t k = 0; k < n; ++k) {
    LinComb flipped;
    for (const auto& [ij, c] : a.coproduct(k)) accumulate(flipped, (ij % n) * n + ij / n, c);
    if (to_sparse(flipped) != a.coproduct(k)) return false;
  }
  return true;
}

std::string dual_name(const std::string& name) {
  if (!name.empty() && name.back() == '*') return name.substr(0, name.size() - 1);
  return name + "*";
}

FinBialgebra dualize(const FinBialgebra& a) {
  validate_shapes(a);
  const std::size_t n = a.dim;
  FinBialgebra d;
  d.field = a.field;
  d.dim = n;
  for (const auto& name : a.basis) d.basis.push_back(dual_name(name));
  d.filtration = a.filtration;
  if (a.comult) {
    std::vector<LinComb> mult(n * n);
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [ij, c] : (*a.comult)[k]) accumulate(mult[ij], k, c);
    d.mult.emplace();
    for (const auto& m : mult) d.mult->push_back(to_sparse(m));
  }
  if (a.mult) {
    std::vector<LinComb> comult(n);
    for (std::size_t ij = 0; ij < n * n; ++ij)
      for (const auto& [k, c] : (*a.mult)[ij]) accumulate(comult[k], ij, c);
    d.comult.emplace();
    for (const auto& m : comult) d.comult->push_back(to_sparse(m));
  }
  d.unit = a.counit;
  d.counit = a.unit;
  if (a.antipode) d.antipode = a.antipode->transpose();
  return d;
}

FinBialgebra unit_bialgebra(Field field) {
  FinBialgebra a;
  a.field = field;
  a.dim = 1;
  a.basis = {"1"};
  Scalar one(field, 1L);
  a.mult = std::vector<SparseVec>{SparseVec{{0, one}}};
  a.unit = Vector{one};
  a.comult = std::vector<SparseVec>{SparseVec{{0, one}}};
  a.counit = Vector{one};
  a.antipode = Matrix::identity(field, 1);
  return a;
}

FinBialgebra tensor_bialgebra(const FinBialgebra& a, const FinBialgebra& b) {
  validate_shapes(a);
  validate_shapes(b);
  if (!(a.field == b.field)) throw Error(ErrorCode::FieldMismatch, "tensor_bialgebra");
  const std::size_t na = a.dim, nb = b.dim, n = na * nb;
  FinBialgebra t;
  t.field = a.field;
  t.dim = n;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) t.basis.push_back(a.basis[i] + "(x)" + b.basis[j]);
  if (a.filtration && b.filtration) {
    t.filtration.emplace();
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) t.filtration->push_back(a.degree(i) + b.degree(j));
  }
  if (a.mult && b.mult) {
    t.mult.emplace(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        LinComb acc;
        for (const auto& [k, ck] : a.product(x / nb, y / nb))
          for (const auto& [l, cl] : b.product(x % nb, y % nb)) accumulate(acc, k * nb + l, ck * cl);
        (*t.mult)[x * n + y] = to_sparse(acc);
      }
  }
  if (a.unit && b.unit) t.unit = kron(*a.unit, *b.unit);
  if (a.comult && b.comult) {
    t.comult.emplace(n);
    for (std::size_t x = 0; x < n; ++x) {
      LinComb acc;
      for (const auto& [ij, ci] : a.coproduct(x / nb))
        for (const auto& [kl, ck] : b.coproduct(x % nb)) {
          std::size_t left = (ij / na) * nb + kl / nb;
          std::size_t right = (ij % na) * nb + kl % nb;
          accumulate(acc, left * n + right, ci * ck);
        }
      (*t.comult)[x] = to_sparse(acc);
    }
  }
  if (a.counit && b.counit) t.counit = kron(*a.counit, *b.counit);
  if (a.antipode && b.antipode) t.antipode = kron(*a.antipode, *b.antipode);
  return t;
}

Report compare_structures(const FinBialgebra& a, const FinBialgebra& b) {
  Report report("structure constants");
  if (a.dim != b.dim || !(a.field == b.field)) {
    report.fail("shape", "dim " + std::to_string(a.dim) + " over " + a.field.describe() + " vs dim " +
                             std::to_string(b.dim) + " over " + b.field.describe());
    return report;
  }
  const std::size_t n = a.dim;
  auto compare_table = [&](const std::optional<std::vector<SparseVec>>& x,
                           const std::optional<std::vector<SparseVec>>& y, const std::string& what, bool pairs) {
    if (x.has_value() != y.has_value()) {
      report.fail(what, "present in only one structure");
      return;
    }
    if (!x) return;
    std::size_t failures = 0;
    for (std::size_t r = 0; r < x->size(); ++r)
      if ((*x)[r] != (*y)[r]) {
        ++failures;
        std::string at = pairs ? pair_name(a, r / n, r % n) : a.basis[r];
        report.fail(what, "differs at " + at);
      }
    if (failures == 0) report.pass(what);
  };
  auto compare_vec = [&](const std::optional<Vector>& x, const std::optional<Vector>& y, const std::string& what) {
    if (x.has_value() != y.has_value())
      report.fail(what, "present in only one structure");
    else if (x)
      report.expect(*x == *y, what, "vectors differ");
  };
  compare_table(a.mult, b.mult, "mult", true);
  compare_vec(a.unit, b.unit, "unit");
  compare_table(a.comult, b.comult, "comult", false);
  compare_vec(a.counit, b.counit, "counit");
  if (a.antipode.has_value() != b.antipode.has_value())
    report.fail("antipode", "present in only one structure");
  else if (a.antipode)
    report.expect(*a.antipode == *b.antipode, "antipode", "matrices differ");
  return report;
}

Report check_morphism(const FinBialgebra& source, const FinBialgebra& target, const Matrix& map,
                      MorphismKind kind) {
  validate_shapes(source);
  validate_shapes(target);
  if (map.rows() != target.dim || map.cols() != source.dim)
    throw Error(ErrorCode::DimensionMismatch, "morphism matrix shape");
  Report report("morphism");
  const std::size_t ns = source.dim, nt = target.dim;
  auto image = [&](const LinComb& x) {
    LinComb out;
    for (const auto& [k, c] : x)
      for (std::size_t r = 0; r < nt; ++r)
        if (!map(r, k).is_zero()) accumulate(out, r, c * map(r, k));
    return out;
  };
  if (kind != MorphismKind::Coalgebra) {
    require_algebra(source);
    require_algebra(target);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < ns; ++i)
      for (std::size_t j = 0; j < ns; ++j) {
        if (!source.product_defined(i, j)) continue;
        LinComb left = image(as_comb(source.product(i, j)));
        LinComb right = product_of(target, image(basis_comb(source, i)), image(basis_comb(source, j)));
        if (left != right) {
          ++failures;
          report.fail("f(xy) = f(x)f(y)", pair_name(source, i, j));
        }
      }
    if (failures == 0) report.pass("f(xy) = f(x)f(y)");
    report.expect(image(unit_comb(source)) == unit_comb(target), "f(1) = 1", "unit not preserved");
  }
  if (kind != MorphismKind::Algebra) {
    require_coalgebra(source);
    require_coalgebra(target);
    std::size_t failures = 0, eps_failures = 0;
    for (std::size_t k = 0; k < ns; ++k) {
      LinComb left = coproduct_of(target, image(basis_comb(source, k)));
      LinComb right;
      for (const auto& [ij, c] : source.coproduct(k)) {
        std::size_t i = ij / ns, j = ij % ns;
        for (std::size_t r = 0; r < nt; ++r) {
          if (map(r, i).is_zero()) continue;
          for (std::size_t s = 0; s < nt; ++s)
            if (!map(s, j).is_zero()) accumulate(right, r * nt + s, c * map(r, i) * map(s, j));
        }
      }
      if (left != right) {
        ++failures;
        report.fail("Delta f = (f(x)f) Delta", "at " + source.basis[k]);
      }
      if (counit_of(target, image(basis_comb(source, k))) != (*source.counit)[k]) {
        ++eps_failures;
        report.fail("e f = e", "at " + source.basis[k]);
      }
    }
    if (failures == 0) report.pass("Delta f = (f(x)f) Delta");
    if (eps_failures == 0) report.pass("e f = e");
  }
  return report;
}

Report check_morphism(const BialgebraMorphism& f, MorphismKind kind) {
  return check_morphism(f.source, f.target, f.matrix, kind);
}

std::vector<Vector> primitives(const FinBialgebra& a) {
  validate_shapes(a);
  require_algebra(a);
  require_coalgebra(a);
  const std::size_t n = a.dim;
  const Vector& u = *a.unit;
  Matrix system(a.field, n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [ij, c] : a.coproduct(k)) system(ij, k) += c;
    for (std::size_t j = 0; j < n; ++j) {
      system(k * n + j, k) -= u[j];
      system(j * n + k, k) -= u[j];
    }
  }
  return kernel_basis(system);
}

bool check_grouplike(const FinBialgebra& a, const Vector& x) {
  validate_shapes(a);
  require_coalgebra(a);
  if (x.size() != a.dim) throw Error(ErrorCode::DimensionMismatch, "grouplike candidate length");
  return a.comultiply(x) == kron(x, x) && a.apply_counit(x).is_one();
}

}  // namespace hopfdual
