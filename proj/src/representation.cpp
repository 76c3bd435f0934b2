#include "hopfdual/representation.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hopfdual/error.hpp"

namespace hopfdual {

namespace {

void require_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) throw Error(ErrorCode::FieldMismatch, what);
}

bool in_span(Field f, const std::vector<Vector>& basis, const Vector& v, std::size_t dim) {
  std::vector<Vector> ext = basis;
  ext.push_back(v);
  return span_dimension(f, ext, dim) == span_dimension(f, basis, dim);
}

// Same subspace, given two spanning sets.
bool same_span(Field f, const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = span_dimension(f, both, dim);
  return r == span_dimension(f, a, dim) && r == span_dimension(f, b, dim);
}

Matrix element_inverse_action(const Representation& rho, std::size_t g) {
  auto inv = rho.monoid.inverse(g);
  if (!inv) throw Error(ErrorCode::NotAGroup, rho.monoid.name(g) + " is not invertible");
  return rho.action[*inv];
}

// Basis of {T : T a_g = b_g T for all g}, T stored row-major (rows = dim b).
std::vector<Matrix> intertwiners(Field f, const std::vector<Matrix>& a, const std::vector<Matrix>& b,
                                 std::size_t da, std::size_t db) {
  const std::size_t vars = da * db;
  std::vector<Vector> rows;
  for (std::size_t g = 0; g < a.size(); ++g)
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t c = 0; c < da; ++c) {
        Vector row = zero_vector(f, vars);
        for (std::size_t k = 0; k < da; ++k) row[r * da + k] += a[g](k, c);
        for (std::size_t k = 0; k < db; ++k) row[k * da + c] -= b[g](r, k);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<Matrix> out;
  if (vars == 0) return out;
  for (const auto& v : kernel_basis(Matrix::from_rows(f, rows, vars))) {
    Matrix t(f, db, da);
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t c = 0; c < da; ++c) t(r, c) = v[r * da + c];
    out.push_back(std::move(t));
  }
  return out;
}

Matrix block_diagonal(Field f, const std::vector<const Matrix*>& blocks) {
  std::size_t n = 0;
  for (auto* b : blocks) n += b->rows();
  Matrix out(f, n, n);
  std::size_t off = 0;
  for (auto* b : blocks) {
    for (std::size_t i = 0; i < b->rows(); ++i)
      for (std::size_t j = 0; j < b->cols(); ++j) out(off + i, off + j) = (*b)(i, j);
    off += b->rows();
  }
  return out;
}

// Standard basis vectors extending `basis` to a basis of F^dim, first index first.
std::vector<Vector> greedy_complement(Field f, const std::vector<Vector>& basis, std::size_t dim) {
  std::vector<Vector> current = basis, chosen;
  std::size_t r = span_dimension(f, current, dim);
  for (std::size_t i = 0; i < dim && r < dim; ++i) {
    current.push_back(unit_vector(f, dim, i));
    std::size_t r2 = span_dimension(f, current, dim);
    if (r2 > r) {
      chosen.push_back(current.back());
      r = r2;
    } else {
      current.pop_back();
    }
  }
  return chosen;
}

Matrix average(const Representation& rho, const Vector& w, const Matrix& t) {
  Matrix out(rho.field, t.rows(), t.cols());
  for (std::size_t g = 0; g < rho.monoid.size(); ++g) {
    if (w[g].is_zero()) continue;
    Matrix term = rho.action[g] * t * element_inverse_action(rho, g);
    out += term * w[g];
  }
  return out;
}

}  // namespace

Matrix Representation::act(const Vector& element) const {
  if (element.size() != monoid.size()) throw Error(ErrorCode::DimensionMismatch, "element of RG has wrong length");
  Matrix out(field, dim, dim);
  for (std::size_t g = 0; g < element.size(); ++g)
    if (!element[g].is_zero()) out += action[g] * element[g];
  return out;
}

Report verify_representation(const Representation& rho) {
  Report report("representation");
  const std::size_t n = rho.monoid.size();
  if (rho.action.size() != n) {
    report.fail("shape", std::to_string(rho.action.size()) + " matrices for " + std::to_string(n) + " elements");
    return report;
  }
  for (std::size_t g = 0; g < n; ++g)
    if (rho.action[g].rows() != rho.dim || rho.action[g].cols() != rho.dim || !(rho.action[g].field() == rho.field)) {
      report.fail("shape", "matrix for " + rho.monoid.name(g));
      return report;
    }
  report.expect(rho.action[rho.monoid.unit()] == Matrix::identity(rho.field, rho.dim), "rho(1) = id",
                "unit acts nontrivially");
  std::size_t bad = 0;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (!(rho.action[rho.monoid.mul(g, h)] == rho.action[g] * rho.action[h])) {
        report.fail("rho(gh) = rho(g)rho(h)", "(" + rho.monoid.name(g) + "," + rho.monoid.name(h) + ")");
        ++bad;
      }
  if (bad == 0) report.pass("rho(gh) = rho(g)rho(h)", std::to_string(n * n) + " pairs");
  return report;
}

Representation trivial_representation(const FiniteMonoid& g, Field field, std::size_t dim) {
  return {g, field, dim, std::vector<Matrix>(g.size(), Matrix::identity(field, dim))};
}

Representation regular_representation(const FiniteMonoid& g, Field field) {
  const std::size_t n = g.size();
  std::vector<Matrix> action(n, Matrix(field, n, n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) action[a](g.mul(a, b), b) = Scalar(field, 1L);
  return {g, field, n, std::move(action)};
}

Representation character_representation(const FiniteMonoid& g, const std::vector<Scalar>& values) {
  if (values.size() != g.size() || values.empty())
    throw Error(ErrorCode::DimensionMismatch, "one character value per element");
  const Field f = values.front().field();
  std::vector<Matrix> action;
  for (const auto& v : values) {
    Matrix m(f, 1, 1);
    m(0, 0) = v;
    action.push_back(std::move(m));
  }
  return {g, f, 1, std::move(action)};
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.monoid == b.monoid)) throw Error(ErrorCode::InvalidArgument, "direct sum of representations of different monoids");
  require_field(a.field, b.field, "direct sum over different fields");
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < a.monoid.size(); ++g) action.push_back(block_diagonal(a.field, {&a.action[g], &b.action[g]}));
  return {a.monoid, a.field, a.dim + b.dim, std::move(action)};
}

Representation conjugate(const Representation& rho, const Matrix& p) {
  auto inv = inverse(p);
  if (!inv) throw Error(ErrorCode::SingularMatrix, "conjugating matrix is singular");
  Representation out = rho;
  for (auto& m : out.action) m = *inv * m * p;
  return out;
}

Matrix AlgebraModule::act(const Vector& element) const {
  if (element.size() != algebra.dim) throw Error(ErrorCode::DimensionMismatch, "algebra element has wrong length");
  Matrix out(algebra.field, dim, dim);
  for (std::size_t i = 0; i < element.size(); ++i)
    if (!element[i].is_zero()) out += action[i] * element[i];
  return out;
}

Report verify_module(const AlgebraModule& m) {
  Report report("module");
  const FinBialgebra& a = m.algebra;
  if (!a.has_algebra()) {
    report.fail("shape", "base has no algebra structure");
    return report;
  }
  if (m.action.size() != a.dim) {
    report.fail("shape", std::to_string(m.action.size()) + " matrices for dimension " + std::to_string(a.dim));
    return report;
  }
  for (const auto& x : m.action)
    if (x.rows() != m.dim || x.cols() != m.dim || !(x.field() == a.field)) {
      report.fail("shape", "action matrix of the wrong size");
      return report;
    }
  report.expect(m.act(*a.unit) == Matrix::identity(a.field, m.dim), "1 acts as id", "unit acts nontrivially");
  std::size_t bad = 0, count = 0;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (!a.product_defined(i, j)) continue;
      ++count;
      Matrix rhs(a.field, m.dim, m.dim);
      for (const auto& [k, c] : a.product(i, j)) rhs += m.action[k] * c;
      if (!(m.action[i] * m.action[j] == rhs)) {
        report.fail("(xy).v = x.(y.v)", "(" + a.basis[i] + "," + a.basis[j] + ")");
        ++bad;
      }
    }
  if (bad == 0) report.pass("(xy).v = x.(y.v)", std::to_string(count) + " pairs");
  return report;
}

AlgebraModule rep_to_module(const Representation& rho) {
  return {monoid_algebra(rho.monoid, rho.field), rho.dim, rho.action};
}

Representation module_to_rep(const AlgebraModule& m, const FiniteMonoid& g) {
  if (!compare_structures(m.algebra, monoid_algebra(g, m.algebra.field)).passed())
    throw Error(ErrorCode::InvalidArgument, "module is not over the monoid algebra");
  Representation rho{g, m.algebra.field, m.dim, m.action};
  if (!verify_representation(rho).passed()) throw Error(ErrorCode::InvalidArgument, "action is not multiplicative");
  return rho;
}

std::size_t hom_dimension(const Representation& a, const Representation& b) {
  if (!(a.monoid == b.monoid)) throw Error(ErrorCode::InvalidArgument, "representations of different monoids");
  require_field(a.field, b.field, "representations over different fields");
  return intertwiners(a.field, a.action, b.action, a.dim, b.dim).size();
}

std::size_t hom_dimension(const AlgebraModule& a, const AlgebraModule& b) {
  if (!compare_structures(a.algebra, b.algebra).passed())
    throw Error(ErrorCode::InvalidArgument, "modules over different algebras");
  return intertwiners(a.algebra.field, a.action, b.action, a.dim, b.dim).size();
}

std::vector<Vector> invariants(const Representation& rho, const std::optional<std::vector<std::size_t>>& generators) {
  std::vector<std::size_t> gens;
  if (generators) {
    gens = *generators;
  } else {
    for (std::size_t g = 0; g < rho.monoid.size(); ++g) gens.push_back(g);
  }
  if (rho.dim == 0) return {};
  std::vector<Vector> rows;
  const Matrix id = Matrix::identity(rho.field, rho.dim);
  for (auto g : gens) {
    Matrix d = rho.action.at(g) - id;
    for (std::size_t r = 0; r < rho.dim; ++r) rows.push_back(d.row(r));
  }
  if (rows.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < rho.dim; ++i) all.push_back(unit_vector(rho.field, rho.dim, i));
    return all;
  }
  return kernel_basis(Matrix::from_rows(rho.field, rows, rho.dim));
}

IntegralSystem integral_system(const FiniteMonoid& g, Field field) {
  const std::size_t n = g.size();
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t side = 0; side < 2; ++side)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t h = 0; h < n; ++h) {
        Vector row = zero_vector(field, n);
        for (std::size_t k = 0; k < n; ++k)
          if ((side == 0 ? g.mul(a, k) : g.mul(k, a)) == h) row[k] += Scalar(field, 1L);
        row[h] -= Scalar(field, 1L);
        if (is_zero(row)) continue;
        rows.push_back(std::move(row));
        rhs.emplace_back(field);
      }
  rows.emplace_back(n, Scalar(field, 1L));
  rhs.emplace_back(field, 1L);
  Matrix sys = Matrix::from_rows(field, rows, n);
  IntegralSystem out;
  out.solution = solve(sys, rhs);
  out.exists = out.solution.has_value();
  if (out.exists) out.freedom = kernel_basis(sys).size();
  return out;
}

InvariantIntegral invariant_integral(const FiniteMonoid& g, Field field) {
  if (!g.is_group()) throw Error(ErrorCode::NotAGroup, "invariant integral needs a group");
  const Scalar order(field, static_cast<long>(g.size()));
  if (order.is_zero())
    throw Error(ErrorCode::CharDividesOrder,
                "characteristic " + std::to_string(field.characteristic()) + " divides |G| = " + std::to_string(g.size()));
  InvariantIntegral out{g, field, Vector(g.size(), order.inverse()), Report("invariant integral")};
  const FinBialgebra rg = monoid_algebra(g, field);
  std::size_t bad = 0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    Vector e = unit_vector(field, g.size(), a);
    if (!(rg.multiply(e, out.w) == out.w)) {
      out.report.fail("g w = w", g.name(a));
      ++bad;
    }
    if (!(rg.multiply(out.w, e) == out.w)) {
      out.report.fail("w g = w", g.name(a));
      ++bad;
    }
  }
  if (bad == 0) out.report.pass("g w = w = w g", std::to_string(g.size()) + " elements");
  out.report.expect(rg.apply_counit(out.w).is_one(), "e(w) = 1", "counit of w is " + rg.apply_counit(out.w).to_string());
  out.report.expect(rg.multiply(out.w, out.w) == out.w, "w w = w", "w is not idempotent");
  IntegralSystem sys = integral_system(g, field);
  out.report.expect(sys.exists && sys.freedom == 0 && *sys.solution == out.w, "uniqueness",
                    sys.exists ? std::to_string(sys.freedom) + "-dimensional solution space" : "system inconsistent");
  return out;
}

ReynoldsOperator reynolds(const Representation& rho, const InvariantIntegral& w) {
  if (!(rho.monoid == w.group)) throw Error(ErrorCode::InvalidArgument, "integral belongs to another group");
  require_field(rho.field, w.field, "integral over another field");
  ReynoldsOperator out{rho.act(w.w), {}, {}, Report("Reynolds operator")};
  const Matrix& p = out.projector;
  out.image = span_basis(rho.field, p.columns(), rho.dim);
  out.kernel = rho.dim == 0 ? std::vector<Vector>{} : kernel_basis(p);
  out.report.expect(p * p == p, "P^2 = P", "projector is not idempotent");
  std::vector<Vector> inv = invariants(rho);
  out.report.expect(same_span(rho.field, out.image, inv, rho.dim), "image P = M^G",
                    "dim image " + std::to_string(out.image.size()) + ", dim M^G " + std::to_string(inv.size()));
  bool absorbs = true;
  for (const auto& a : rho.action) absorbs = absorbs && a * p == p && p * a == p;
  out.report.expect(absorbs, "rho(g) P = P = P rho(g)", "projector not absorbing");
  std::vector<Vector> both = out.image;
  both.insert(both.end(), out.kernel.begin(), out.kernel.end());
  out.report.expect(out.image.size() + out.kernel.size() == rho.dim && span_dimension(rho.field, both, rho.dim) == rho.dim,
                    "M = wM + ker w", "summands do not span");
  return out;
}

GroupAlgebraSplitting split_group_algebra(const FiniteMonoid& g, Field field) {
  InvariantIntegral w = invariant_integral(g, field);
  const FinBialgebra rg = monoid_algebra(g, field);
  const std::size_t n = g.size();
  Matrix left(field, n, n);
  for (std::size_t h = 0; h < n; ++h) {
    Vector col = rg.multiply(w.w, unit_vector(field, n, h));
    for (std::size_t r = 0; r < n; ++r) left(r, h) = col[r];
  }
  GroupAlgebraSplitting out{w.w, kernel_basis(left), Report("RG = R x B")};
  out.report.merge(w.report, "integral: ");
  out.report.expect(rank(left) == 1, "dim w RG = 1", "rank " + std::to_string(rank(left)));
  std::vector<Vector> both = out.complement;
  both.push_back(w.w);
  out.report.expect(span_dimension(field, both, n) == n && out.complement.size() + 1 == n, "RG = wRG + B",
                    "summands do not span");
  bool ideal = true;
  std::string witness;
  for (std::size_t a = 0; a < n && ideal; ++a)
    for (const auto& b : out.complement) {
      Vector e = unit_vector(field, n, a);
      if (!in_span(field, out.complement, rg.multiply(e, b), n) || !in_span(field, out.complement, rg.multiply(b, e), n)) {
        ideal = false;
        witness = "g = " + g.name(a);
        break;
      }
    }
  out.report.expect(ideal, "B two-sided ideal", witness);
  bool annihilated = true;
  for (const auto& b : out.complement) annihilated = annihilated && is_zero(rg.multiply(w.w, b)) && is_zero(rg.multiply(b, w.w));
  out.report.expect(annihilated, "w B = 0 = B w", "w does not annihilate B");
  bool projection = true;
  for (std::size_t a = 0; a < n; ++a) {
    Vector e = unit_vector(field, n, a);
    Vector rest = add(e, scale(w.w, -rg.apply_counit(e)));
    if (!in_span(field, out.complement, rest, n)) {
      projection = false;
      witness = g.name(a);
    }
  }
  out.report.expect(projection, "projection onto wRG = counit", witness);
  return out;
}

Report check_equivariant(const RepMorphism& f) {
  Report report("equivariance");
  if (!(f.source.monoid == f.target.monoid)) {
    report.fail("same monoid", "source and target differ");
    return report;
  }
  if (f.map.rows() != f.target.dim || f.map.cols() != f.source.dim) {
    report.fail("shape", "map is " + std::to_string(f.map.rows()) + "x" + std::to_string(f.map.cols()));
    return report;
  }
  std::size_t bad = 0;
  for (std::size_t g = 0; g < f.source.monoid.size(); ++g)
    if (!(f.map * f.source.action[g] == f.target.action[g] * f.map)) {
      report.fail("f rho(g) = sigma(g) f", f.source.monoid.name(g));
      ++bad;
    }
  if (bad == 0) report.pass("f rho(g) = sigma(g) f", std::to_string(f.source.monoid.size()) + " elements");
  return report;
}

Representation subrepresentation(const Representation& rho, const std::vector<Vector>& basis) {
  const std::size_t k = basis.size();
  if (span_dimension(rho.field, basis, rho.dim) != k)
    throw Error(ErrorCode::InvalidArgument, "subspace basis is not independent");
  Matrix b = Matrix::from_columns(rho.field, basis, rho.dim);
  std::vector<Matrix> action;
  for (const auto& a : rho.action) {
    Matrix m(rho.field, k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto c = solve(b, a * basis[j]);
      if (!c) throw Error(ErrorCode::InvalidArgument, "subspace is not invariant");
      for (std::size_t i = 0; i < k; ++i) m(i, j) = (*c)[i];
    }
    action.push_back(std::move(m));
  }
  return {rho.monoid, rho.field, k, std::move(action)};
}

Quotient quotient_representation(const Representation& rho, const std::vector<Vector>& subspace) {
  const Field f = rho.field;
  std::vector<Vector> u = span_basis(f, subspace, rho.dim);
  std::vector<Vector> c = greedy_complement(f, u, rho.dim);
  std::vector<Vector> cols = u;
  cols.insert(cols.end(), c.begin(), c.end());
  Matrix q = Matrix::from_columns(f, cols, rho.dim);
  Matrix qinv = *inverse(q);
  const std::size_t k = u.size(), m = c.size();
  std::vector<Matrix> action;
  for (const auto& a : rho.action) {
    Matrix t = qinv * a * q;
    for (std::size_t i = k; i < rho.dim; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (!t(i, j).is_zero()) throw Error(ErrorCode::InvalidArgument, "subspace is not invariant");
    Matrix block(f, m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) block(i, j) = t(k + i, k + j);
    action.push_back(std::move(block));
  }
  Representation rep{rho.monoid, f, m, std::move(action)};
  Matrix pi(f, m, rho.dim);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < rho.dim; ++j) pi(i, j) = qinv(k + i, j);
  return {rep, RepMorphism{rho, rep, pi}, c};
}

Matrix equivariant_section(const RepMorphism& pi, const Matrix& s, const InvariantIntegral& w) {
  require_field(pi.source.field, w.field, "integral over another field");
  if (!(pi.source.monoid == w.group)) throw Error(ErrorCode::InvalidArgument, "integral belongs to another group");
  if (!check_equivariant(pi).passed()) throw Error(ErrorCode::InvalidArgument, "projection is not equivariant");
  const std::size_t m = pi.source.dim, n = pi.target.dim;
  if (s.rows() != m || s.cols() != n) throw Error(ErrorCode::DimensionMismatch, "section has the wrong shape");
  if (!(pi.map * s == Matrix::identity(pi.source.field, n))) throw Error(ErrorCode::NotASection, "pi s != id");
  Matrix out(pi.source.field, m, n);
  for (std::size_t g = 0; g < w.group.size(); ++g) {
    if (w.w[g].is_zero()) continue;
    out += pi.source.action[g] * s * element_inverse_action(pi.target, g) * w.w[g];
  }
  if (!(pi.map * out == Matrix::identity(pi.source.field, n)))
    throw Error(ErrorCode::NotASection, "averaged map is not a section");
  for (std::size_t g = 0; g < w.group.size(); ++g)
    if (!(pi.source.action[g] * out == out * pi.target.action[g]))
      throw Error(ErrorCode::InvalidArgument, "averaged section is not equivariant");
  return out;
}

ExactnessWitness invariant_exactness(const RepMorphism& pi) {
  ExactnessWitness out;
  std::vector<Vector> images;
  for (const auto& v : invariants(pi.source)) images.push_back(pi.map * v);
  out.image_dimension = span_dimension(pi.target.field, images, pi.target.dim);
  out.target_invariants = invariants(pi.target).size();
  out.exact = out.image_dimension == out.target_invariants;
  return out;
}

bool check_invariant_exactness(const RepMorphism& pi) { return invariant_exactness(pi).exact; }

CharacterTwist twist_by_character(const FiniteMonoid& g, const Character& chi, Field field) {
  const std::size_t n = g.size();
  if (chi.values.size() != n) throw Error(ErrorCode::DimensionMismatch, "one character value per element");
  Matrix phi(field, n, n), inv(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    require_field(chi.values[a].field(), field, "character over another field");
    if (chi.values[a].is_zero()) throw Error(ErrorCode::InvalidArgument, "character vanishes at " + g.name(a));
    phi(a, a) = chi.values[a];
    inv(a, a) = chi.values[a].inverse();
  }
  CharacterTwist out{phi, Report("character twist")};
  const FinBialgebra rg = monoid_algebra(g, field);
  out.report.merge(check_morphism(rg, rg, phi, MorphismKind::Algebra), "algebra map: ");
  out.report.expect(inv * phi == Matrix::identity(field, n), "inverse twist", "chi^-1 twist does not invert");
  bool counit = true;
  for (std::size_t a = 0; a < n; ++a) counit = counit && rg.apply_counit(phi.column(a)) == chi.values[a];
  out.report.expect(counit, "e phi = chi", "counit after twist differs from chi");
  return out;
}

namespace {

struct Splitter {
  const InvariantIntegral& w;
  SeededRng rng;

  // A proper invariant subspace of rho, in its own coordinates, if the
  // search finds one.
  std::optional<std::vector<Vector>> find_subspace(const Representation& rho) {
    const Field f = rho.field;
    const std::size_t d = rho.dim;
    if (d <= 1) return std::nullopt;
    auto try_candidate = [&](const Matrix& t) -> std::optional<std::vector<Vector>> {
      if (t.is_zero()) return std::nullopt;
      Poly mu = minimal_polynomial(t);
      if (mu.degree() <= 1) return std::nullopt;
      auto q = proper_factor(mu, rng);
      if (!q) return std::nullopt;
      std::vector<Vector> u = kernel_basis((*q)(t));
      if (u.empty() || u.size() >= d) return std::nullopt;
      return u;
    };
    for (std::size_t attempt = 0; attempt < 2 * d + 2; ++attempt) {
      Vector v, fv;
      for (std::size_t i = 0; i < d; ++i) {
        v.emplace_back(f, rng.between(-2, 2));
        fv.emplace_back(f, rng.between(-2, 2));
      }
      Matrix t0(f, d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) t0(i, j) = v[i] * fv[j];
      if (auto u = try_candidate(average(rho, w.w, t0))) return u;
    }
    std::vector<Matrix> commutant = intertwiners(f, rho.action, rho.action, d, d);
    if (commutant.size() <= 1) return std::nullopt;
    for (const auto& t : commutant)
      if (auto u = try_candidate(t)) return u;
    for (std::size_t attempt = 0; attempt < 2 * commutant.size(); ++attempt) {
      Matrix t(f, d, d);
      for (const auto& c : commutant) t += c * Scalar(f, rng.between(-3, 3));
      if (auto u = try_candidate(t)) return u;
    }
    return std::nullopt;
  }

  void split(const Representation& rho, const Matrix& ambient, std::vector<Summand>& out) {
    const Field f = rho.field;
    auto u = find_subspace(rho);
    if (!u) {
      out.push_back({ambient.columns(), rho, true});
      return;
    }
    // equivariant projector onto U, averaged from a coordinate projector
    std::vector<Vector> c = greedy_complement(f, *u, rho.dim);
    std::vector<Vector> cols = *u;
    cols.insert(cols.end(), c.begin(), c.end());
    Matrix q = Matrix::from_columns(f, cols, rho.dim);
    Matrix keep(f, rho.dim, rho.dim);
    for (std::size_t i = 0; i < u->size(); ++i) keep(i, i) = Scalar(f, 1L);
    Matrix p = average(rho, w.w, q * keep * *inverse(q));
    std::vector<Vector> comp = kernel_basis(p);
    for (const auto* part : {&*u, &comp}) {
      Representation sub = subrepresentation(rho, *part);
      split(sub, ambient * Matrix::from_columns(f, *part, rho.dim), out);
    }
  }
};

}  // namespace

Decomposition complete_reducibility(const Representation& rho, const InvariantIntegral& w, std::uint64_t seed) {
  if (!(rho.monoid == w.group)) throw Error(ErrorCode::InvalidArgument, "integral belongs to another group");
  require_field(rho.field, w.field, "integral over another field");
  const Field f = rho.field;
  Decomposition out{{}, Matrix(f, rho.dim, rho.dim), Report("complete reducibility")};
  out.report.pass("seed", std::to_string(seed));
  if (rho.dim == 0) return out;
  Splitter splitter{w, SeededRng(seed)};
  splitter.split(rho, Matrix::identity(f, rho.dim), out.summands);
  std::vector<Vector> cols;
  for (const auto& s : out.summands)
    for (const auto& b : s.basis) cols.push_back(b);
  out.change_of_basis = Matrix::from_columns(f, cols, rho.dim);
  auto pinv = inverse(out.change_of_basis);
  out.report.expect(pinv.has_value(), "summands span", "change of basis is singular");
  if (!pinv) return out;
  std::vector<const Matrix*> blocks(out.summands.size());
  bool diagonal = true;
  for (std::size_t g = 0; g < rho.monoid.size(); ++g) {
    for (std::size_t i = 0; i < out.summands.size(); ++i) blocks[i] = &out.summands[i].rep.action[g];
    diagonal = diagonal && *pinv * rho.action[g] * out.change_of_basis == block_diagonal(f, blocks);
  }
  out.report.expect(diagonal, "block-diagonal in the new basis", "conjugated action is not block diagonal");
  for (std::size_t i = 0; i < out.summands.size(); ++i) {
    const auto& s = out.summands[i];
    out.report.pass("summand " + std::to_string(i) + " simple relative to search",
                    "dim " + std::to_string(s.rep.dim) + ", dim End_G " + std::to_string(hom_dimension(s.rep, s.rep)));
  }
  return out;
}

ZRepDecomposition decompose_rep_of_Z(const Matrix& m) {
  const Field f = m.field();
  if (!f.is_prime()) throw Error(ErrorCode::InvalidArgument, "representations of Z are decomposed over F_p");
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "action of Z must be square");
  const std::size_t n = m.rows();
  if (!inverse(m)) throw Error(ErrorCode::SingularMatrix, "generator of Z must act invertibly");
  ZRepDecomposition out{{}, {}, Matrix(f, n, n), Matrix(f, n, n), Report("Z-representation")};
  if (n == 0) return out;
  const Poly chi = characteristic_polynomial(m);
  std::vector<Vector> columns;
  std::vector<const Matrix*> companions;
  std::vector<Matrix> companion_store;
  companion_store.reserve(n);
  for (const auto& [q, e] : factor_by_trial(chi)) {
    const auto k = static_cast<std::size_t>(q.degree());
    const Matrix nq = q(m);
    // kernels[j] = ker q(A)^j for j = 0 .. e+1
    std::vector<std::vector<Vector>> kernels{{}};
    Matrix power = Matrix::identity(f, n);
    for (std::size_t j = 1; j <= e + 1; ++j) {
      power = power * nq;
      kernels.push_back(kernel_basis(power));
    }
    PrimaryComponent comp{q, std::vector<std::size_t>(e, 0)};
    for (std::size_t j = e; j >= 1; --j) {
      std::vector<Vector> span = kernels[j - 1];
      for (const auto& v : kernels[j + 1]) span.push_back(nq * v);
      for (const auto& b : kernels[j]) {
        if (in_span(f, span, b, n)) continue;
        Vector x = b;
        for (std::size_t i = 0; i < k; ++i) {
          span.push_back(x);
          x = m * x;
        }
        out.blocks.push_back({q, j});
        ++comp.multiplicities[j - 1];
        Vector y = b;
        for (std::size_t i = 0; i < k * j; ++i) {
          columns.push_back(y);
          y = m * y;
        }
        companion_store.push_back(companion(pow(q, j)));
      }
    }
    std::size_t counted = 0;
    for (std::size_t j = 1; j <= e; ++j) counted += comp.multiplicities[j - 1] * j * k;
    out.report.expect(counted == kernels[e].size(), "primary component " + q.to_string(),
                      "blocks cover " + std::to_string(counted) + " of " + std::to_string(kernels[e].size()));
    while (!comp.multiplicities.empty() && comp.multiplicities.back() == 0) comp.multiplicities.pop_back();
    out.components.push_back(std::move(comp));
  }
  for (const auto& c : companion_store) companions.push_back(&c);
  if (columns.size() != n) {
    out.report.fail("blocks fill the space", std::to_string(columns.size()) + " of " + std::to_string(n) + " columns");
    return out;
  }
  out.conjugator = Matrix::from_columns(f, columns, n);
  auto pinv = inverse(out.conjugator);
  out.report.expect(pinv.has_value(), "conjugator invertible", "chosen cyclic vectors are dependent");
  if (!pinv) return out;
  out.block_diagonal = *pinv * m * out.conjugator;
  out.report.expect(out.block_diagonal == block_diagonal(f, companions), "P^-1 A P = companion blocks",
                    "conjugated matrix differs from the block companion form");
  Poly product = Poly::constant(f, 1);
  for (const auto& b : out.blocks) product = product * pow(b.irreducible, b.exponent);
  out.report.expect(product == chi, "block polynomials multiply to the characteristic polynomial", product.to_string());
  return out;
}

FormalMatrixIntegral formal_matrix_integral(std::size_t n, std::size_t order, Field field) {
  if (n == 0 || order == 0) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and N >= 1");
  const std::size_t vars = n * n;
  // monomials of degree <= order, by degree then lexicographically
  std::vector<std::vector<unsigned>> monomials;
  std::map<std::vector<unsigned>, std::size_t> index;
  std::vector<std::size_t> degree;
  std::function<void(std::vector<unsigned>&, std::size_t, unsigned)> gen = [&](std::vector<unsigned>& e, std::size_t pos,
                                                                                  unsigned left) {
    if (pos == vars) {
      if (left == 0) monomials.push_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[pos] = a;
      gen(e, pos + 1, left - a);
    }
    e[pos] = 0;
  };
  for (unsigned d = 0; d <= order; ++d) {
    std::vector<unsigned> e(vars, 0);
    gen(e, 0, d);
  }
  const std::size_t dim = monomials.size();
  for (std::size_t i = 0; i < dim; ++i) {
    index[monomials[i]] = i;
    unsigned d = 0;
    for (auto a : monomials[i]) d += a;
    degree.push_back(d);
  }
  auto times = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
    if (degree[a] + degree[b] > order) return std::nullopt;
    std::vector<unsigned> e = monomials[a];
    for (std::size_t v = 0; v < vars; ++v) e[v] += monomials[b][v];
    return index.at(e);
  };
  using Tensor = std::map<std::pair<std::size_t, std::size_t>, Scalar>;
  auto variable = [&](std::size_t v) {
    std::vector<unsigned> e(vars, 0);
    e[v] = 1;
    return index.at(e);
  };
  std::vector<Tensor> delta(dim);
  delta[0][{0, 0}] = Scalar(field, 1L);
  for (std::size_t f = 1; f < dim; ++f) {
    std::size_t v = 0;
    while (monomials[f][v] == 0) ++v;
    std::vector<unsigned> rest = monomials[f];
    --rest[v];
    const Tensor& base = delta[index.at(rest)];
    const std::size_t i = v / n, j = v % n;
    Tensor out;
    for (const auto& [key, c] : base)
      for (std::size_t l = 0; l < n; ++l) {
        auto left = times(key.first, variable(i * n + l));
        auto right = times(key.second, variable(l * n + j));
        if (!left || !right) continue;
        auto [it, fresh] = out.try_emplace({*left, *right}, Scalar(field));
        it->second += c;
      }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    delta[f] = std::move(out);
  }
  // convolution: d_u * d_v = sum_f <d_u (x) d_v, Delta x^f> d_f
  std::map<std::pair<std::size_t, std::size_t>, LinComb> conv;
  for (std::size_t f = 0; f < dim; ++f)
    for (const auto& [key, c] : delta[f]) accumulate(conv[key], f, c);
  auto product = [&](std::size_t u, std::size_t v) {
    auto it = conv.find({u, v});
    return it == conv.end() ? SparseVec{} : to_sparse(it->second);
  };
  FormalMatrixIntegral result{dim, monomials, FinBialgebra{}, Report("formal matrix integral")};
  result.dual.field = field;
  result.dual.dim = dim;
  std::vector<SparseVec> mult(dim * dim);
  for (std::size_t u = 0; u < dim; ++u) {
    std::string name = "d[";
    for (std::size_t v = 0; v < vars; ++v) name += (v ? "," : "") + std::to_string(monomials[u][v]);
    result.dual.basis.push_back(name + "]");
    for (std::size_t v = 0; v < dim; ++v) mult[u * dim + v] = product(u, v);
  }
  result.dual.mult = std::move(mult);
  Report& report = result.report;
  report.pass("dual basis", std::to_string(dim) + " functionals");
  std::size_t bad = 0;
  for (std::size_t u = 0; u < dim; ++u) {
    SparseVec expected;
    if (u == 0) expected.emplace_back(0, Scalar(field, 1L));
    if (!(product(u, 0) == expected)) {
      report.fail("a * d0 = a(1) d0", "a = d" + std::to_string(u));
      ++bad;
    }
    if (!(product(0, u) == expected)) {
      report.fail("d0 * a = a(1) d0", "a = d" + std::to_string(u));
      ++bad;
    }
  }
  if (bad == 0) report.pass("a * d0 = a(1) d0 = d0 * a", std::to_string(dim) + " functionals");
  // associativity of convolution, i.e. coassociativity of the matrix coproduct
  bad = 0;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      SparseVec ab = product(a, b);
      for (std::size_t c = 0; c < dim && bad < 8; ++c) {
        LinComb lhs, rhs;
        for (const auto& [k, x] : ab)
          for (const auto& [l, y] : product(k, c)) accumulate(lhs, l, x * y);
        for (const auto& [k, x] : product(b, c))
          for (const auto& [l, y] : product(a, k)) accumulate(rhs, l, x * y);
        if (!(to_sparse(lhs) == to_sparse(rhs))) {
          report.fail("convolution associative", "(d" + std::to_string(a) + ",d" + std::to_string(b) + ",d" +
                                                     std::to_string(c) + ")");
          ++bad;
        }
      }
    }
  if (bad == 0) report.pass("convolution associative", std::to_string(dim * dim * dim) + " triples");
  return result;
}

Representation random_representation(const FiniteMonoid& g, Field field, SeededRng& rng, std::size_t max_pieces) {
  const std::size_t budget = std::max<std::size_t>(16, g.size());
  Representation rho{g, field, 0, std::vector<Matrix>(g.size(), Matrix(field, 0, 0))};
  const std::size_t pieces = 1 + rng.below(std::max<std::size_t>(max_pieces, 1));
  for (std::size_t i = 0; i < pieces; ++i) {
    Representation piece = trivial_representation(g, field);
    switch (rng.below(3)) {
      case 1:
        piece = regular_representation(g, field);
        break;
      case 2: {
        Representation reg = regular_representation(g, field);
        piece = quotient_representation(reg, invariants(reg)).rep;
        break;
      }
      default:
        break;
    }
    if (piece.dim == 0 || (rho.dim > 0 && rho.dim + piece.dim > budget)) continue;
    rho = rho.dim == 0 ? piece : direct_sum(rho, piece);
  }
  const std::size_t d = rho.dim;
  Matrix lower = Matrix::identity(field, d), upper = Matrix::identity(field, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = Scalar(field, rng.between(-1, 1));
      upper(j, i) = Scalar(field, rng.between(-1, 1));
    }
  return conjugate(rho, lower * upper);
}

RepMorphism random_quotient(const Representation& rho, SeededRng& rng) {
  std::vector<Vector> orbit;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vector v;
    for (std::size_t i = 0; i < rho.dim; ++i) v.emplace_back(rho.field, rng.between(-2, 2));
    orbit.clear();
    for (const auto& a : rho.action) orbit.push_back(a * v);
    const std::size_t r = span_dimension(rho.field, orbit, rho.dim);
    if (r > 0 && r < rho.dim) break;
  }
  return quotient_representation(rho, orbit).projection;
}

}  // namespace hopfdual
