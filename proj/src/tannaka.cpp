#include "hopfdual/tannaka.hpp"

#include <algorithm>

#include "hopfdual/error.hpp"

namespace hopfdual {

namespace {

Matrix action_map(const AlgebraModule& x) {
  const std::size_t rows = x.dim * x.dim;
  Matrix phi(x.algebra.field, rows, x.algebra.dim);
  for (std::size_t i = 0; i < x.algebra.dim; ++i) {
    Vector v = flatten(x.action[i]);
    for (std::size_t r = 0; r < rows; ++r) phi(r, i) = v[r];
  }
  return phi;
}

bool same_span(Field f, const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = span_dimension(f, both, dim);
  return r == span_dimension(f, a, dim) && r == span_dimension(f, b, dim);
}

}  // namespace

ReconstructionResult annihilator_quotient(const AlgebraModule& x) {
  const FinBialgebra& a = x.algebra;
  const Field f = a.field;
  ReconstructionResult out;
  out.report = Report("annihilator quotient");
  out.report.merge(verify_module(x), "module: ");
  if (!out.report.passed()) return out;
  const std::size_t n = a.dim;
  out.algebra.field = f;
  if (x.dim == 0) {
    out.degenerate = true;
    out.algebra.mult = std::vector<SparseVec>{};
    out.algebra.unit = Vector{};
    out.algebra.basis = {};
    out.quotient_map = Matrix(f, 0, n);
    out.faithful_action = AlgebraModule{out.algebra, 0, {}};
    out.report.pass("X = 0", "A_X is the zero algebra");
    return out;
  }
  const Matrix phi = action_map(x);
  RowEchelon e = rref(phi);
  out.basis_elements = e.pivots;
  const std::size_t k = e.rank;
  std::vector<Vector> pivot_cols;
  for (auto p : e.pivots) pivot_cols.push_back(phi.column(p));
  const Matrix basis_cols = Matrix::from_columns(f, pivot_cols, phi.rows());
  auto coords = [&](const Vector& flat) {
    auto c = solve(basis_cols, flat);
    if (!c) throw Error(ErrorCode::InvalidArgument, "action outside the span of the pivot actions");
    return *c;
  };
  out.quotient_map = Matrix(f, k, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector c = coords(phi.column(i));
    for (std::size_t r = 0; r < k; ++r) out.quotient_map(r, i) = c[r];
  }
  auto image = [&](const Vector& v) { return out.quotient_map * v; };
  FinBialgebra& ax = out.algebra;
  ax.dim = k;
  for (auto p : e.pivots) ax.basis.push_back(a.basis[p]);
  std::vector<SparseVec> mult(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      mult[i * k + j] = to_sparse(image(to_dense(a.product(e.pivots[i], e.pivots[j]), f, n)));
  ax.mult = std::move(mult);
  ax.unit = image(*a.unit);
  const bool faithful = k == n;
  if (faithful) {
    // q is invertible: transport the coalgebra and the antipode along it
    const Matrix qinv = *inverse(out.quotient_map);
    if (a.has_coalgebra()) {
      const Matrix qq = kron(out.quotient_map, out.quotient_map);
      std::vector<SparseVec> comult(k);
      Vector counit(k, Scalar(f));
      for (std::size_t i = 0; i < k; ++i) {
        Vector pre = qinv.column(i);
        comult[i] = to_sparse(qq * a.comultiply(pre));
        counit[i] = a.apply_counit(pre);
      }
      ax.comult = std::move(comult);
      ax.counit = std::move(counit);
    }
    if (a.antipode) ax.antipode = out.quotient_map * *a.antipode * qinv;
  }
  std::vector<Matrix> actions;
  for (auto p : e.pivots) actions.push_back(x.action[p]);
  out.faithful_action = AlgebraModule{ax, x.dim, actions};

  out.report.merge(verify_algebra(ax), "A_X: ");
  out.report.merge(check_morphism(a, ax, out.quotient_map, MorphismKind::Algebra), "A -> A_X: ");
  out.report.expect(rank(out.quotient_map) == k, "A -> A_X onto", "quotient map is not surjective");
  std::vector<Vector> ann = kernel_basis(phi), ker = kernel_basis(out.quotient_map);
  out.report.expect(same_span(f, ann, ker, n), "ker(A -> A_X) = Ann(X)",
                    "kernel dim " + std::to_string(ker.size()) + ", annihilator dim " + std::to_string(ann.size()));
  out.report.merge(verify_module(out.faithful_action), "A_X-module: ");
  out.report.expect(rank(action_map(out.faithful_action)) == k, "A_X acts faithfully", "nonzero element acts as 0");
  out.report.expect(k <= std::min(n, x.dim * x.dim), "dim A_X <= min(dim A, (dim X)^2)", std::to_string(k));
  return out;
}

Report reconstruct_from_regular(const FiniteMonoid& g, Field field) {
  Report report("reconstruction from the regular representation");
  const FinBialgebra rg = monoid_algebra(g, field);
  ReconstructionResult r = annihilator_quotient(rep_to_module(regular_representation(g, field)));
  report.merge(r.report);
  report.expect(r.algebra.dim == g.size(), "dim A_X = |G|", std::to_string(r.algebra.dim));
  report.expect(r.quotient_map == Matrix::identity(field, g.size()), "RG -> A_X canonical basis",
                "comparison is not the identity");
  report.merge(compare_structures(rg, r.algebra), "RG vs A_X: ");
  ReconstructionResult again = annihilator_quotient(r.faithful_action);
  report.merge(compare_structures(r.algebra, again.algebra), "idempotent: ");
  return report;
}

Representation tensor_representation(const Representation& x, const Representation& y) {
  if (!(x.monoid == y.monoid)) throw Error(ErrorCode::InvalidArgument, "tensor of representations of different monoids");
  if (!(x.field == y.field)) throw Error(ErrorCode::FieldMismatch, "tensor over different fields");
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < x.monoid.size(); ++g) action.push_back(kron(x.action[g], y.action[g]));
  return {x.monoid, x.field, x.dim * y.dim, std::move(action)};
}

Representation contragredient(const Representation& rho) {
  if (!rho.monoid.is_group()) throw Error(ErrorCode::NotAGroup, "contragredient needs inverses");
  Representation out = rho;
  for (std::size_t g = 0; g < rho.monoid.size(); ++g) out.action[g] = rho.action[*rho.monoid.inverse(g)].transpose();
  return out;
}

Report tensor_coproduct_recovery(const FiniteMonoid& g, const std::vector<std::pair<std::string, Representation>>& reps) {
  Report report("tensor structure");
  if (reps.empty()) return report;
  const Field f = reps.front().second.field;
  const FinBialgebra rg = monoid_algebra(g, f);
  const std::size_t n = rg.dim;
  for (const auto& [name, rho] : reps) {
    if (!(rho.monoid == g)) throw Error(ErrorCode::InvalidArgument, name + " is a representation of another monoid");
    report.merge(verify_representation(rho), name + ": ");
  }
  for (const auto& [nx, x] : reps)
    for (const auto& [ny, y] : reps) {
      const Representation xy = tensor_representation(x, y);
      bool ok = verify_representation(xy).passed();
      std::string witness = ok ? "" : "diagonal action is not a representation";
      for (std::size_t a = 0; a < n && ok; ++a) {
        Matrix via_delta(f, xy.dim, xy.dim);
        for (const auto& [ij, c] : rg.coproduct(a)) via_delta += kron(x.action[ij / n], y.action[ij % n]) * c;
        if (!(via_delta == xy.action[a])) {
          ok = false;
          witness = "at " + g.name(a);
        }
      }
      report.expect(ok, nx + " (x) " + ny, witness);
    }
  if (!g.is_group()) {
    report.pass("duals", "skipped: monoid without inverses");
    return report;
  }
  for (const auto& [name, rho] : reps) {
    const Representation dual = contragredient(rho);
    bool ok = verify_representation(dual).passed() && contragredient(dual).action == rho.action;
    // rho*(a) = rho(S a)^T
    for (std::size_t a = 0; a < n && ok; ++a) ok = dual.act(unit_vector(f, n, a)) == rho.act(rg.antipode->column(a)).transpose();
    // evaluation X* (x) X -> F is equivariant
    const Vector ev = flatten(Matrix::identity(f, rho.dim));
    const Matrix ev_row = Matrix::from_rows(f, {ev}, ev.size());
    for (std::size_t a = 0; a < n && ok; ++a) ok = ev_row * kron(dual.action[a], rho.action[a]) == ev_row;
    report.expect(ok, name + "^v", "contragredient checks failed");
  }
  return report;
}

std::size_t image_span_dimension(const Representation& x) {
  std::vector<Vector> flats;
  for (const auto& a : x.action) flats.push_back(flatten(a));
  return span_dimension(x.field, flats, x.dim * x.dim);
}

Report image_span_monotonicity(const Representation& x, const Representation& y) {
  Report report("span monotonicity");
  const std::size_t dx = image_span_dimension(x), dy = image_span_dimension(y);
  const std::size_t ds = image_span_dimension(direct_sum(x, y));
  report.expect(ds >= std::max(dx, dy), "dim A_{X+Y} >= max(dim A_X, dim A_Y)",
                std::to_string(ds) + " < max(" + std::to_string(dx) + ", " + std::to_string(dy) + ")");
  return report;
}

}  // namespace hopfdual
