#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfdual/bialgebra.hpp"
#include "hopfdual/monoid.hpp"
#include "hopfdual/report.hpp"
#include "hopfdual/representation.hpp"

namespace hopfdual {

/// A_X = A / Ann(X), realised on the basis elements whose actions are a
/// basis of the span of all actions.
struct ReconstructionResult {
  FinBialgebra algebra;
  /// A -> A_X, dim A_X x dim A.
  Matrix quotient_map{Field::rationals(), 0, 0};
  AlgebraModule faithful_action;
  /// Indices into the basis of A that give the basis of A_X.
  std::vector<std::size_t> basis_elements;
  /// True for X = 0, where A_X is the zero algebra.
  bool degenerate = false;
  Report report;
};

/// Coalgebra data (and the antipode) are carried over only when the
/// module is faithful, since Ann(X) need not be a coideal otherwise.
ReconstructionResult annihilator_quotient(const AlgebraModule& x);

/// RG -> A_{RG} is the identity on structure constants.
Report reconstruct_from_regular(const FiniteMonoid& g, Field field);

/// Diagonal action g -> rho_X(g) (x) rho_Y(g) on X (x) Y.
Representation tensor_representation(const Representation& x, const Representation& y);
/// g -> rho(g^-1)^T; throws NotAGroup.
Representation contragredient(const Representation& rho);

/// For each pair, rho_{X(x)Y}(a) = (rho_X (x) rho_Y)(Delta a) on the basis of
/// RG; for groups also the contragredient checks.
Report tensor_coproduct_recovery(const FiniteMonoid& g, const std::vector<std::pair<std::string, Representation>>& reps);

/// dim span {rho(g)} in End(X) = dim A_X.
std::size_t image_span_dimension(const Representation& x);
/// dim A_{X+Y} >= max(dim A_X, dim A_Y).
Report image_span_monotonicity(const Representation& x, const Representation& y);

}  // namespace hopfdual
