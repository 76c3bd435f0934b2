#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hopfdual/bialgebra.hpp"
#include "hopfdual/matrix.hpp"
#include "hopfdual/report.hpp"

namespace hopfdual {

/// Lie algebra by structure constants: [e_i, e_j] = sum_k brackets[i*dim+j][k] e_k.
struct LieAlgebra {
  Field field = Field::rationals();
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<SparseVec> brackets;

  const SparseVec& bracket(std::size_t i, std::size_t j) const { return brackets[i * dim + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;
};

/// Builds the full antisymmetric tensor from the brackets with i < j.
LieAlgebra make_lie_algebra(Field field, std::vector<std::string> basis,
                            const std::vector<std::tuple<std::size_t, std::size_t, SparseVec>>& upper);

/// Antisymmetry and the Jacobi identity on every basis triple.
Report verify_lie(const LieAlgebra& l);

namespace lie_algebras {
LieAlgebra abelian(std::size_t d, Field field = Field::rationals());
/// [x, y] = z
LieAlgebra heisenberg(Field field = Field::rationals());
/// basis (e, f, h): [h, e] = 2e, [h, f] = -2f, [e, f] = h
LieAlgebra sl2(Field field = Field::rationals());
}  // namespace lie_algebras

/// U(L) up to filtration degree N on the PBW basis e_1^a_1 ... e_d^a_d.
/// Products are defined when the degrees add up to at most N.
struct TruncatedEnveloping {
  LieAlgebra lie;
  unsigned order = 0;
  /// Exponent vectors, by total degree and then decreasing lexicographically,
  /// so the generators come first in their own order.
  std::vector<std::vector<unsigned>> monomials;
  std::map<std::vector<unsigned>, std::size_t> lookup;
  /// Partial bialgebra: filtration set, generators primitive.
  FinBialgebra algebra;

  std::size_t index_of(const std::vector<unsigned>& exponents) const;
  std::size_t generator(std::size_t i) const { return 1 + i; }
};

/// Normal forms by rewriting e_j e_i -> e_i e_j + [e_j, e_i] for j > i.
/// Each swap lowers the number of inversions at fixed length and every
/// bracket term is shorter, so rewriting terminates.
TruncatedEnveloping enveloping_truncated(const LieAlgebra& l, unsigned order);

/// Delta(e^a) = sum_{b <= a} prod_i C(a_i, b_i) e^b (x) e^(a-b).
const std::vector<SparseVec>& coproduct_on_U(const TruncatedEnveloping& u);

/// Names like "e^2 f h" for PBW monomials.
std::string monomial_name(const LieAlgebra& l, const std::vector<unsigned>& exponents);

struct GradedCheck {
  /// dims[n] = dim U_n / U_{n-1}
  std::vector<std::size_t> dims;
  Report report;
};

/// Filtration quotients against C(d+n-1, n) and the symmetrization map
/// S^n L -> gr_n. Throws CharacteristicNotZero over F_p.
GradedCheck graded_check(const TruncatedEnveloping& u);

struct PrimitiveSpace {
  std::vector<Vector> basis;
  Report report;
};
PrimitiveSpace primitives_of_U(const TruncatedEnveloping& u);

struct LieFunctor {
  bool lie_morphism = false;
  /// Extension to the PBW bases (target size x source size); empty when
  /// f is not a Lie morphism.
  Matrix extension{Field::rationals(), 0, 0};
  Report report;
};

/// f is dim L' x dim L. Reports the obstruction pairs when f does not
/// preserve brackets.
LieFunctor lie_morphism_functor(const LieAlgebra& source, const LieAlgebra& target, const Matrix& f, unsigned order);

struct DividedPowers {
  FinBialgebra algebra;
  /// x^n -> n! w_n from the enveloping algebra of the 1-dimensional Lie algebra.
  Matrix comparison{Field::rationals(), 0, 0};
  Report report;
};

/// w_i w_j = C(i+j, i) w_{i+j}, Delta w_n = sum w_i (x) w_{n-i}.
DividedPowers divided_power_bialgebra(unsigned order, Field field = Field::rationals());

enum class GroupPreset { Additive, Multiplicative, UpperUnipotent };

GroupPreset parse_group_preset(const std::string& name);
std::string preset_name(GroupPreset p);

struct Distributions {
  /// Dual of A / I^{N+1} in the coordinate u at the identity.
  FinBialgebra algebra;
  /// x^n -> d1^n from U of the tangent line.
  Matrix comparison{Field::rationals(), 0, 0};
  Report report;
};

/// Throws CharacteristicNotZero over F_p.
Distributions dist_at_identity(GroupPreset preset, unsigned order, Field field = Field::rationals());

enum class AdicPreset { Polynomial, Multiplicative };

struct AdicGraded {
  /// dims[n] = dim I^n / I^{n+1}
  std::vector<std::size_t> dims;
  Report report;
};

/// `variables` is the number of coordinates for the polynomial preset.
AdicGraded iadic_graded(AdicPreset preset, unsigned order, std::size_t variables = 1,
                        Field field = Field::rationals());

}  // namespace hopfdual
