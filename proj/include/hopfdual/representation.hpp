#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfdual/bialgebra.hpp"
#include "hopfdual/matrix.hpp"
#include "hopfdual/monoid.hpp"
#include "hopfdual/polynomial.hpp"
#include "hopfdual/report.hpp"
#include "hopfdual/rng.hpp"

namespace hopfdual {

/// Linear action of a finite monoid: one dim x dim matrix per element.
struct Representation {
  FiniteMonoid monoid;
  Field field;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  const Matrix& operator()(std::size_t g) const { return action.at(g); }
  /// Linear extension to an element of RG given by coefficients.
  Matrix act(const Vector& element) const;
};

/// action(gh) = action(g) action(h), action(1) = id.
Report verify_representation(const Representation& rho);

Representation trivial_representation(const FiniteMonoid& g, Field field, std::size_t dim = 1);
/// g . e_h = e_{gh}
Representation regular_representation(const FiniteMonoid& g, Field field);
/// 1-dimensional representation from character values.
Representation character_representation(const FiniteMonoid& g, const std::vector<Scalar>& values);
Representation direct_sum(const Representation& a, const Representation& b);
/// p^-1 rho(g) p for an invertible p.
Representation conjugate(const Representation& rho, const Matrix& p);

/// Module over a finite-dimensional algebra: one matrix per basis element.
struct AlgebraModule {
  FinBialgebra algebra;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  Matrix act(const Vector& element) const;
};

/// action(e_i) action(e_j) = sum_k m_ij^k action(e_k), action(1) = id.
Report verify_module(const AlgebraModule& m);

AlgebraModule rep_to_module(const Representation& rho);
/// Throws InvalidArgument unless m is a module over monoid_algebra(g, .).
Representation module_to_rep(const AlgebraModule& m, const FiniteMonoid& g);

/// Dimension of the space of equivariant linear maps a -> b.
std::size_t hom_dimension(const Representation& a, const Representation& b);
std::size_t hom_dimension(const AlgebraModule& a, const AlgebraModule& b);

/// Basis of the fixed vectors; `generators` defaults to every element.
std::vector<Vector> invariants(const Representation& rho,
                               const std::optional<std::vector<std::size_t>>& generators = std::nullopt);

struct InvariantIntegral {
  FiniteMonoid group;
  Field field;
  Vector w;
  Report report;
};

/// w = |G|^-1 sum g, with invariance, idempotence, normalisation and
/// uniqueness checked. Throws NotAGroup or CharDividesOrder.
InvariantIntegral invariant_integral(const FiniteMonoid& g, Field field);

/// Solution set of {g w = w, w g = w, e(w) = 1} in RG for any finite monoid.
struct IntegralSystem {
  bool exists = false;
  /// Dimension of the affine solution space (0 means unique).
  std::size_t freedom = 0;
  std::optional<Vector> solution;
};
IntegralSystem integral_system(const FiniteMonoid& g, Field field);

struct ReynoldsOperator {
  Matrix projector;
  std::vector<Vector> image;   // w M
  std::vector<Vector> kernel;  // ker(w .)
  Report report;
};

/// P = rho(w). Throws InvalidArgument when w belongs to another group or field.
ReynoldsOperator reynolds(const Representation& rho, const InvariantIntegral& w);

struct GroupAlgebraSplitting {
  Vector idempotent;
  /// Basis of the complementary ideal ker(w .) = (1 - w) RG.
  std::vector<Vector> complement;
  Report report;
};

/// RG = w RG x B as algebras, with the projection onto w RG equal to the counit.
GroupAlgebraSplitting split_group_algebra(const FiniteMonoid& g, Field field);

/// Linear map source -> target, as a target.dim x source.dim matrix.
struct RepMorphism {
  Representation source;
  Representation target;
  Matrix map;
};

Report check_equivariant(const RepMorphism& f);

/// Restriction to an invariant subspace, in the coordinates of `basis`.
Representation subrepresentation(const Representation& rho, const std::vector<Vector>& basis);

struct Quotient {
  Representation rep;
  RepMorphism projection;
  /// Vectors of the source whose images form the quotient basis.
  std::vector<Vector> complement;
};

/// M / U for an invariant subspace U; complement chosen greedily among the
/// standard basis vectors. Throws InvalidArgument when U is not invariant.
Quotient quotient_representation(const Representation& rho, const std::vector<Vector>& subspace);

/// s' = sum_g w_g rho_M(g) s rho_N(g^-1), verified to be an equivariant
/// section. Throws NotASection when pi s != id.
Matrix equivariant_section(const RepMorphism& pi, const Matrix& s, const InvariantIntegral& w);

struct ExactnessWitness {
  bool exact = false;
  std::size_t image_dimension = 0;   // dim pi(M^G)
  std::size_t target_invariants = 0; // dim N^G
};

ExactnessWitness invariant_exactness(const RepMorphism& pi);
/// True iff M^G -> N^G is onto.
bool check_invariant_exactness(const RepMorphism& pi);

struct CharacterTwist {
  Matrix matrix;
  Report report;
};

/// g -> chi(g) g on RG. Throws InvalidArgument when chi vanishes somewhere.
CharacterTwist twist_by_character(const FiniteMonoid& g, const Character& chi, Field field);

struct Summand {
  /// Basis in the coordinates of the decomposed representation.
  std::vector<Vector> basis;
  Representation rep;
  bool simple_relative_to_search = true;
};

struct Decomposition {
  std::vector<Summand> summands;
  /// Columns are the summand bases, in order.
  Matrix change_of_basis;
  Report report;
};

/// Splits rho along proper invariant subspaces found from averaged candidate
/// endomorphisms, recursing until the search finds nothing more.
Decomposition complete_reducibility(const Representation& rho, const InvariantIntegral& w,
                                    std::uint64_t seed = 1);

/// One cyclic summand F[x]/(q^e) of a representation of Z.
struct CyclicBlock {
  Poly irreducible;
  std::size_t exponent = 0;
};

struct PrimaryComponent {
  Poly irreducible;
  /// multiplicities[e - 1] = number of blocks F[x]/(q^e).
  std::vector<std::size_t> multiplicities;
};

struct ZRepDecomposition {
  std::vector<PrimaryComponent> components;
  std::vector<CyclicBlock> blocks;
  /// Columns v, Av, A^2 v, ... for each block.
  Matrix conjugator;
  /// conjugator^-1 m conjugator: companion matrices of q^e on the diagonal.
  Matrix block_diagonal;
  Report report;
};

/// Primary decomposition over F_p. Throws SingularMatrix for a non-invertible m.
ZRepDecomposition decompose_rep_of_Z(const Matrix& m);

/// Convolution algebra dual to F[x_ij]/m^{N+1} with the matrix coproduct;
/// checks a * d0 = a(1) d0 = d0 * a for every dual basis functional a.
struct FormalMatrixIntegral {
  std::size_t functionals = 0;
  /// Exponent vectors over x_11, x_12, ..., x_nn, by degree.
  std::vector<std::vector<unsigned>> monomials;
  /// Product tensor only: the truncated coalgebra has no counit, so the
  /// convolution algebra has no unit.
  FinBialgebra dual;
  Report report;
};
FormalMatrixIntegral formal_matrix_integral(std::size_t n, std::size_t order, Field field);

/// Random representation built from regular, trivial and character pieces,
/// conjugated by a random unitriangular product.
Representation random_representation(const FiniteMonoid& g, Field field, SeededRng& rng, std::size_t max_pieces = 3);

/// pi: M -> M / (G-span of a random vector).
RepMorphism random_quotient(const Representation& rho, SeededRng& rng);

}  // namespace hopfdual
