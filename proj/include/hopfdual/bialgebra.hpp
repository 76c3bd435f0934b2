#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfdual/field.hpp"
#include "hopfdual/matrix.hpp"
#include "hopfdual/report.hpp"

namespace hopfdual {

/// Sorted (index, coefficient) list without zero coefficients.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;
/// Accumulator used while building sparse vectors.
using LinComb = std::map<std::size_t, Scalar>;

void accumulate(LinComb& acc, std::size_t index, const Scalar& coeff);
SparseVec to_sparse(const LinComb& acc);
SparseVec to_sparse(const Vector& dense);
Vector to_dense(const SparseVec& v, Field field, std::size_t dim);

/// Finite-dimensional algebra / coalgebra / bialgebra / Hopf algebra given
/// by structure constants. Pair indices (i, j) are flattened to i * dim + j.
///
///   e_i e_j  = sum_k mult[i*dim+j][k] e_k
///   Delta e_k = sum_{i,j} comult[k][i*dim+j] e_i (x) e_j
///
/// When `filtration` is set the structure is partial: products (and every
/// identity that involves them) are only defined when the degree sum stays
/// within the largest degree, as for truncated enveloping and
/// distribution algebras.
struct FinBialgebra {
  Field field = Field::rationals();
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::optional<std::vector<unsigned>> filtration;
  std::optional<std::vector<SparseVec>> mult;
  std::optional<Vector> unit;
  std::optional<std::vector<SparseVec>> comult;
  std::optional<Vector> counit;
  std::optional<Matrix> antipode;

  bool has_algebra() const { return mult.has_value() && unit.has_value(); }
  bool has_coalgebra() const { return comult.has_value() && counit.has_value(); }
  bool has_bialgebra() const { return has_algebra() && has_coalgebra(); }
  bool has_antipode() const { return antipode.has_value(); }

  unsigned degree(std::size_t i) const { return filtration ? (*filtration)[i] : 0; }
  unsigned max_degree() const;
  bool product_defined(std::size_t i, std::size_t j) const;

  const SparseVec& product(std::size_t i, std::size_t j) const { return (*mult)[i * dim + j]; }
  const SparseVec& coproduct(std::size_t k) const { return (*comult)[k]; }

  /// Bilinear extension of the product (undefined pairs contribute their
  /// stored value, which builders leave at zero).
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Dense coordinates in A (x) A.
  Vector comultiply(const Vector& a) const;
  Scalar apply_counit(const Vector& a) const;
  Vector unit_vector() const { return *unit; }
};

/// Throws DimensionMismatch/FieldMismatch on malformed tensors.
void validate_shapes(const FinBialgebra& a);

Report verify_algebra(const FinBialgebra& a);
Report verify_coalgebra(const FinBialgebra& a);
Report verify_bialgebra(const FinBialgebra& a);
/// Checks m(S (x) id)Delta = u e = m(id (x) S)Delta; throws AntipodeAbsent.
Report check_hopf(const FinBialgebra& a);
/// Solves the linear system for an antipode; nullopt when inconsistent.
std::optional<Matrix> find_antipode(const FinBialgebra& a);

bool is_commutative(const FinBialgebra& a);
bool is_cocommutative(const FinBialgebra& a);

/// Dual under the dual-basis convention <e_i*, e_j> = delta_ij: product and
/// coproduct tensors trade places, unit and counit swap, the antipode is
/// transposed. Basis names gain or lose a trailing '*'.
FinBialgebra dualize(const FinBialgebra& a);

/// Tensor product with basis (a, b) -> a * dim(B) + b.
FinBialgebra tensor_bialgebra(const FinBialgebra& a, const FinBialgebra& b);

/// The 1-dimensional bialgebra F with S = id.
FinBialgebra unit_bialgebra(Field field);

/// Compares structure constants entry by entry (names are ignored).
Report compare_structures(const FinBialgebra& a, const FinBialgebra& b);

enum class MorphismKind { Algebra, Coalgebra, Bialgebra };

struct BialgebraMorphism {
  FinBialgebra source;
  FinBialgebra target;
  Matrix matrix;  // target.dim x source.dim
};

Report check_morphism(const BialgebraMorphism& f, MorphismKind kind);
Report check_morphism(const FinBialgebra& source, const FinBialgebra& target, const Matrix& map,
                      MorphismKind kind);

/// Basis of {a : Delta a = a (x) 1 + 1 (x) a}.
std::vector<Vector> primitives(const FinBialgebra& a);
bool check_grouplike(const FinBialgebra& a, const Vector& x);

std::string dual_name(const std::string& name);

}  // namespace hopfdual
