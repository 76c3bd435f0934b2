#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfdual/bialgebra.hpp"
#include "hopfdual/lie.hpp"
#include "hopfdual/monoid.hpp"
#include "hopfdual/representation.hpp"

namespace hopfdual::catalogue {

using NamedRep = std::pair<std::string, Representation>;

/// Permutation matrices of S3 acting on F^3.
Representation s3_permutation(Field field);
Representation s3_sign(Field field);
/// The sum-zero plane of the permutation representation, basis e0-e1, e1-e2.
Representation s3_standard(Field field);

/// trivial, sign, standard, regular.
std::vector<NamedRep> s3_representations(Field field = Field::rationals());
/// trivial, regular and (for n > 2) the quotient of the regular one by its invariants.
std::vector<NamedRep> cyclic_representations(std::size_t n, Field field = Field::rationals());

struct CorpusBialgebra {
  std::string file;
  FinBialgebra algebra;
  /// False for the deliberately corrupted examples.
  bool valid = true;
};

/// The bialgebra files shipped in the corpus directory.
std::vector<CorpusBialgebra> bialgebra_corpus();

/// Z/2 over Q with the product g e set to 0 (associativity and the right
/// unit law fail).
FinBialgebra corrupted_z2();
/// R^(Z/3) carrying the group-like coproduct of its basis.
FinBialgebra corrupted_diagonal_z3();

struct CorpusLie {
  std::string file;
  LieAlgebra lie;
};
std::vector<CorpusLie> lie_corpus();

struct CorpusMonoid {
  std::string file;
  FiniteMonoid monoid;
};
std::vector<CorpusMonoid> monoid_corpus();

}  // namespace hopfdual::catalogue
