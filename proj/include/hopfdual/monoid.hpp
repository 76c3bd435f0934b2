#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfdual/bialgebra.hpp"
#include "hopfdual/field.hpp"
#include "hopfdual/report.hpp"

namespace hopfdual {

/// Finite monoid given by its multiplication table. Construction verifies
/// associativity and the unit law.
class FiniteMonoid {
 public:
  FiniteMonoid(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table, std::size_t unit);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t g) const { return names_.at(g); }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  std::size_t unit() const noexcept { return unit_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  bool is_group() const noexcept { return is_group_; }
  bool is_abelian() const noexcept { return is_abelian_; }
  /// Two-sided inverse; nullopt when g is not invertible.
  std::optional<std::size_t> inverse(std::size_t g) const;
  /// Least n >= 1 with g^n = 1 (groups only).
  std::size_t order_of(std::size_t g) const;
  std::size_t exponent() const;
  std::optional<std::size_t> find(const std::string& name) const;

  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t unit_;
  bool is_group_ = false;
  bool is_abelian_ = false;
};

namespace monoids {
FiniteMonoid trivial();
FiniteMonoid cyclic(std::size_t n);
/// Elements (a, b) indexed a * |B| + b.
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);
/// Permutations of {0,1,2}; index 0 is the identity.
FiniteMonoid symmetric3();
/// Symmetries of the regular n-gon (order 2n): r^k s^e at index 2k + e.
FiniteMonoid dihedral(std::size_t n);
/// {1, 0} under multiplication.
FiniteMonoid multiplicative01();
}  // namespace monoids

/// Finite abelian group Z/d_1 x ... x Z/d_k with d_i | d_{i+1}, d_i >= 2.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> invariant_factors);

  const std::vector<std::uint64_t>& invariant_factors() const noexcept { return factors_; }
  std::uint64_t order() const;
  std::uint64_t exponent() const;
  /// Direct product of cyclic tables, mixed radix with the last factor fastest.
  FiniteMonoid to_monoid() const;

  /// Every invariant-factor decomposition of a group of order n.
  static std::vector<FiniteAbelianGroup> all_of_order(std::uint64_t n);

 private:
  std::vector<std::uint64_t> factors_;
};

/// Multiplicative character: one nonzero value per element.
struct Character {
  std::vector<Scalar> values;
};

/// Verifies chi(gh) = chi(g)chi(h), chi(1) = 1.
Report verify_character(const FiniteMonoid& g, const Character& chi);

/// RG: basis g, product from the table, Delta g = g (x) g, e(g) = 1,
/// S(g) = g^-1 when G is a group.
FinBialgebra monoid_algebra(const FiniteMonoid& g, Field field);

/// R^G: basis delta_g, pointwise product, Delta delta_g = sum_{hk=g} delta_h (x) delta_k.
FinBialgebra function_bialgebra(const FiniteMonoid& g, Field field);

/// dualize(RG) = R^G and dualize(R^G) = RG on structure constants.
Report cartier_check(const FiniteMonoid& g, Field field);

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;

/// All unital multiplicative linear maps A -> F_p, as value vectors on the
/// basis, in lexicographic order of the values on the chosen generators.
/// Throws BudgetExceeded when the pruned search visits more candidates than
/// `budget`.
std::vector<Vector> points(const FinBialgebra& a, std::uint64_t budget = kDefaultPointBudget);

/// Generators picked greedily from the basis (indices), as used by points.
std::vector<std::size_t> greedy_generators(const FinBialgebra& a);

struct DualMonoid {
  FiniteMonoid monoid;
  /// characters[c][g] = value of the c-th point on element g.
  std::vector<Vector> characters;
};

/// Points of Spec RG over F_p under pointwise product.
DualMonoid dual_monoid(const FiniteMonoid& g, Field prime_field, std::uint64_t budget = kDefaultPointBudget);

/// Checks that evaluation g -> (chi -> chi(g)) is an isomorphism G -> G**.
/// Throws InsufficientRoots unless exp(G) | p - 1.
Report double_dual_check(const FiniteAbelianGroup& g, Field prime_field);

/// Truncated algebra of a finitely generated submonoid of Z^n.
struct SubmonoidAlgebra {
  std::vector<long> grading;
  bool grading_supplied = false;
  unsigned degree_bound = 0;
  /// Elements of grade <= bound, sorted by (grade, coordinates).
  std::vector<std::vector<long>> elements;
  std::vector<unsigned> grades;
  /// dims_by_grade[k] = number of elements of grade k.
  std::vector<std::size_t> dims_by_grade;
  /// e_a e_b = e_{a+b} when the grade stays within the bound.
  FinBialgebra algebra;
  Report report;
};

/// Throws NotPositivelyGraded when no functional makes every generator
/// positive (searched over integer vectors of sup-norm <= 8 when absent).
SubmonoidAlgebra submonoid_algebra(const std::vector<std::vector<long>>& generators, unsigned degree_bound,
                                   std::optional<std::vector<long>> grading = std::nullopt,
                                   Field field = Field::rationals());

}  // namespace hopfdual
