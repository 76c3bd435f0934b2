#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "hopfdual/error.hpp"
#include "hopfdual/monoid.hpp"

using namespace hopfdual;

namespace {

const Field Q = Field::rationals();

std::vector<std::uint64_t> residues(const Vector& v) {
  std::vector<std::uint64_t> out;
  for (const auto& x : v) out.push_back(x.residue());
  return out;
}

// Exhaustive oracle: every linear form on A over F_p, kept when it is
// unital and multiplicative on basis pairs.
std::set<std::vector<std::uint64_t>> brute_force_points(const FinBialgebra& a) {
  const std::uint64_t p = a.field.characteristic();
  std::set<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> v(a.dim, 0);
  while (true) {
    Vector phi;
    for (auto x : v) phi.emplace_back(a.field, static_cast<long>(x));
    Scalar at_unit(a.field);
    for (std::size_t i = 0; i < a.dim; ++i) at_unit += (*a.unit)[i] * phi[i];
    bool ok = at_unit.is_one();
    for (std::size_t i = 0; ok && i < a.dim; ++i)
      for (std::size_t j = 0; ok && j < a.dim; ++j) {
        Scalar lhs(a.field);
        for (const auto& [k, c] : a.product(i, j)) lhs += c * phi[k];
        ok = lhs == phi[i] * phi[j];
      }
    if (ok) out.insert(v);
    std::size_t i = 0;
    while (i < a.dim && ++v[i] == p) v[i++] = 0;
    if (i == a.dim) break;
  }
  return out;
}

std::set<std::vector<std::uint64_t>> as_set(const std::vector<Vector>& pts) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& p : pts) out.insert(residues(p));
  return out;
}

}  // namespace

TEST_CASE("monoid tables are validated") {
  CHECK_THROWS_AS(FiniteMonoid({"a", "b"}, {{0, 1}, {0, 0}}, 0), Error);
  CHECK_THROWS_AS(FiniteMonoid({"e", "a", "b"}, {{0, 1, 2}, {1, 2, 2}, {2, 0, 0}}, 0), Error);
  CHECK_THROWS_AS(FiniteMonoid({"e"}, {{1}}, 0), Error);
  FiniteMonoid s3 = monoids::symmetric3();
  CHECK(s3.is_group());
  CHECK_FALSE(s3.is_abelian());
  CHECK(monoids::dihedral(4).size() == 8);
  CHECK(monoids::dihedral(4).is_group());
  CHECK_FALSE(monoids::dihedral(4).is_abelian());
  CHECK_FALSE(monoids::multiplicative01().is_group());
  CHECK(monoids::multiplicative01().is_abelian());
  CHECK(monoids::cyclic(6).exponent() == 6);
  CHECK(s3.exponent() == 6);
}

TEST_CASE("abelian groups by invariant factors") {
  CHECK_THROWS_AS(FiniteAbelianGroup({4, 2}), Error);
  CHECK_THROWS_AS(FiniteAbelianGroup({1}), Error);
  FiniteAbelianGroup g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  FiniteMonoid m = g.to_monoid();
  CHECK(m.is_group());
  CHECK(m.is_abelian());
  CHECK(m.exponent() == 4);
  // counts of isomorphism classes: partitions of the prime exponents
  CHECK(FiniteAbelianGroup::all_of_order(1).size() == 1);
  CHECK(FiniteAbelianGroup::all_of_order(8).size() == 3);
  CHECK(FiniteAbelianGroup::all_of_order(12).size() == 2);
  CHECK(FiniteAbelianGroup::all_of_order(16).size() == 5);
  CHECK(FiniteAbelianGroup::all_of_order(36).size() == 4);
  for (std::uint64_t n = 1; n <= 16; ++n)
    for (const auto& a : FiniteAbelianGroup::all_of_order(n)) CHECK(a.order() == n);
}

TEST_CASE("monoid_algebra") {
  FinBialgebra t = monoid_algebra(monoids::trivial(), Q);
  CHECK(t.dim == 1);
  CHECK(verify_bialgebra(t).passed());

  FinBialgebra s3 = monoid_algebra(monoids::symmetric3(), Q);
  CHECK(s3.dim == 6);
  CHECK(is_cocommutative(s3));
  CHECK_FALSE(is_commutative(s3));
  CHECK(verify_bialgebra(s3).passed());
  CHECK(check_hopf(s3).passed());

  FinBialgebra m01 = monoid_algebra(monoids::multiplicative01(), Q);
  CHECK(m01.dim == 2);
  CHECK(verify_bialgebra(m01).passed());
  CHECK_FALSE(m01.has_antipode());
  CHECK_FALSE(find_antipode(m01).has_value());
}

TEST_CASE("function_bialgebra") {
  FinBialgebra f = function_bialgebra(monoids::cyclic(2), Q);
  const Scalar one(Q, 1L);
  CHECK(f.coproduct(0) == SparseVec{{0, one}, {3, one}});  // delta_e (x) delta_e + delta_g (x) delta_g
  CHECK(function_bialgebra(monoids::trivial(), Q).dim == 1);
  FinBialgebra s3 = function_bialgebra(monoids::symmetric3(), Q);
  CHECK(is_commutative(s3));
  CHECK_FALSE(is_cocommutative(s3));
  CHECK(verify_bialgebra(s3).passed());
  CHECK(check_hopf(s3).passed());
}

TEST_CASE("cocommutativity of function algebras tracks commutativity of G") {
  for (const auto& g : {monoids::cyclic(5), monoids::symmetric3(), monoids::dihedral(4), monoids::multiplicative01(),
                        FiniteAbelianGroup({2, 2}).to_monoid()}) {
    CHECK(is_cocommutative(monoid_algebra(g, Q)));
    CHECK(is_cocommutative(function_bialgebra(g, Q)) == g.is_abelian());
  }
}

TEST_CASE("cartier_check") {
  CHECK(cartier_check(monoids::cyclic(2), Q).passed());
  CHECK(cartier_check(monoids::trivial(), Q).passed());
  CHECK(cartier_check(FiniteAbelianGroup({2, 2}).to_monoid(), Field::prime(3)).passed());
  CHECK(cartier_check(monoids::symmetric3(), Q).passed());
  CHECK(cartier_check(monoids::multiplicative01(), Q).passed());
}

TEST_CASE("points of group algebras") {
  const Field f5 = Field::prime(5);
  auto p2 = points(monoid_algebra(monoids::cyclic(2), f5));
  REQUIRE(p2.size() == 2);
  CHECK(p2[0][1].residue() == 1);
  CHECK(p2[1][1].residue() == 4);

  auto p4 = points(monoid_algebra(monoids::cyclic(4), f5));
  REQUIRE(p4.size() == 4);
  std::set<std::uint64_t> images;
  for (const auto& p : p4) images.insert(p[1].residue());
  CHECK(images == std::set<std::uint64_t>{1, 2, 3, 4});
}

TEST_CASE("points agree with exhaustive enumeration") {
  std::vector<FinBialgebra> algebras = {
      monoid_algebra(monoids::cyclic(3), Field::prime(7)),
      monoid_algebra(monoids::cyclic(4), Field::prime(7)),
      monoid_algebra(FiniteAbelianGroup({2, 2}).to_monoid(), Field::prime(3)),
      monoid_algebra(monoids::multiplicative01(), Field::prime(5)),
      function_bialgebra(monoids::symmetric3(), Field::prime(3)),
      function_bialgebra(monoids::cyclic(4), Field::prime(5)),
      dualize(function_bialgebra(monoids::cyclic(3), Field::prime(7))),
  };
  for (const auto& a : algebras) CHECK(as_set(points(a)) == brute_force_points(a));
  // zero-valued characters are included for monoids with an absorbing element
  CHECK(points(monoid_algebra(monoids::multiplicative01(), Field::prime(5))).size() == 2);
}

TEST_CASE("function algebras have one point per element") {
  for (const auto& [g, p] : {std::pair{monoids::symmetric3(), 5u}, std::pair{monoids::dihedral(4), 3u},
                             std::pair{FiniteAbelianGroup({2, 8}).to_monoid(), 17u}}) {
    auto pts = points(function_bialgebra(g, Field::prime(p)));
    CHECK(pts.size() == g.size());
  }
}

TEST_CASE("point counts of abelian group algebras") {
  for (std::uint64_t n = 1; n <= 12; ++n)
    for (const auto& a : FiniteAbelianGroup::all_of_order(n))
      for (std::uint64_t p : {2, 3, 5, 7, 13}) {
        std::uint64_t expected = 1;
        for (auto d : a.invariant_factors()) expected *= std::gcd(d, p - 1);
        CHECK(points(monoid_algebra(a.to_monoid(), Field::prime(p))).size() == expected);
      }
}

TEST_CASE("point search errors") {
  CHECK_THROWS_AS(points(monoid_algebra(monoids::cyclic(3), Q)), Error);
  CHECK_THROWS_AS(points(monoid_algebra(monoids::symmetric3(), Field::prime(5))), Error);
  try {
    points(function_bialgebra(monoids::cyclic(8), Field::prime(17)), 10);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("dual_monoid") {
  DualMonoid d = dual_monoid(monoids::cyclic(4), Field::prime(5));
  CHECK(d.monoid.size() == 4);
  CHECK(d.monoid.is_group());
  std::size_t max_order = 0;
  for (std::size_t x = 0; x < 4; ++x) max_order = std::max(max_order, d.monoid.order_of(x));
  CHECK(max_order == 4);

  CHECK(dual_monoid(monoids::trivial(), Field::prime(2)).monoid.size() == 1);
  DualMonoid d7 = dual_monoid(monoids::cyclic(4), Field::prime(7));
  CHECK(d7.monoid.size() == 2);
  CHECK(d7.monoid.is_group());
  CHECK_THROWS_AS(dual_monoid(monoids::symmetric3(), Field::prime(7)), Error);

  // characters of {1,0} include the one sending 0 to 0
  DualMonoid m = dual_monoid(monoids::multiplicative01(), Field::prime(3));
  CHECK(m.monoid.size() == 2);
  CHECK_FALSE(m.monoid.is_group());
}

TEST_CASE("double_dual_check") {
  CHECK(double_dual_check(FiniteAbelianGroup({4}), Field::prime(5)).passed());
  CHECK(double_dual_check(FiniteAbelianGroup({}), Field::prime(2)).passed());
  CHECK(double_dual_check(FiniteAbelianGroup({}), Field::prime(11)).passed());
  CHECK(double_dual_check(FiniteAbelianGroup({2, 4}), Field::prime(17)).passed());
  try {
    double_dual_check(FiniteAbelianGroup({4}), Field::prime(7));
    FAIL("expected InsufficientRoots");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientRoots);
  }
}

TEST_CASE("submonoid_algebra") {
  SubmonoidAlgebra n = submonoid_algebra({{1}}, 4);
  CHECK(n.algebra.dim == 5);
  CHECK(n.grading == std::vector<long>{1});
  CHECK(is_commutative(n.algebra));
  CHECK(verify_algebra(n.algebra).passed());
  // t^1 * t^3 = t^4, t^2 * t^3 falls outside the truncation
  CHECK(n.algebra.product(1, 3) == SparseVec{{4, Scalar(Q, 1L)}});
  CHECK(n.algebra.product(2, 3).empty());

  SubmonoidAlgebra ns = submonoid_algebra({{2}, {3}}, 6);
  CHECK(ns.elements.size() == 6);
  CHECK(ns.elements == std::vector<std::vector<long>>{{0}, {2}, {3}, {4}, {5}, {6}});
  CHECK(ns.report.passed());

  SubmonoidAlgebra toric = submonoid_algebra({{1, 0}, {1, 1}, {1, 2}}, 2);
  CHECK(toric.grading == std::vector<long>{1, 0});
  CHECK(toric.dims_by_grade == std::vector<std::size_t>{1, 3, 5});
  std::vector<std::vector<long>> grade2;
  for (std::size_t i = 0; i < toric.elements.size(); ++i)
    if (toric.grades[i] == 2) grade2.push_back(toric.elements[i]);
  CHECK(grade2 == std::vector<std::vector<long>>{{2, 0}, {2, 1}, {2, 2}, {2, 3}, {2, 4}});

  CHECK_THROWS_AS(submonoid_algebra({{1}, {-1}}, 3), Error);
  CHECK_THROWS_AS(submonoid_algebra({{1, 0}}, 3, std::vector<long>{0, 1}), Error);
  SubmonoidAlgebra supplied = submonoid_algebra({{1, 0}, {0, 1}}, 2, std::vector<long>{1, 1});
  CHECK(supplied.grading_supplied);
  CHECK(supplied.dims_by_grade == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("characters") {
  FiniteMonoid s3 = monoids::symmetric3();
  Character sign{{Scalar(Q, 1L), Scalar(Q, -1L), Scalar(Q, -1L), Scalar(Q, -1L), Scalar(Q, 1L), Scalar(Q, 1L)}};
  CHECK(verify_character(s3, sign).passed());
  Character bogus{{Scalar(Q, 1L), Scalar(Q, -1L), Scalar(Q, 1L), Scalar(Q, 1L), Scalar(Q, 1L), Scalar(Q, 1L)}};
  CHECK_FALSE(verify_character(s3, bogus).passed());
}
