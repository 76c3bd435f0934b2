#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hopfdual/catalogue.hpp"
#include "hopfdual/error.hpp"
#include "hopfdual/tannaka.hpp"

using namespace hopfdual;

namespace {

const Field Q = Field::rationals();

bool has_check(const Report& r, const std::string& name) {
  const auto& c = r.checks();
  return std::any_of(c.begin(), c.end(), [&](const Check& k) { return k.name == name && k.passed; });
}

// Gaussian elimination on the flattened action matrices, written out
// directly so the span count does not go through the library's rref.
std::size_t brute_span(const Representation& x) {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& m : x.action) {
    std::vector<mpq_class> row;
    for (std::size_t i = 0; i < x.dim; ++i)
      for (std::size_t j = 0; j < x.dim; ++j) row.push_back(m(i, j).rational());
    rows.push_back(row);
  }
  std::size_t rank = 0;
  const std::size_t cols = x.dim * x.dim;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class t = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= t * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("annihilator quotient of the trivial representation is one-dimensional") {
  auto r = annihilator_quotient(rep_to_module(trivial_representation(monoids::symmetric3(), Q)));
  CHECK(r.report.passed());
  CHECK(r.algebra.dim == 1);
  CHECK_FALSE(r.degenerate);
  // every g maps to the single basis element
  for (std::size_t g = 0; g < 6; ++g) CHECK(r.quotient_map(0, g) == Scalar(Q, 1L));
}

TEST_CASE("regular representation is faithful") {
  for (const auto& g : {monoids::symmetric3(), monoids::cyclic(5), monoids::dihedral(4)}) {
    auto r = annihilator_quotient(rep_to_module(regular_representation(g, Q)));
    CHECK(r.report.passed());
    CHECK(r.algebra.dim == g.size());
    CHECK(r.algebra.has_coalgebra());
  }
}

TEST_CASE("zero module gives the degenerate zero algebra") {
  const FinBialgebra rg = monoid_algebra(monoids::cyclic(3), Q);
  AlgebraModule zero{rg, 0, std::vector<Matrix>(3, Matrix(Q, 0, 0))};
  auto r = annihilator_quotient(zero);
  CHECK(r.degenerate);
  CHECK(r.algebra.dim == 0);
  CHECK(r.report.passed());
}

TEST_CASE("non-faithful quotients keep only the algebra") {
  auto rho = catalogue::s3_standard(Q);
  auto r = annihilator_quotient(rep_to_module(rho));
  CHECK(r.report.passed());
  CHECK(r.algebra.dim == 4);
  CHECK_FALSE(r.algebra.has_coalgebra());
  CHECK(r.basis_elements.size() == 4);

  auto sign = annihilator_quotient(rep_to_module(catalogue::s3_sign(Q)));
  CHECK(sign.algebra.dim == 1);
  // e and (12) differ in the quotient only by a sign
  CHECK(sign.quotient_map(0, 1) == Scalar(Q, -1L));
}

TEST_CASE("reconstruction is idempotent") {
  for (const auto& [name, rho] : catalogue::s3_representations(Q)) {
    CAPTURE(name);
    auto once = annihilator_quotient(rep_to_module(rho));
    auto twice = annihilator_quotient(once.faithful_action);
    CHECK(twice.algebra.dim == once.algebra.dim);
    CHECK(twice.quotient_map == Matrix::identity(Q, once.algebra.dim));
    CHECK(compare_structures(once.algebra, twice.algebra).passed());
    CHECK(once.algebra.dim <= std::min<std::size_t>(6, rho.dim * rho.dim));
  }
}

TEST_CASE("reconstruct_from_regular") {
  CHECK(reconstruct_from_regular(monoids::cyclic(1), Q).passed());
  CHECK(reconstruct_from_regular(monoids::symmetric3(), Q).passed());
  CHECK(reconstruct_from_regular(monoids::cyclic(4), Field::prime(5)).passed());
  for (std::size_t n = 2; n <= 8; ++n) CHECK(reconstruct_from_regular(monoids::cyclic(n), Q).passed());
  CHECK(reconstruct_from_regular(monoids::dihedral(4), Q).passed());
  CHECK(reconstruct_from_regular(monoids::multiplicative01(), Q).passed());
}

TEST_CASE("tensor products through the coproduct") {
  const Representation sign = catalogue::s3_sign(Q);
  const Representation triv = trivial_representation(monoids::symmetric3(), Q);
  CHECK(tensor_representation(sign, sign).action == triv.action);
  const Representation std2 = catalogue::s3_standard(Q);
  CHECK(tensor_representation(std2, triv).action == std2.action);
  CHECK(tensor_representation(std2, std2).dim == 4);

  Report r = tensor_coproduct_recovery(monoids::symmetric3(), catalogue::s3_representations(Q));
  CHECK(r.passed());
  CHECK(has_check(r, "standard (x) standard"));
  CHECK(has_check(r, "sign (x) regular"));
  CHECK(has_check(r, "regular^v"));

  for (std::size_t n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(tensor_coproduct_recovery(monoids::cyclic(n), catalogue::cyclic_representations(n)).passed());
  }
  CHECK(tensor_coproduct_recovery(monoids::multiplicative01(),
                                  {{"regular", regular_representation(monoids::multiplicative01(), Q)}})
            .passed());
}

TEST_CASE("contragredient") {
  const Representation std2 = catalogue::s3_standard(Q);
  const Representation dual = contragredient(std2);
  CHECK(verify_representation(dual).passed());
  CHECK(contragredient(dual).action == std2.action);
  CHECK_THROWS_AS(contragredient(regular_representation(monoids::multiplicative01(), Q)), Error);
}

TEST_CASE("image span dimension") {
  CHECK(image_span_dimension(trivial_representation(monoids::symmetric3(), Q)) == 1);
  CHECK(image_span_dimension(catalogue::s3_standard(Q)) == 4);
  CHECK(image_span_dimension(regular_representation(monoids::symmetric3(), Q)) == 6);
  CHECK(image_span_dimension(catalogue::s3_permutation(Q)) == 5);
  for (const auto& [name, rho] : catalogue::s3_representations(Q)) {
    CAPTURE(name);
    CHECK(image_span_dimension(rho) == brute_span(rho));
    CHECK(image_span_dimension(rho) == annihilator_quotient(rep_to_module(rho)).algebra.dim);
  }
  const auto reps = catalogue::s3_representations(Q);
  for (const auto& x : reps)
    for (const auto& y : reps) CHECK(image_span_monotonicity(x.second, y.second).passed());
  // trivial + sign sees exactly the two one-dimensional characters
  CHECK(image_span_dimension(direct_sum(reps[0].second, reps[1].second)) == 2);
}
