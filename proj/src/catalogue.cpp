#include "hopfdual/catalogue.hpp"

#include <array>

namespace hopfdual::catalogue {

Representation s3_permutation(Field field) {
  // element order of monoids::symmetric3(): e, (12), (23), (13), (123), (132)
  const std::array<std::array<std::size_t, 3>, 6> images = {
      {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  std::vector<Matrix> action;
  for (const auto& p : images) {
    Matrix m(field, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) m(p[i], i) = Scalar(field, 1L);
    action.push_back(std::move(m));
  }
  return {monoids::symmetric3(), field, 3, std::move(action)};
}

Representation s3_sign(Field field) {
  std::vector<Scalar> values;
  for (long s : {1, -1, -1, -1, 1, 1}) values.emplace_back(field, s);
  return character_representation(monoids::symmetric3(), values);
}

Representation s3_standard(Field field) {
  const Scalar one(field, 1L), zero(field);
  return subrepresentation(s3_permutation(field), {{one, -one, zero}, {zero, one, -one}});
}

std::vector<NamedRep> s3_representations(Field field) {
  return {{"trivial", trivial_representation(monoids::symmetric3(), field)},
          {"sign", s3_sign(field)},
          {"standard", s3_standard(field)},
          {"regular", regular_representation(monoids::symmetric3(), field)}};
}

std::vector<NamedRep> cyclic_representations(std::size_t n, Field field) {
  const FiniteMonoid g = monoids::cyclic(n);
  std::vector<NamedRep> out{{"trivial", trivial_representation(g, field)}, {"regular", regular_representation(g, field)}};
  if (n > 2) {
    Representation reg = regular_representation(g, field);
    out.emplace_back("augmentation", quotient_representation(reg, invariants(reg)).rep);
  }
  return out;
}

FinBialgebra corrupted_z2() {
  FinBialgebra a = monoid_algebra(monoids::cyclic(2), Field::rationals());
  (*a.mult)[1 * 2 + 0].clear();
  return a;
}

FinBialgebra corrupted_diagonal_z3() {
  const Field q = Field::rationals();
  FinBialgebra a = function_bialgebra(monoids::cyclic(3), q);
  a.comult = monoid_algebra(monoids::cyclic(3), q).comult;
  a.antipode.reset();
  return a;
}

std::vector<CorpusBialgebra> bialgebra_corpus() {
  const Field q = Field::rationals();
  std::vector<CorpusBialgebra> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({"z" + std::to_string(n) + ".json", monoid_algebra(monoids::cyclic(n), q)});
  out.push_back({"z2xz2.json", monoid_algebra(FiniteAbelianGroup({2, 2}).to_monoid(), q)});
  out.push_back({"s3.json", monoid_algebra(monoids::symmetric3(), q)});
  out.push_back({"d4.json", monoid_algebra(monoids::dihedral(4), q)});
  out.push_back({"m01.json", monoid_algebra(monoids::multiplicative01(), q)});
  out.push_back({"fun_z3.json", function_bialgebra(monoids::cyclic(3), q)});
  out.push_back({"fun_z2xz2.json", function_bialgebra(FiniteAbelianGroup({2, 2}).to_monoid(), q)});
  out.push_back({"fun_s3.json", function_bialgebra(monoids::symmetric3(), q)});
  out.push_back({"z4_f5.json", monoid_algebra(monoids::cyclic(4), Field::prime(5))});
  out.push_back({"divided_powers_4.json", divided_power_bialgebra(4, q).algebra});
  out.push_back({"divided_powers_8.json", divided_power_bialgebra(8, q).algebra});
  out.push_back({"corrupted_z2.json", corrupted_z2(), false});
  out.push_back({"corrupted_diagonal_z3.json", corrupted_diagonal_z3(), false});
  return out;
}

std::vector<CorpusLie> lie_corpus() {
  return {{"sl2.json", lie_algebras::sl2()},
          {"heisenberg.json", lie_algebras::heisenberg()},
          {"abelian1.json", lie_algebras::abelian(1)},
          {"abelian2.json", lie_algebras::abelian(2)},
          {"abelian3.json", lie_algebras::abelian(3)}};
}

std::vector<CorpusMonoid> monoid_corpus() {
  std::vector<CorpusMonoid> out;
  for (std::size_t n : {2, 3, 4}) out.push_back({"z" + std::to_string(n) + ".json", monoids::cyclic(n)});
  out.push_back({"z2xz2.json", FiniteAbelianGroup({2, 2}).to_monoid()});
  out.push_back({"s3.json", monoids::symmetric3()});
  out.push_back({"d4.json", monoids::dihedral(4)});
  out.push_back({"m01.json", monoids::multiplicative01()});
  return out;
}

}  // namespace hopfdual::catalogue
