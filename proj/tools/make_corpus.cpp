// Regenerates the canned example files: make_corpus <dir>
#include <filesystem>
#include <iostream>

#include "hopfdual/catalogue.hpp"
#include "hopfdual/io.hpp"

using namespace hopfdual;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <dir>\n";
    return 2;
  }
  const fs::path root = argv[1];
  for (const char* d : {"bialgebras", "monoids", "reps", "lie", "matrices", "quotients"}) fs::create_directories(root / d);
  auto put = [&](const fs::path& rel, const std::string& text) {
    io::write_file(root / rel, text);
    std::cout << rel.string() << "\n";
  };

  for (const auto& b : catalogue::bialgebra_corpus()) put(fs::path("bialgebras") / b.file, io::write_bialgebra(b.algebra));
  for (const auto& m : catalogue::monoid_corpus()) put(fs::path("monoids") / m.file, io::write_monoid(m.monoid));
  for (std::uint64_t n : {8, 16}) {
    put("monoids/z2xz" + std::to_string(n / 2) + "_factors.json",
        io::write_monoid(io::MonoidFile{FiniteAbelianGroup({2, n / 2}).to_monoid(), std::vector<std::uint64_t>{2, n / 2}}));
  }
  for (const auto& l : catalogue::lie_corpus()) put(fs::path("lie") / l.file, io::write_lie(l.lie));

  const Field q = Field::rationals();
  for (const auto& [name, rho] : catalogue::s3_representations(q))
    put("reps/s3_" + name + ".json", io::write_representation(io::RepFile{rho, "../monoids/s3.json", std::nullopt}));
  put("reps/s3_permutation.json",
      io::write_representation(io::RepFile{catalogue::s3_permutation(q), "../monoids/s3.json", std::nullopt}));
  put("reps/z3_regular.json", io::write_representation(io::RepFile{regular_representation(monoids::cyclic(3), q),
                                                                   "../monoids/z3.json", std::nullopt}));

  // swap action of Z/2 on F_2^2 in the basis e0 + e1, e1: not semisimple
  const Field f2 = Field::prime(2);
  const Representation unipotent{monoids::cyclic(2), f2, 2,
                                 {Matrix::identity(f2, 2), Matrix::from_ints(f2, {{1, 1}, {0, 1}})}};
  put("reps/z2_unipotent_f2.json", io::write_representation(io::RepFile{unipotent, "../monoids/z2.json", std::nullopt}));
  const Representation swap{monoids::cyclic(2), q, 2, {Matrix::identity(q, 2), Matrix::from_ints(q, {{0, 1}, {1, 0}})}};
  put("reps/z2_swap.json", io::write_representation(io::RepFile{swap, "../monoids/z2.json", std::nullopt}));
  put("quotients/first_line.json", "{\n  \"subspace\": [\n    [\"1\", \"0\"]\n  ]\n}\n");
  put("quotients/diagonal.json", "{\n  \"subspace\": [\n    [\"1\", \"1\"]\n  ]\n}\n");

  const Field f5 = Field::prime(5);
  put("matrices/jordan_f5.json", io::write_matrix(Matrix::from_ints(f5, {{2, 1, 0}, {0, 2, 0}, {0, 0, 3}})));
  put("matrices/rotation_f5.json", io::write_matrix(Matrix::from_ints(f5, {{0, 4}, {1, 0}})));
  put("matrices/mixed_f5.json",
      io::write_matrix(Matrix::from_ints(f5, {{1, 2, 0, 0}, {3, 1, 4, 0}, {0, 0, 2, 1}, {1, 0, 0, 3}})));
  return 0;
}
