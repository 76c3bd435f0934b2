#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "hopfdual/catalogue.hpp"
#include "hopfdual/error.hpp"
#include "hopfdual/io.hpp"

using namespace hopfdual;
namespace fs = std::filesystem;

namespace {

const Field Q = Field::rationals();

std::string error_text(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  FAIL("no exception");
  return {};
}

const char* kShuffled = R"({"dim":2,"field":{"kind":"rationals"},"basis":["e","g"],
  "mult":[[1,1,0,"2/2"],[0,1,1,"1"],[0,0,0,"1"],[1,0,1,"3/3"]],
  "unit":["1","0"],"comult":[[1,1,1,"1"],[0,0,0,"1"]],"counit":["1","1"]})";

}  // namespace

TEST_CASE("canonical form sorts entries and reduces scalars") {
  const std::string canon = io::canonicalize(kShuffled);
  FinBialgebra z2 = monoid_algebra(monoids::cyclic(2), Q);
  z2.antipode.reset();
  CHECK(canon == io::write_bialgebra(z2));
  CHECK(io::canonicalize(canon) == canon);

  const std::string halves = R"({"field":{"kind":"rationals"},"dim":1,"basis":["x"],"mult":[[0,0,0,"2/4"]]})";
  CHECK(io::canonicalize(halves).find("\"1/2\"") != std::string::npos);
  const std::string mod5 = R"({"field":{"kind":"prime","p":5},"dim":1,"mult":[[0,0,0,"7"]],"unit":["-4"]})";
  const std::string c5 = io::canonicalize(mod5);
  CHECK(c5.find("[0,0,0,\"2\"]") != std::string::npos);
  CHECK(c5.find("\"unit\": [\"1\"]") != std::string::npos);
}

TEST_CASE("zero coefficients are dropped") {
  auto a = io::parse_bialgebra(R"({"field":{"kind":"rationals"},"dim":1,"mult":[[0,0,0,"0"]],"unit":["1"]})");
  CHECK(a.product(0, 0).empty());
}

TEST_CASE("diagnostics carry a position") {
  CHECK(error_text([] { io::parse_bialgebra("{\"dim\": 2,,}", "f.json"); }).find("f.json: syntax error at byte") !=
        std::string::npos);
  CHECK(error_text([] {
          io::parse_bialgebra(R"({"field":{"kind":"rationals"},"dim":2,"mult":[[0,0,0,"1"],[0,0,0,"2"]]})");
        }).find("/mult/1: duplicate entry") != std::string::npos);
  CHECK(error_text([] {
          io::parse_bialgebra(R"({"field":{"kind":"rationals"},"dim":2,"mult":[[0,1,0,"1/0"]]})");
        }).find("/mult/0/3") != std::string::npos);
  CHECK(error_text([] { io::parse_bialgebra(R"({"field":{"kind":"prime","p":6},"dim":1})"); }).find("/field/p") !=
        std::string::npos);
  CHECK(error_text([] { io::parse_bialgebra(R"({"field":{"kind":"reals"},"dim":1})"); }).find("/field/kind") !=
        std::string::npos);
  CHECK(error_text([] { io::parse_bialgebra(R"({"field":{"kind":"rationals"}})"); }).find("missing key \"dim\"") !=
        std::string::npos);
  CHECK(error_text([] {
          io::parse_bialgebra(R"({"field":{"kind":"rationals"},"dim":2,"unit":["1"]})");
        }).find("/unit") != std::string::npos);
  CHECK(error_text([] { io::parse_monoid(R"({"elements":["a","b"],"table":[[0,1],[1,0]],"unit":1})"); })
            .find("ParseError") != std::string::npos);
  CHECK(error_text([] { io::parse_lie(R"({"dim":2,"basis":["x","y"],"brackets":[[1,0,[]]]})"); })
            .find("/brackets/0") != std::string::npos);
  CHECK(error_text([] { io::detect_kind("[1,2]"); }).find("expected a JSON object") != std::string::npos);
}

TEST_CASE("round trips") {
  for (const auto& b : catalogue::bialgebra_corpus()) {
    CAPTURE(b.file);
    const std::string text = io::write_bialgebra(b.algebra);
    const FinBialgebra back = io::parse_bialgebra(text);
    CHECK(io::write_bialgebra(back) == text);
    CHECK(back.basis == b.algebra.basis);
    CHECK(back.filtration == b.algebra.filtration);
  }
  for (const auto& l : catalogue::lie_corpus()) {
    const LieAlgebra back = io::parse_lie(io::write_lie(l.lie));
    CHECK(back.brackets == l.lie.brackets);
  }
  const Matrix m = Matrix::from_ints(Field::prime(7), {{1, 6}, {3, 0}});
  CHECK(io::parse_matrix(io::write_matrix(m)) == m);
  CHECK(io::parse_matrix(R"({"matrix":[["8","-1"],["3","0"]]})", "m", Field::prime(7)) == m);

  const auto s3 = catalogue::s3_standard(Q);
  const auto rep = io::parse_representation(io::write_representation(s3));
  CHECK(rep.rep.action == s3.action);
  CHECK(rep.rep.monoid == s3.monoid);

  const io::MonoidFile factors{FiniteAbelianGroup({2, 6}).to_monoid(), std::vector<std::uint64_t>{2, 6}};
  const io::MonoidFile back = io::parse_monoid(io::write_monoid(factors));
  CHECK(back.invariant_factors == factors.invariant_factors);
  CHECK(back.monoid == factors.monoid);
}

TEST_CASE("fnv1a64") {
  CHECK(io::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(io::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(io::fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("shipped corpus is canonical and matches the catalogue") {
  const fs::path root = io::corpus_dir();
  REQUIRE(fs::is_directory(root));
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.path().extension() != ".json" || entry.path().parent_path().filename() == "quotients") continue;
    CAPTURE(entry.path().string());
    const std::string text = io::read_file(entry.path());
    CHECK(io::canonicalize(text, entry.path().string(), entry.path().parent_path()) == text);
    ++files;
  }
  CHECK(files >= 30);

  const auto bialgebras = catalogue::bialgebra_corpus();
  CHECK(bialgebras.size() >= 10);
  for (const auto& b : bialgebras) {
    CAPTURE(b.file);
    const std::string text = io::read_file(root / "bialgebras" / b.file);
    CHECK(text == io::write_bialgebra(b.algebra));
  }
  for (const auto& l : catalogue::lie_corpus())
    CHECK(io::read_file(root / "lie" / l.file) == io::write_lie(l.lie));
  for (const auto& m : catalogue::monoid_corpus())
    CHECK(io::parse_monoid(io::read_file(root / "monoids" / m.file)).monoid == m.monoid);
  for (const auto& [name, rho] : catalogue::s3_representations(Q)) {
    const fs::path p = root / "reps" / ("s3_" + name + ".json");
    CHECK(io::parse_representation(io::read_file(p), p.string(), p.parent_path()).rep.action == rho.action);
  }
}
