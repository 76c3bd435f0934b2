#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "json.hpp"

#include "hopfdual/catalogue.hpp"
#include "hopfdual/cli.hpp"
#include "hopfdual/io.hpp"

using namespace hopfdual;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& rel) { return (io::corpus_dir() / rel).string(); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hopfdual_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

nlohmann::json strip_timing(nlohmann::json doc) {
  doc.erase("timing_ms");
  return doc;
}

}  // namespace

TEST_CASE("verify") {
  CHECK(call({"verify", corpus("bialgebras/s3.json")}).code == 0);
  const Result bad = call({"verify", corpus("bialgebras/corrupted_z2.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("(g,g,g) associativity") != std::string::npos);
  CHECK(call({"verify", corpus("bialgebras/corrupted_diagonal_z3.json")}).code == 1);
  CHECK(call({"verify", corpus("lie/sl2.json")}).code == 0);
  CHECK(call({"verify", corpus("reps/s3_standard.json")}).code == 0);
  CHECK(call({"verify", corpus("monoids/d4.json")}).code == 0);
}

TEST_CASE("exit codes over the whole bialgebra corpus") {
  for (const auto& b : catalogue::bialgebra_corpus()) {
    CAPTURE(b.file);
    CHECK(call({"verify", corpus("bialgebras/" + b.file)}).code == (b.valid ? 0 : 1));
  }
}

TEST_CASE("dualize twice is byte-identical to the canonical input") {
  for (const auto& b : catalogue::bialgebra_corpus()) {
    CAPTURE(b.file);
    const fs::path once = scratch("once.json"), twice = scratch("twice.json");
    CHECK(call({"dualize", corpus("bialgebras/" + b.file), "-o", once.string()}).code == 0);
    call({"dualize", once.string(), "-o", twice.string()});
    CHECK(io::read_file(twice) == io::read_file(corpus("bialgebras/" + b.file)));
  }
  const Result to_stdout = call({"dualize", corpus("bialgebras/z3.json")});
  CHECK(compare_structures(io::parse_bialgebra(to_stdout.out), function_bialgebra(monoids::cyclic(3), Field::rationals()))
            .passed());
}

TEST_CASE("canonicalize") {
  const fs::path shuffled = scratch("shuffled.json");
  io::write_file(shuffled, R"({"basis":["e","g"],"dim":2,"field":{"kind":"rationals"},
    "mult":[[1,1,0,"4/4"],[0,1,1,"1"],[1,0,1,"1"],[0,0,0,"1"]],"unit":["1","0"],
    "comult":[[1,1,1,"1"],[0,0,0,"1"]],"counit":["1","1"],"antipode":[["1","0"],["0","1"]]})");
  const Result r = call({"canonicalize", shuffled.string()});
  CHECK(r.code == 0);
  CHECK(r.out == io::read_file(corpus("bialgebras/z2.json")));
  CHECK(call({"canonicalize", corpus("lie/heisenberg.json")}).out == io::read_file(corpus("lie/heisenberg.json")));
}

TEST_CASE("json reports are versioned and reproducible") {
  const std::vector<std::string> args = {"--format", "json", "--seed", "7", "exactness", corpus("reps/s3_regular.json"),
                                         "random"};
  const Result a = call(args), b = call(args);
  REQUIRE(a.code == 0);
  const auto da = nlohmann::json::parse(a.out), db = nlohmann::json::parse(b.out);
  CHECK(da["schema"] == cli::kSchema);
  CHECK(da["verdict"] == "pass");
  CHECK(da["version"] == cli::kVersion);
  CHECK(da.contains("timing_ms"));
  CHECK(std::string(da["input_digest"]).rfind("fnv1a64:", 0) == 0);
  CHECK(strip_timing(da).dump() == strip_timing(db).dump());

  const Result fail = call({"verify", corpus("bialgebras/corrupted_z2.json"), "--format", "json"});
  const auto df = nlohmann::json::parse(fail.out);
  CHECK(df["verdict"] == "fail");
  bool witnessed = false;
  for (const auto& c : df["checks"]) witnessed |= c["status"] == "fail" && !std::string(c["witness"]).empty();
  CHECK(witnessed);
}

TEST_CASE("input and usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"verify"}).code == 2);
  CHECK(call({"points", corpus("bialgebras/z3.json")}).code == 2);
  CHECK(call({"dist", "--preset", "sl3", "--order", "3"}).code == 2);
  CHECK(call({"verify", "/no/such/file.json"}).code == 2);
  const fs::path broken = scratch("broken.json");
  io::write_file(broken, R"({"field":{"kind":"rationals"},"dim":2,"mult":[[0,0,"x"]]})");
  const Result r = call({"verify", broken.string(), "--format", "json"});
  CHECK(r.code == 2);
  CHECK(r.err.find("/mult/0") != std::string::npos);
  CHECK(nlohmann::json::parse(r.out)["verdict"] == "error");
  CHECK(call({"zrep", corpus("matrices/rotation_f5.json"), "--p", "4"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("remaining subcommands on the corpus") {
  CHECK(call({"cartier", corpus("monoids/s3.json")}).code == 0);
  CHECK(call({"cartier", corpus("monoids/z2xz4_factors.json")}).code == 0);
  CHECK(call({"cartier", corpus("monoids/z2xz2.json")}).code == 0);
  const Result pts = call({"points", corpus("bialgebras/z6.json"), "--p", "7", "--format", "json"});
  CHECK(pts.code == 0);
  CHECK(nlohmann::json::parse(pts.out)["data"]["count"] == 6);
  CHECK(nlohmann::json::parse(call({"points", corpus("monoids/z4.json"), "--p", "3", "--format", "json"}).out)["data"]["count"] == 2);
  CHECK(call({"points", corpus("bialgebras/z8.json"), "--p", "17", "--budget", "3"}).code == 2);
  CHECK(call({"reynolds", corpus("reps/s3_permutation.json")}).code == 0);
  CHECK(call({"reynolds", corpus("reps/z2_unipotent_f2.json")}).code == 2);
  CHECK(call({"exactness", corpus("reps/z2_unipotent_f2.json"), corpus("quotients/first_line.json")}).code == 1);
  CHECK(call({"exactness", corpus("reps/z2_swap.json"), corpus("quotients/diagonal.json")}).code == 0);
  CHECK(call({"pbw", corpus("lie/heisenberg.json"), "--order", "3"}).code == 0);
  CHECK(call({"dist", "--preset", "ga", "--order", "6"}).code == 0);
  CHECK(call({"dist", "--preset", "gm", "--order", "4"}).code == 0);
  CHECK(call({"tannaka", corpus("monoids/s3.json"), corpus("reps/s3_sign.json"), corpus("reps/s3_standard.json")}).code == 0);
  CHECK(call({"tannaka", corpus("monoids/s3.json"), corpus("reps/z3_regular.json")}).code == 2);
  CHECK(call({"zrep", corpus("matrices/jordan_f5.json"), "--p", "5"}).code == 0);
  CHECK(call({"formal-matrices", "--n", "1", "--order", "3"}).code == 0);
}
