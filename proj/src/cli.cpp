#include "hopfdual/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopfdual/error.hpp"
#include "hopfdual/io.hpp"
#include "hopfdual/lie.hpp"
#include "hopfdual/monoid.hpp"
#include "hopfdual/representation.hpp"
#include "hopfdual/rng.hpp"
#include "hopfdual/tannaka.hpp"

namespace hopfdual::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultPointBudget;
  std::vector<std::string> files;
  std::string output;
  std::uint64_t prime = 0;
  unsigned order = 4;
  std::size_t n = 2;
  std::string preset;
};

// What a subcommand hands back: checks, extra data for the JSON document,
// the bytes that were read (for the digest) and an optional payload that
// replaces the report on stdout.
struct Outcome {
  Report report;
  json data = json::object();
  std::string inputs;
  std::optional<std::string> payload;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string slurp(const std::string& path, Outcome& o) {
  std::string text = io::read_file(path);
  o.inputs += text;
  return text;
}

json vector_json(const Vector& v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

Field reduce_field(std::uint64_t p) {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "--p is required");
  return Field::prime(p);
}

Vector reduce(const Vector& v, Field f) {
  Vector out;
  for (const auto& s : v) out.push_back(s.field().is_prime() ? s : Scalar(f, s.rational()));
  return out;
}

// Rational structure constants read modulo p.
FinBialgebra reduce_mod(const FinBialgebra& a, Field f) {
  if (a.field == f) return a;
  if (a.field.is_prime()) throw Error(ErrorCode::FieldMismatch, "file is over " + a.field.describe() + ", not " + f.describe());
  FinBialgebra b = a;
  b.field = f;
  auto tensors = [&](std::optional<std::vector<SparseVec>>& t) {
    if (!t) return;
    for (auto& v : *t) {
      LinComb acc;
      for (const auto& [k, c] : v) accumulate(acc, k, Scalar(f, c.rational()));
      v = to_sparse(acc);
    }
  };
  tensors(b.mult);
  tensors(b.comult);
  if (b.unit) b.unit = reduce(*b.unit, f);
  if (b.counit) b.counit = reduce(*b.counit, f);
  if (b.antipode) {
    Matrix s(f, a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) s(i, j) = Scalar(f, (*a.antipode)(i, j).rational());
    b.antipode = s;
  }
  return b;
}

Report verify_any(const FinBialgebra& a) {
  Report r("axioms of " + std::to_string(a.dim) + "-dimensional structure over " + a.field.describe());
  if (a.has_algebra()) r.merge(verify_algebra(a), "algebra: ");
  if (a.has_coalgebra()) r.merge(verify_coalgebra(a), "coalgebra: ");
  if (a.has_bialgebra()) r.merge(verify_bialgebra(a), "bialgebra: ");
  if (a.has_antipode()) r.merge(check_hopf(a), "hopf: ");
  if (!a.has_algebra() && !a.has_coalgebra()) r.fail("structure", "neither a product nor a coproduct is given");
  return r;
}

Outcome cmd_verify(const Options& opt) {
  Outcome o;
  const std::string& path = opt.files.at(0);
  const std::string text = slurp(path, o);
  switch (io::detect_kind(text, path)) {
    case io::FileKind::Bialgebra: o.report = verify_any(io::parse_bialgebra(text, path)); break;
    case io::FileKind::Monoid: {
      const FiniteMonoid m = io::parse_monoid(text, path).monoid;
      o.report = Report("monoid table");
      o.report.pass("associativity and unit", std::to_string(m.size()) + " elements");
      o.data["group"] = m.is_group();
      o.data["abelian"] = m.is_abelian();
      break;
    }
    case io::FileKind::Representation:
      o.report = verify_representation(io::parse_representation(text, path, fs::path(path).parent_path()).rep);
      break;
    case io::FileKind::Lie: o.report = verify_lie(io::parse_lie(text, path)); break;
    case io::FileKind::Matrix: throw Error(ErrorCode::InvalidArgument, path + ": matrix files have nothing to verify");
  }
  return o;
}

Outcome cmd_dualize(const Options& opt) {
  Outcome o;
  const std::string& path = opt.files.at(0);
  const FinBialgebra a = io::parse_bialgebra(slurp(path, o), path);
  const FinBialgebra d = dualize(a);
  const std::string text = io::write_bialgebra(d);
  o.report = Report("dual of " + path);
  if (a.has_algebra() && verify_algebra(a).passed()) o.report.merge(verify_coalgebra(d), "dual coalgebra: ");
  if (a.has_coalgebra() && verify_coalgebra(a).passed()) o.report.merge(verify_algebra(d), "dual algebra: ");
  o.report.merge(compare_structures(a, dualize(d)), "double dual: ");
  if (opt.output.empty()) {
    o.payload = text;
  } else {
    io::write_file(opt.output, text);
    o.data["output"] = opt.output;
  }
  return o;
}

Outcome cmd_cartier(const Options& opt) {
  Outcome o;
  const std::string& path = opt.files.at(0);
  const io::MonoidFile m = io::parse_monoid(slurp(path, o), path);
  o.report = cartier_check(m.monoid, Field::rationals());
  if (m.monoid.is_group() && m.monoid.is_abelian() && m.monoid.size() > 1) {
    // smallest p = 1 mod exp(G), so that F_p holds enough roots of unity
    std::vector<std::uint64_t> factors;
    if (m.invariant_factors) {
      factors = *m.invariant_factors;
    } else {
      // the table form only pins down the exponent; the check needs the
      // invariant factors, so match by order and exponent
      for (const auto& g : FiniteAbelianGroup::all_of_order(m.monoid.size())) {
        std::vector<std::size_t> orders_a, orders_b;
        const FiniteMonoid t = g.to_monoid();
        for (std::size_t x = 0; x < t.size(); ++x) orders_a.push_back(t.order_of(x));
        for (std::size_t x = 0; x < m.monoid.size(); ++x) orders_b.push_back(m.monoid.order_of(x));
        std::sort(orders_a.begin(), orders_a.end());
        std::sort(orders_b.begin(), orders_b.end());
        if (orders_a == orders_b) factors = g.invariant_factors();
      }
    }
    const FiniteAbelianGroup g(factors);
    std::uint64_t p = g.exponent() + 1;
    while (!is_prime_number(p)) p += g.exponent();
    o.report.merge(double_dual_check(g, Field::prime(p)), "G = G** over F_" + std::to_string(p) + ": ");
    o.data["prime"] = p;
  }
  return o;
}

Outcome cmd_points(const Options& opt) {
  Outcome o;
  const std::string& path = opt.files.at(0);
  const Field f = reduce_field(opt.prime);
  const std::string text = slurp(path, o);
  FinBialgebra a = io::detect_kind(text, path) == io::FileKind::Monoid
                       ? monoid_algebra(io::parse_monoid(text, path).monoid, f)
                       : reduce_mod(io::parse_bialgebra(text, path), f);
  if (!a.has_algebra()) throw Error(ErrorCode::InvalidArgument, path + ": points need a product and a unit");
  const auto pts = points(a, opt.budget);
  o.report = Report("points over F_" + std::to_string(opt.prime));
  // independent pass over every basis pair
  for (std::size_t c = 0; c < pts.size(); ++c) {
    const Vector& chi = pts[c];
    bool ok = true;
    for (std::size_t i = 0; i < a.dim && ok; ++i)
      for (std::size_t j = 0; j < a.dim && ok; ++j) {
        if (!a.product_defined(i, j)) continue;
        Scalar v(f);
        for (const auto& [k, coeff] : a.product(i, j)) v += coeff * chi[k];
        ok = v == chi[i] * chi[j];
      }
    Scalar u(f);
    for (std::size_t k = 0; k < a.dim; ++k) u += (*a.unit)[k] * chi[k];
    o.report.expect(ok && u.is_one(), "point " + std::to_string(c) + " multiplicative and unital", "fails on a basis pair");
  }
  o.report.pass("count", std::to_string(pts.size()));
  json list = json::array();
  for (const auto& p : pts) list.push_back(vector_json(p));
  o.data["count"] = pts.size();
  o.data["points"] = std::move(list);
  return o;
}

io::RepFile load_rep(const std::string& path, Outcome& o) {
  return io::parse_representation(slurp(path, o), path, fs::path(path).parent_path());
}

Outcome cmd_reynolds(const Options& opt) {
  Outcome o;
  const Representation rho = load_rep(opt.files.at(0), o).rep;
  o.report = Report("Reynolds operator");
  o.report.merge(verify_representation(rho), "representation: ");
  if (!o.report.passed()) return o;
  const InvariantIntegral w = invariant_integral(rho.monoid, rho.field);
  o.report.merge(w.report, "integral: ");
  const ReynoldsOperator r = reynolds(rho, w);
  o.report.merge(r.report, "projector: ");
  o.data["integral"] = vector_json(w.w);
  o.data["invariants"] = r.image.size();
  return o;
}

Outcome cmd_exactness(const Options& opt) {
  Outcome o;
  if (opt.files.size() < 2) throw Error(ErrorCode::InvalidArgument, "exactness needs <rep-file> <quotient-spec>");
  const Representation rho = load_rep(opt.files[0], o).rep;
  o.report = Report("invariants of a quotient");
  o.report.merge(verify_representation(rho), "representation: ");
  if (!o.report.passed()) return o;
  RepMorphism pi{rho, rho, Matrix::identity(rho.field, rho.dim)};
  if (opt.files[1] == "random") {
    SeededRng rng(opt.seed);
    pi = random_quotient(rho, rng);
  } else {
    const std::vector<Vector> gens = io::parse_subspace(slurp(opt.files[1], o), rho.field, rho.dim, opt.files[1]);
    std::vector<Vector> orbit;
    for (const auto& v : gens)
      for (const auto& m : rho.action) orbit.push_back(m * v);
    pi = quotient_representation(rho, span_basis(rho.field, orbit, rho.dim)).projection;
  }
  o.report.merge(check_equivariant(pi), "projection: ");
  const ExactnessWitness ex = invariant_exactness(pi);
  o.report.expect(ex.exact, "M^G -> N^G onto",
                  "image of dimension " + std::to_string(ex.image_dimension) + " inside N^G of dimension " +
                      std::to_string(ex.target_invariants));
  o.data["quotient_dim"] = pi.target.dim;
  o.data["image_dimension"] = ex.image_dimension;
  o.data["target_invariants"] = ex.target_invariants;
  return o;
}

Outcome cmd_pbw(const Options& opt) {
  Outcome o;
  const std::string& path = opt.files.at(0);
  const LieAlgebra l = io::parse_lie(slurp(path, o), path);
  o.report = Report("PBW up to order " + std::to_string(opt.order));
  o.report.merge(verify_lie(l), "Lie: ");
  if (!o.report.passed()) return o;
  const TruncatedEnveloping u = enveloping_truncated(l, opt.order);
  const GradedCheck g = graded_check(u);
  o.report.merge(g.report, "graded: ");
  o.report.merge(verify_bialgebra(u.algebra), "U: ");
  const PrimitiveSpace p = primitives_of_U(u);
  o.report.merge(p.report, "primitives: ");
  o.data["dimension"] = u.algebra.dim;
  o.data["graded_dims"] = g.dims;
  o.data["primitives"] = p.basis.size();
  return o;
}

Outcome cmd_dist(const Options& opt) {
  Outcome o;
  const GroupPreset preset = parse_group_preset(opt.preset);
  const Distributions d = dist_at_identity(preset, opt.order);
  o.report = Report("Dist(" + preset_name(preset) + ") up to order " + std::to_string(opt.order));
  o.report.merge(d.report);
  if (preset != GroupPreset::Multiplicative)
    o.report.merge(compare_structures(d.algebra, divided_power_bialgebra(opt.order).algebra), "against divided powers: ");
  o.data["dimension"] = d.algebra.dim;
  return o;
}

Outcome cmd_tannaka(const Options& opt) {
  Outcome o;
  const std::string& path = opt.files.at(0);
  const FiniteMonoid g = io::parse_monoid(slurp(path, o), path).monoid;
  const Field f = Field::rationals();
  o.report = reconstruct_from_regular(g, f);
  std::vector<std::pair<std::string, Representation>> reps{{"trivial", trivial_representation(g, f)},
                                                           {"regular", regular_representation(g, f)}};
  json dims = json::object();
  for (std::size_t i = 1; i < opt.files.size(); ++i) {
    const Representation rho = load_rep(opt.files[i], o).rep;
    if (!(rho.monoid == g)) throw Error(ErrorCode::InvalidArgument, opt.files[i] + ": representation of another monoid");
    const std::string name = fs::path(opt.files[i]).stem().string();
    const ReconstructionResult r = annihilator_quotient(rep_to_module(rho));
    o.report.merge(r.report, name + ": ");
    dims[name] = r.algebra.dim;
    reps.emplace_back(name, rho);
  }
  o.report.merge(tensor_coproduct_recovery(g, reps));
  o.data["reconstructed_dims"] = std::move(dims);
  return o;
}

Outcome cmd_zrep(const Options& opt) {
  Outcome o;
  const std::string& path = opt.files.at(0);
  const Matrix m = io::parse_matrix(slurp(path, o), path, reduce_field(opt.prime));
  const ZRepDecomposition z = decompose_rep_of_Z(m);
  o.report = z.report;
  json comps = json::array();
  for (const auto& c : z.components) comps.push_back({{"irreducible", c.irreducible.to_string()}, {"multiplicities", c.multiplicities}});
  o.data["components"] = std::move(comps);
  return o;
}

Outcome cmd_formal(const Options& opt) {
  Outcome o;
  const FormalMatrixIntegral fm = formal_matrix_integral(opt.n, opt.order, Field::rationals());
  o.report = fm.report;
  o.data["functionals"] = fm.functionals;
  return o;
}

Outcome cmd_canonicalize(const Options& opt) {
  Outcome o;
  const std::string& path = opt.files.at(0);
  const std::string text = slurp(path, o);
  const std::string canon = io::canonicalize(text, path, fs::path(path).parent_path());
  o.report = Report("canonical form of " + path);
  o.report.pass("parsed", text == canon ? "already canonical" : "rewritten");
  if (opt.output.empty()) {
    o.payload = canon;
  } else {
    io::write_file(opt.output, canon);
  }
  return o;
}

json checks_json(const Report& r) {
  json out = json::array();
  for (const auto& c : r.checks()) {
    json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    j["witness"] = c.witness;
    out.push_back(std::move(j));
  }
  return out;
}

json document(const std::string& command, const std::string& verdict, const Outcome& o, double ms) {
  json doc;
  doc["schema"] = kSchema;
  doc["tool"] = "hopfdual";
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["verdict"] = verdict;
  doc["subject"] = o.report.subject();
  doc["checks"] = checks_json(o.report);
  doc["data"] = o.data;
  doc["input_digest"] = "fnv1a64:" + hex64(io::fnv1a64(o.inputs));
  doc["timing_ms"] = ms;
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact structure-constant bialgebras and their dualities", "hopfdual"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "Seed for randomized choices");
  app.add_option("--budget", opt.budget, "Cap on enumerated candidates");

  std::map<std::string, std::function<Outcome(const Options&)>> handlers;
  auto sub = [&](const char* name, const char* help, std::function<Outcome(const Options&)> fn) {
    handlers[name] = std::move(fn);
    return app.add_subcommand(name, help);
  };
  auto files = [&](CLI::App* s, const char* what, bool many = false) {
    auto* o = s->add_option("files", opt.files, what)->required();
    if (!many) o->expected(1);
  };

  files(sub("verify", "Check the axioms of a definition file", cmd_verify), "bialgebra, monoid, rep or Lie file");
  auto* dz = sub("dualize", "Write the dual bialgebra", cmd_dualize);
  files(dz, "bialgebra file");
  dz->add_option("-o,--output", opt.output, "Output file (stdout when absent)");
  files(sub("cartier", "RG against R^G and the double dual", cmd_cartier), "monoid file");
  auto* pt = sub("points", "Unital algebra maps to F_p", cmd_points);
  files(pt, "bialgebra or monoid file");
  pt->add_option("--p", opt.prime, "Prime")->required();
  files(sub("reynolds", "Invariant integral and Reynolds projector", cmd_reynolds), "rep file");
  auto* ex = sub("exactness", "Surjectivity on invariants of a quotient", cmd_exactness);
  files(ex, "rep file and quotient spec (file or 'random')", true);
  auto* pb = sub("pbw", "Truncated enveloping algebra checks", cmd_pbw);
  files(pb, "Lie file");
  pb->add_option("--order", opt.order, "Filtration order")->required();
  auto* di = sub("dist", "Distributions at the identity", cmd_dist);
  di->add_option("--preset", opt.preset, "ga, gm or u2")->required();
  di->add_option("--order", opt.order, "Truncation order")->required();
  files(sub("tannaka", "Reconstruction and tensor structure", cmd_tannaka), "monoid file, then rep files", true);
  auto* zr = sub("zrep", "Primary decomposition of a representation of Z", cmd_zrep);
  files(zr, "matrix file");
  zr->add_option("--p", opt.prime, "Prime")->required();
  auto* fm = sub("formal-matrices", "Integral on the formal matrix group", cmd_formal);
  fm->add_option("--n", opt.n, "Matrix size")->required();
  fm->add_option("--order", opt.order, "Truncation order")->required();
  auto* ca = sub("canonicalize", "Rewrite a file in canonical form", cmd_canonicalize);
  files(ca, "any definition file");
  ca->add_option("-o,--output", opt.output, "Output file (stdout when absent)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hopfdual: " << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = handlers.at(command)(opt);
  } catch (const std::exception& e) {
    err << "hopfdual " << command << ": " << e.what() << "\n";
    if (opt.format == "json") {
      Outcome bad;
      bad.report = Report(command);
      bad.report.fail("input", e.what());
      out << document(command, "error", bad, 0).dump(2) << "\n";
    }
    return 2;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool ok = o.report.passed();
  if (o.payload) {
    out << *o.payload;
  } else if (opt.format == "json") {
    out << document(command, ok ? "pass" : "fail", o, ms).dump(2) << "\n";
  } else {
    out << o.report.to_text();
  }
  return ok ? 0 : 1;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hopfdual::cli
