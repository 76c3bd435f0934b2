// One line per acceptance criterion; exit status 0 only when all pass.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hopfdual/catalogue.hpp"
#include "hopfdual/io.hpp"
#include "hopfdual/lie.hpp"
#include "hopfdual/monoid.hpp"
#include "hopfdual/representation.hpp"
#include "hopfdual/rng.hpp"
#include "hopfdual/tannaka.hpp"
#include "tensor_oracle.hpp"

using namespace hopfdual;
namespace fs = std::filesystem;

namespace {

const Field Q = Field::rationals();

// Collects the first few problems of a criterion.
struct Failures {
  std::vector<std::string> items;
  void add(const std::string& what) { items.push_back(what); }
  void expect(bool ok, const std::string& what) {
    if (!ok) add(what);
  }
  std::string summary() const {
    std::string s;
    for (std::size_t i = 0; i < items.size() && i < 3; ++i) s += (i ? "; " : "") + items[i];
    if (items.size() > 3) s += "; +" + std::to_string(items.size() - 3) + " more";
    return s;
  }
};

// Plain Gaussian elimination over mpq_class, kept apart from the library.
std::size_t rank_oracle(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class t = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= t * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<mpq_class>> rational_rows(const std::vector<Vector>& vs) {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& v : vs) {
    std::vector<mpq_class> r;
    for (const auto& s : v) r.push_back(s.rational());
    rows.push_back(std::move(r));
  }
  return rows;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = rank_oracle(rational_rows(both));
  return r == rank_oracle(rational_rows(a)) && r == rank_oracle(rational_rows(b));
}

// Invariants as the common kernel of rho(g) - 1.
std::vector<Vector> invariants_oracle(const Representation& rho) {
  Matrix stacked(rho.field, rho.dim * rho.monoid.size(), rho.dim);
  for (std::size_t g = 0; g < rho.monoid.size(); ++g)
    for (std::size_t i = 0; i < rho.dim; ++i)
      for (std::size_t j = 0; j < rho.dim; ++j)
        stacked(g * rho.dim + i, j) = rho.action[g](i, j) - Scalar(rho.field, i == j ? 1L : 0L);
  return kernel_basis(stacked);
}

// ---- 1 -------------------------------------------------------------------

std::string duality_involution() {
  Failures f;
  const fs::path dir = io::corpus_dir() / "bialgebras";
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    const std::string name = entry.path().filename().string();
    const std::string text = io::read_file(entry.path());
    const FinBialgebra a = io::parse_bialgebra(text, name);
    const FinBialgebra d = dualize(a);
    const FinBialgebra dd = dualize(d);
    f.expect(io::write_bialgebra(dd) == text, name + ": double dual differs");
    f.expect(compare_structures(a, dd).passed(), name + ": structure constants differ");
    if (a.has_algebra() && verify_algebra(a).passed())
      f.expect(verify_coalgebra(d).passed(), name + ": dual of an algebra is not a coalgebra");
    if (a.has_coalgebra() && verify_coalgebra(a).passed())
      f.expect(verify_algebra(d).passed(), name + ": dual of a coalgebra is not an algebra");
  }
  f.expect(files >= 10, "only " + std::to_string(files) + " files in " + dir.string());
  return f.summary();
}

// ---- 2 -------------------------------------------------------------------

std::uint64_t smallest_prime_one_mod(std::uint64_t m) {
  for (std::uint64_t p = m + 1;; p += m) {
    bool prime = p > 1;
    for (std::uint64_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime) return p;
  }
}

std::string cartier() {
  Failures f;
  std::size_t groups = 0;
  for (std::uint64_t n = 1; n <= 16; ++n)
    for (const auto& g : FiniteAbelianGroup::all_of_order(n)) {
      ++groups;
      std::string label = "Z/" + std::to_string(n);
      if (!g.invariant_factors().empty()) {
        label.clear();
        for (auto d : g.invariant_factors()) label += (label.empty() ? "Z/" : " x Z/") + std::to_string(d);
      }
      f.expect(cartier_check(g.to_monoid(), Q).passed(), label + ": cartier_check");
      const std::uint64_t p = smallest_prime_one_mod(g.exponent());
      f.expect(double_dual_check(g, Field::prime(p)).passed(), label + ": double dual over F_" + std::to_string(p));
    }
  // 14 isomorphism classes of abelian groups of order <= 16
  f.expect(groups == 1 + 1 + 1 + 2 + 1 + 1 + 1 + 3 + 2 + 1 + 1 + 2 + 1 + 1 + 1 + 5,
           "unexpected number of groups: " + std::to_string(groups));
  f.expect(cartier_check(monoids::symmetric3(), Q).passed(), "S3: cartier_check");
  return f.summary();
}

// ---- 3 -------------------------------------------------------------------

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (b %= m; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

std::string point_counts() {
  Failures f;
  for (std::uint64_t d = 1; d <= 12; ++d) {
    std::size_t found = 0;
    for (std::uint64_t p = d + 1; found < 3; ++p) {
      if (!is_prime_number(p)) continue;
      ++found;
      std::set<std::uint64_t> roots;
      for (std::uint64_t x = 1; x < p; ++x)
        if (powmod(x, d, p) == 1) roots.insert(x);
      const FinBialgebra a = monoid_algebra(monoids::cyclic(d), Field::prime(p));
      const auto pts = points(a);
      const std::string tag = "d=" + std::to_string(d) + " p=" + std::to_string(p);
      f.expect(pts.size() == std::gcd(d, p - 1), tag + ": count is not gcd(d, p-1)");
      f.expect(pts.size() == roots.size(), tag + ": count differs from the roots of unity");
      // a point is determined by the image of the generator, a d-th root of unity
      std::set<std::uint64_t> images;
      for (const auto& chi : pts) images.insert(chi[d > 1 ? 1 : 0].residue());
      f.expect(images == roots, tag + ": generator images are not the roots of unity");
    }
  }
  return f.summary();
}

// ---- 4 -------------------------------------------------------------------

std::string reynolds_suite() {
  Failures f;
  const std::vector<std::pair<std::string, FiniteMonoid>> groups = {{"Z/2", monoids::cyclic(2)},
                                                                    {"Z/3", monoids::cyclic(3)},
                                                                    {"S3", monoids::symmetric3()},
                                                                    {"D4", monoids::dihedral(4)}};
  for (const auto& [name, g] : groups) {
    const std::size_t n = g.size();
    const IntegralSystem sys = integral_system(g, Q);
    f.expect(sys.exists && sys.freedom == 0, name + ": invariance system not uniquely solvable");
    const InvariantIntegral w = invariant_integral(g, Q);
    f.expect(w.report.passed(), name + ": integral report");
    // the average (1/|G|) sum g
    f.expect(w.w == Vector(n, Scalar(Q, mpq_class(1, n))), name + ": w is not the average");
    const FinBialgebra rg = monoid_algebra(g, Q);
    f.expect(rg.multiply(w.w, w.w) == w.w, name + ": w^2 != w");
    const GroupAlgebraSplitting split = split_group_algebra(g, Q);
    f.expect(split.report.passed(), name + ": RG = wRG x B");
    // the projection onto wRG = F is the counit
    for (std::size_t h = 0; h < n; ++h)
      f.expect(rg.multiply(w.w, unit_vector(Q, n, h)) == w.w, name + ": w g != w");

    SeededRng rng(1000 + n);
    for (int t = 0; t < 20; ++t) {
      const Representation rho = random_representation(g, Q, rng);
      const ReynoldsOperator r = reynolds(rho, w);
      const Matrix& p = r.projector;
      const std::string tag = name + " module " + std::to_string(t);
      f.expect(r.report.passed(), tag + ": reynolds report");
      f.expect(p * p == p, tag + ": P^2 != P");
      for (const auto& m : rho.action) f.expect(m * p == p, tag + ": g P != P");
      std::vector<Vector> image;
      for (std::size_t c = 0; c < rho.dim; ++c) image.push_back(p.column(c));
      const std::vector<Vector> inv = invariants_oracle(rho);
      f.expect(same_span(image, inv), tag + ": image of P is not M^G");
      for (const auto& v : inv) f.expect(p * v == v, tag + ": P moves an invariant");
    }
    for (int t = 0; t < 10; ++t) {
      const Representation rho = random_representation(g, Q, rng);
      const RepMorphism pi = random_quotient(rho, rng);
      const std::string tag = name + " sequence " + std::to_string(t);
      f.expect(check_equivariant(pi).passed(), tag + ": projection not equivariant");
      f.expect(check_invariant_exactness(pi), tag + ": invariants not exact");
      std::vector<Vector> images;
      for (const auto& v : invariants_oracle(rho)) images.push_back(pi.map * v);
      f.expect(rank_oracle(rational_rows(images)) == invariants_oracle(pi.target).size(), tag + ": oracle disagrees");
    }
  }
  const Field f2 = Field::prime(2);
  const Representation unipotent{monoids::cyclic(2), f2, 2,
                                 {Matrix::identity(f2, 2), Matrix::from_ints(f2, {{1, 1}, {0, 1}})}};
  const Representation trivial = trivial_representation(monoids::cyclic(2), f2);
  const RepMorphism onto{unipotent, trivial, Matrix::from_ints(f2, {{0, 1}})};
  f.expect(check_equivariant(onto).passed(), "F2 counterexample: map not equivariant");
  f.expect(!check_invariant_exactness(onto), "F2 counterexample: invariants reported exact");
  return f.summary();
}

// ---- 5 -------------------------------------------------------------------

using Mono = std::vector<unsigned>;
using TensorPoly = std::map<std::pair<Mono, Mono>, mpq_class>;

TensorPoly multiply(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Mono l = ka.first, r = ka.second;
      for (std::size_t i = 0; i < l.size(); ++i) {
        l[i] += kb.first[i];
        r[i] += kb.second[i];
      }
      out[{l, r}] += ca * cb;
    }
  return out;
}

std::string formal_matrices() {
  Failures f;
  const std::size_t n = 2, order = 3;
  const FormalMatrixIntegral fm = formal_matrix_integral(n, order, Q);
  f.expect(fm.report.passed(), "library report");
  const std::size_t m = fm.monomials.size();
  // C(4 + 3, 3) monomials of degree <= 3 in four variables
  f.expect(m == 35 && fm.functionals == 35, "expected 35 functionals");
  std::map<Mono, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index[fm.monomials[i]] = i;
  const std::size_t delta0 = index.at(Mono(n * n, 0));

  // Delta x_ij = sum_k x_ik (x) x_kj, expanded monomial by monomial
  std::vector<TensorPoly> dx(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Mono l(n * n, 0), r(n * n, 0);
        l[i * n + k] = 1;
        r[k * n + j] = 1;
        dx[i * n + j][{l, r}] += 1;
      }
  // conv[a][b][c] = coefficient of x^a (x) x^b in Delta x^c
  std::vector<std::map<std::pair<std::size_t, std::size_t>, mpq_class>> conv(m);
  for (std::size_t c = 0; c < m; ++c) {
    TensorPoly p{{{Mono(n * n, 0), Mono(n * n, 0)}, 1}};
    for (std::size_t v = 0; v < n * n; ++v)
      for (unsigned e = 0; e < fm.monomials[c][v]; ++e) p = multiply(p, dx[v]);
    for (const auto& [k, coeff] : p) {
      if (coeff == 0) continue;
      conv[c][{index.at(k.first), index.at(k.second)}] = coeff;
    }
  }
  auto product = [&](std::size_t a, std::size_t b) {
    std::vector<mpq_class> out(m, 0);
    for (std::size_t c = 0; c < m; ++c) {
      auto it = conv[c].find({a, b});
      if (it != conv[c].end()) out[c] = it->second;
    }
    return out;
  };
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<mpq_class> expected(m, 0);
    if (a == delta0) expected[delta0] = 1;  // a(1) delta_0
    f.expect(product(a, delta0) == expected, "a * d0 != a(1) d0 for a = " + std::to_string(a));
    f.expect(product(delta0, a) == expected, "d0 * a != a(1) d0 for a = " + std::to_string(a));
    for (std::size_t b = 0; b < m; ++b) {
      const Vector lib = to_dense(fm.dual.product(a, b), Q, m);
      std::vector<mpq_class> got;
      for (const auto& s : lib) got.push_back(s.rational());
      if (got != product(a, b)) {
        f.add("library convolution differs at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        break;
      }
    }
  }
  return f.summary();
}

// ---- 6 -------------------------------------------------------------------

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::string pbw() {
  Failures f;
  const unsigned order = 4;
  std::vector<std::pair<std::string, LieAlgebra>> algebras;
  for (std::size_t d = 1; d <= 3; ++d) algebras.emplace_back("abelian(" + std::to_string(d) + ")", lie_algebras::abelian(d));
  algebras.emplace_back("heisenberg", lie_algebras::heisenberg());
  algebras.emplace_back("sl2", lie_algebras::sl2());
  for (const auto& [name, l] : algebras) {
    const std::size_t d = l.dim;
    const TruncatedEnveloping u = enveloping_truncated(l, order);
    const FinBialgebra& a = u.algebra;
    const std::size_t n = a.dim;
    const GradedCheck g = graded_check(u);
    f.expect(g.report.passed(), name + ": graded report");
    for (unsigned k = 0; k <= order; ++k)
      f.expect(k < g.dims.size() && mpz_class(static_cast<unsigned long>(g.dims[k])) == binomial(d + k - 1, k),
               name + ": dim gr_" + std::to_string(k));
    f.expect(mpz_class(static_cast<unsigned long>(n)) == binomial(d + order, order), name + ": total dimension");

    const oracle::TensorOracle tensor(l, order);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!a.product_defined(i, j)) continue;
        oracle::Word w = oracle::word_of(u.monomials[i]);
        const oracle::Word right = oracle::word_of(u.monomials[j]);
        w.insert(w.end(), right.begin(), right.end());
        LinComb expected;
        for (const auto& [sw, c] : tensor.reduce(w)) {
          std::vector<unsigned> e(d, 0);
          for (auto letter : sw) ++e[letter];
          accumulate(expected, u.index_of(e), c);
        }
        f.expect(a.product(i, j) == to_sparse(expected), name + ": product differs from the oracle");
      }

    const PrimitiveSpace prim = primitives_of_U(u);
    f.expect(prim.basis.size() == d, name + ": primitives have dimension " + std::to_string(prim.basis.size()));
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < d; ++i) gens.push_back(unit_vector(Q, n, u.generator(i)));
    f.expect(same_span(prim.basis, gens), name + ": primitives are not L");

    // Delta(xy) = Delta(x) Delta(y) in U (x) U, componentwise
    auto tensor_product = [&](const Vector& x, const Vector& y) {
      Vector out = zero_vector(Q, n * n);
      for (std::size_t p = 0; p < n * n; ++p) {
        if (x[p].is_zero()) continue;
        for (std::size_t q = 0; q < n * n; ++q) {
          if (y[q].is_zero()) continue;
          const Vector left = to_dense(a.product(p / n, q / n), Q, n);
          const Vector rightv = to_dense(a.product(p % n, q % n), Q, n);
          const Vector both = kron(left, rightv);
          for (std::size_t s = 0; s < n * n; ++s) out[s] += x[p] * y[q] * both[s];
        }
      }
      return out;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!a.product_defined(i, j)) continue;
        const Vector lhs = a.comultiply(to_dense(a.product(i, j), Q, n));
        const Vector rhs = tensor_product(a.comultiply(unit_vector(Q, n, i)), a.comultiply(unit_vector(Q, n, j)));
        f.expect(lhs == rhs, name + ": Delta not multiplicative on (" + a.basis[i] + "," + a.basis[j] + ")");
      }
  }
  return f.summary();
}

// ---- 7 -------------------------------------------------------------------

std::string divided_powers() {
  Failures f;
  const unsigned order = 8;
  const DividedPowers dp = divided_power_bialgebra(order);
  const FinBialgebra& a = dp.algebra;
  f.expect(dp.report.passed(), "divided powers report");
  auto check_constants = [&](const FinBialgebra& b, const std::string& tag) {
    for (unsigned i = 0; i <= order; ++i)
      for (unsigned j = 0; i + j <= order; ++j) {
        const SparseVec expected{{i + j, Scalar(Q, binomial(i + j, i))}};
        f.expect(b.product(i, j) == expected, tag + ": w" + std::to_string(i) + " w" + std::to_string(j));
      }
  };
  check_constants(a, "divided powers");
  Vector power = unit_vector(Q, order + 1, 0);
  const Vector w1 = unit_vector(Q, order + 1, 1);
  for (unsigned n = 1; n <= order; ++n) {
    power = a.multiply(power, w1);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    Vector expected = zero_vector(Q, order + 1);
    expected[n] = Scalar(Q, fact);
    f.expect(power == expected, "w1^" + std::to_string(n) + " != " + fact.get_str() + " w" + std::to_string(n));
  }
  const Distributions dist = dist_at_identity(GroupPreset::Additive, order);
  f.expect(dist.report.passed(), "Dist(Ga) report");
  check_constants(dist.algebra, "Dist(Ga)");
  f.expect(compare_structures(dist.algebra, a).passed(), "Dist(Ga) differs from the divided powers");
  return f.summary();
}

// ---- 8 -------------------------------------------------------------------

std::string tannaka() {
  Failures f;
  for (std::size_t n = 1; n <= 8; ++n)
    f.expect(reconstruct_from_regular(monoids::cyclic(n), Q).passed(), "Z/" + std::to_string(n));
  f.expect(reconstruct_from_regular(monoids::symmetric3(), Q).passed(), "S3");
  f.expect(reconstruct_from_regular(monoids::dihedral(4), Q).passed(), "D4");

  const Representation standard = catalogue::s3_standard(Q);
  std::vector<Vector> flats;
  for (const auto& m : standard.action) flats.push_back(flatten(m));
  f.expect(image_span_dimension(standard) == 4, "image_span_dimension(standard) != 4");
  f.expect(rank_oracle(rational_rows(flats)) == 4, "oracle span of the standard action != 4");

  const auto reps = catalogue::s3_representations(Q);
  const Report r = tensor_coproduct_recovery(monoids::symmetric3(), reps);
  f.expect(r.passed(), "tensor_coproduct_recovery on the S3 catalogue");
  for (const auto& x : reps)
    for (const auto& y : reps) {
      const std::string pair = x.first + " (x) " + y.first;
      bool listed = false;
      for (const auto& c : r.checks()) listed |= c.name == pair && c.passed;
      f.expect(listed, "pair not verified: " + pair);
    }
  return f.summary();
}

// ---- 9 -------------------------------------------------------------------

std::string z_decomposition() {
  Failures f;
  const Field f5 = Field::prime(5);
  SeededRng rng(20260101);
  for (int t = 0; t < 20; ++t) {
    const std::size_t size = 1 + rng.below(6);
    Matrix m(f5, size, size);
    do {
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m(i, j) = Scalar(f5, static_cast<long>(rng.below(5)));
    } while (rank(m) < size);
    const std::string tag = "matrix " + std::to_string(t) + " (" + std::to_string(size) + "x" + std::to_string(size) + ")";
    const ZRepDecomposition z = decompose_rep_of_Z(m);
    f.expect(z.report.passed(), tag + ": report");
    // reassemble the companion blocks of q^e from their coefficients
    Matrix blocks(f5, size, size);
    std::size_t at = 0;
    for (const auto& b : z.blocks) {
      Poly qe = Poly(f5, {Scalar(f5, 1L)});
      for (std::size_t e = 0; e < b.exponent; ++e) qe = qe * b.irreducible;
      const std::size_t deg = static_cast<std::size_t>(qe.degree());
      for (std::size_t i = 0; i + 1 < deg; ++i) blocks(at + i + 1, at + i) = Scalar(f5, 1L);
      for (std::size_t i = 0; i < deg; ++i) blocks(at + i, at + deg - 1) = -qe.coeffs()[i];
      at += deg;
    }
    f.expect(at == size, tag + ": block sizes do not add up");
    if (at != size) continue;
    const Matrix& c = z.conjugator;
    f.expect(rank(c) == size, tag + ": conjugator singular");
    f.expect(m * c == c * blocks, tag + ": M C != C B");
    f.expect(z.block_diagonal == blocks, tag + ": block diagonal form differs");
  }
  return f.summary();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0 = no limit
    std::function<std::string()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "duality involution on the corpus", 5, duality_involution},
      {2, "Cartier duality, abelian groups of order <= 16 and S3", 10, cartier},
      {3, "point counts gcd(d, p-1)", 0, point_counts},
      {4, "Reynolds operator suite", 30, reynolds_suite},
      {5, "formal-matrix integral", 0, formal_matrices},
      {6, "PBW at N = 4", 60, pbw},
      {7, "divided powers and Dist(Ga)", 0, divided_powers},
      {8, "Tannaka reconstruction", 0, tannaka},
      {9, "decomposition of Z-representations over F5", 0, z_decomposition},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && c.limit_s > 0 && secs >= c.limit_s)
      problem = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s";
    char timing[64];
    if (c.limit_s > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s < %.0f s", secs, c.limit_s);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    std::cout << (problem.empty() ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << timing << "]";
    if (!problem.empty()) std::cout << " -- " << problem;
    std::cout << "\n";
    failed += !problem.empty();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria pass\n");
  return failed ? 1 : 0;
}
