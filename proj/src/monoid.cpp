#include "hopfdual/monoid.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "hopfdual/error.hpp"

namespace hopfdual {

FiniteMonoid::FiniteMonoid(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table,
                           std::size_t unit)
    : names_(std::move(names)), table_(std::move(table)), unit_(unit) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "a monoid has at least one element");
  if (table_.size() != n) throw Error(ErrorCode::DimensionMismatch, "table rows");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "table columns");
    for (auto x : row)
      if (x >= n) throw Error(ErrorCode::InvalidArgument, "table entry out of range");
  }
  if (unit_ >= n) throw Error(ErrorCode::InvalidArgument, "unit index out of range");
  for (std::size_t a = 0; a < n; ++a)
    if (table_[unit_][a] != a || table_[a][unit_] != a)
      throw Error(ErrorCode::InvalidArgument, "unit law fails at " + names_[a]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error(ErrorCode::InvalidArgument,
                      "associativity fails at (" + names_[a] + "," + names_[b] + "," + names_[c] + ")");
  is_abelian_ = true;
  for (std::size_t a = 0; a < n && is_abelian_; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (table_[a][b] != table_[b][a]) {
        is_abelian_ = false;
        break;
      }
  is_group_ = true;
  for (std::size_t a = 0; a < n; ++a)
    if (!inverse(a)) {
      is_group_ = false;
      break;
    }
}

std::optional<std::size_t> FiniteMonoid::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < size(); ++h)
    if (table_[g][h] == unit_ && table_[h][g] == unit_) return h;
  return std::nullopt;
}

std::size_t FiniteMonoid::order_of(std::size_t g) const {
  if (!is_group_) throw Error(ErrorCode::NotAGroup, "element order in a monoid");
  std::size_t x = g, k = 1;
  while (x != unit_) {
    x = table_[x][g];
    ++k;
  }
  return k;
}

std::size_t FiniteMonoid::exponent() const {
  std::size_t e = 1;
  for (std::size_t g = 0; g < size(); ++g) e = std::lcm(e, order_of(g));
  return e;
}

std::optional<std::size_t> FiniteMonoid::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

namespace monoids {

FiniteMonoid trivial() { return FiniteMonoid({"e"}, {{0}}, 0); }

FiniteMonoid cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group of order 0");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : k == 1 ? "g" : "g^" + std::to_string(k));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteMonoid(std::move(names), std::move(table), 0);
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  std::vector<std::vector<std::size_t>> table(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      table[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteMonoid(std::move(names), std::move(table), a.unit() * nb + b.unit());
}

FiniteMonoid symmetric3() {
  using Perm = std::array<std::size_t, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "(12)", "(23)", "(13)", "(123)", "(132)"};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Perm c{};  // (ab)(i) = a(b(i))
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteMonoid(names, std::move(table), 0);
}

FiniteMonoid dihedral(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dihedral group needs n >= 1");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    std::string r = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
    names.push_back(k == 0 ? "e" : r);
    names.push_back(k == 0 ? "s" : r + "s");
  }
  std::vector<std::vector<std::size_t>> table(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = 0; y < 2 * n; ++y) {
      std::size_t a = x / 2, e = x % 2, b = y / 2, f = y % 2;
      // r^a s^e r^b s^f = r^(a +- b) s^(e+f)
      std::size_t k = e == 0 ? (a + b) % n : (a + n - b) % n;
      table[x][y] = 2 * k + ((e + f) % 2);
    }
  return FiniteMonoid(std::move(names), std::move(table), 0);
}

FiniteMonoid multiplicative01() { return FiniteMonoid({"1", "0"}, {{0, 1}, {1, 1}}, 0); }

}  // namespace monoids

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw Error(ErrorCode::InvalidArgument, "invariant factors must be >= 2");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      throw Error(ErrorCode::InvalidArgument, "invariant factors must divide one another");
  }
}

std::uint64_t FiniteAbelianGroup::order() const {
  return std::accumulate(factors_.begin(), factors_.end(), std::uint64_t{1}, std::multiplies<>());
}

std::uint64_t FiniteAbelianGroup::exponent() const { return factors_.empty() ? 1 : factors_.back(); }

FiniteMonoid FiniteAbelianGroup::to_monoid() const {
  if (factors_.empty()) return monoids::trivial();
  if (factors_.size() == 1) return monoids::cyclic(factors_[0]);
  const std::size_t n = order();
  std::vector<std::vector<std::uint64_t>> digits(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    digits[x].resize(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      digits[x][i] = rest % factors_[i];
      rest /= factors_[i];
    }
  }
  auto index_of = [&](const std::vector<std::uint64_t>& d) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) x = x * factors_[i] + d[i];
    return x;
  };
  std::vector<std::string> names;
  for (const auto& d : digits) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    names.push_back(s + ")");
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<std::uint64_t> d(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i) d[i] = (digits[x][i] + digits[y][i]) % factors_[i];
      table[x][y] = index_of(d);
    }
  return FiniteMonoid(std::move(names), std::move(table), 0);
}

namespace {

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<FiniteAbelianGroup> FiniteAbelianGroup::all_of_order(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "order 0");
  std::vector<std::pair<std::uint64_t, unsigned>> prime_powers;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) prime_powers.emplace_back(p, e);
  }
  if (rest > 1) prime_powers.emplace_back(rest, 1);
  // For each prime, a partition of its exponent (parts descending).
  std::vector<std::vector<std::vector<unsigned>>> choices;
  for (const auto& [p, e] : prime_powers) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> current;
    partitions(e, e, current, parts);
    choices.push_back(std::move(parts));
  }
  std::vector<FiniteAbelianGroup> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::size_t len = 0;
    for (std::size_t i = 0; i < choices.size(); ++i) len = std::max(len, choices[i][pick[i]].size());
    std::vector<std::uint64_t> factors(len, 1);  // descending
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const auto& parts = choices[i][pick[i]];
      for (std::size_t k = 0; k < parts.size(); ++k)
        for (unsigned t = 0; t < parts[k]; ++t) factors[k] *= prime_powers[i].first;
    }
    std::reverse(factors.begin(), factors.end());
    out.emplace_back(std::move(factors));
    std::size_t i = 0;
    while (i < choices.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == choices.size()) break;
  }
  return out;
}

Report verify_character(const FiniteMonoid& g, const Character& chi) {
  Report report("character");
  if (chi.values.size() != g.size()) throw Error(ErrorCode::DimensionMismatch, "character length");
  report.expect(chi.values[g.unit()].is_one(), "chi(1) = 1", "chi(1) = " + chi.values[g.unit()].to_string());
  std::size_t failures = 0;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      if (chi.values[g.mul(a, b)] != chi.values[a] * chi.values[b]) {
        ++failures;
        report.fail("chi(gh) = chi(g)chi(h)", "(" + g.name(a) + "," + g.name(b) + ")");
      }
  if (failures == 0) report.pass("chi(gh) = chi(g)chi(h)");
  return report;
}

FinBialgebra monoid_algebra(const FiniteMonoid& g, Field field) {
  const std::size_t n = g.size();
  const Scalar one(field, 1L);
  FinBialgebra a;
  a.field = field;
  a.dim = n;
  a.basis = g.names();
  a.mult.emplace(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) (*a.mult)[x * n + y] = {{g.mul(x, y), one}};
  a.unit = unit_vector(field, n, g.unit());
  a.comult.emplace(n);
  for (std::size_t x = 0; x < n; ++x) (*a.comult)[x] = {{x * n + x, one}};
  a.counit = Vector(n, one);
  if (g.is_group()) {
    Matrix s(field, n, n);
    for (std::size_t x = 0; x < n; ++x) s(*g.inverse(x), x) = one;
    a.antipode = std::move(s);
  }
  return a;
}

FinBialgebra function_bialgebra(const FiniteMonoid& g, Field field) {
  const std::size_t n = g.size();
  const Scalar one(field, 1L);
  FinBialgebra a;
  a.field = field;
  a.dim = n;
  for (const auto& name : g.names()) a.basis.push_back(dual_name(name));
  a.mult.emplace(n * n);
  for (std::size_t x = 0; x < n; ++x) (*a.mult)[x * n + x] = {{x, one}};
  a.unit = Vector(n, one);
  std::vector<LinComb> comult(n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k) accumulate(comult[g.mul(h, k)], h * n + k, one);
  a.comult.emplace();
  for (const auto& c : comult) a.comult->push_back(to_sparse(c));
  a.counit = unit_vector(field, n, g.unit());
  if (g.is_group()) {
    Matrix s(field, n, n);
    for (std::size_t x = 0; x < n; ++x) s(*g.inverse(x), x) = one;
    a.antipode = std::move(s);
  }
  return a;
}

Report cartier_check(const FiniteMonoid& g, Field field) {
  Report report("Cartier duality RG <-> R^G");
  FinBialgebra rg = monoid_algebra(g, field);
  FinBialgebra fg = function_bialgebra(g, field);
  report.merge(compare_structures(dualize(rg), fg), "dual(RG) vs R^G: ");
  report.merge(compare_structures(dualize(fg), rg), "dual(R^G) vs RG: ");
  return report;
}

namespace {

// Incremental echelon basis that remembers how each row is expressed in
// terms of the monomials that were inserted.
class ExpressingEchelon {
 public:
  ExpressingEchelon(Field field, std::size_t dim) : field_(field), dim_(dim) {}

  // Reduces v. On success (v in span) returns the coefficients of v over
  // the inserted monomials; otherwise inserts v as monomial `id` and
  // returns nullopt.
  std::optional<LinComb> reduce_or_insert(const Vector& v, std::size_t id) {
    Vector rest = v;
    LinComb used;  // v = rest + sum_r f_r R_r
    for (const auto& row : rows_) {
      const Scalar& x = rest[row.pivot];
      if (x.is_zero()) continue;
      Scalar f = x / row.vec[row.pivot];
      for (std::size_t c = 0; c < dim_; ++c)
        if (!row.vec[c].is_zero()) rest[c] -= f * row.vec[c];
      for (const auto& [m, t] : row.expr) accumulate(used, m, f * t);
    }
    std::size_t pivot = 0;
    while (pivot < dim_ && rest[pivot].is_zero()) ++pivot;
    if (pivot == dim_) return used;
    Row row{std::move(rest), pivot, {}};
    row.expr.emplace(id, Scalar(field_, 1L));
    for (const auto& [m, t] : used) accumulate(row.expr, m, -t);
    rows_.push_back(std::move(row));
    return std::nullopt;
  }

  bool contains(const Vector& v) const {
    Vector rest = v;
    for (const auto& row : rows_) {
      const Scalar& x = rest[row.pivot];
      if (x.is_zero()) continue;
      Scalar f = x / row.vec[row.pivot];
      for (std::size_t c = 0; c < dim_; ++c)
        if (!row.vec[c].is_zero()) rest[c] -= f * row.vec[c];
    }
    return hopfdual::is_zero(rest);
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    Vector vec;
    std::size_t pivot;
    LinComb expr;
  };
  Field field_;
  std::size_t dim_;
  std::vector<Row> rows_;
};

struct Monomial {
  std::vector<unsigned> exps;
  Vector vec;
};

struct Relation {
  std::vector<unsigned> exps;
  LinComb over_monomials;
};

// Monomials in greedily chosen generators, closed under multiplication,
// with the linear relations discovered after each generator is added.
struct GeneratorClosure {
  std::vector<std::size_t> generators;
  std::vector<Monomial> monomials;
  std::vector<std::size_t> monomials_at_level;  // count after each level
  std::vector<std::vector<Relation>> relations;  // per level
  std::vector<LinComb> basis_expr;               // e_i over monomials
};

GeneratorClosure close_generators(const FinBialgebra& a) {
  const std::size_t n = a.dim;
  GeneratorClosure out;
  ExpressingEchelon echelon(a.field, n);
  std::set<std::vector<unsigned>> seen;
  // the unit
  out.monomials.push_back({{}, *a.unit});
  echelon.reduce_or_insert(*a.unit, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Vector ei = unit_vector(a.field, n, i);
    if (echelon.contains(ei)) continue;
    const std::size_t t = out.generators.size();
    out.generators.push_back(i);
    for (auto& m : out.monomials) m.exps.resize(t + 1, 0);
    std::vector<Relation> level_relations;
    std::vector<unsigned> gen_exps(t + 1, 0);
    gen_exps[t] = 1;
    std::vector<std::pair<std::size_t, std::size_t>> work;  // (monomial, generator)
    for (std::size_t m = 0; m < out.monomials.size(); ++m) work.emplace_back(m, t);
    seen.insert(gen_exps);
    out.monomials.push_back({gen_exps, ei});
    echelon.reduce_or_insert(ei, out.monomials.size() - 1);
    for (std::size_t s = 0; s <= t; ++s) work.emplace_back(out.monomials.size() - 1, s);
    for (std::size_t w = 0; w < work.size(); ++w) {
      auto [m, s] = work[w];
      std::vector<unsigned> exps = out.monomials[m].exps;
      exps[s] += 1;
      if (!seen.insert(exps).second) continue;
      Vector v = a.multiply(out.monomials[m].vec, unit_vector(a.field, n, out.generators[s]));
      auto rel = echelon.reduce_or_insert(v, out.monomials.size());
      if (rel) {
        level_relations.push_back({exps, std::move(*rel)});
      } else {
        out.monomials.push_back({exps, std::move(v)});
        for (std::size_t s2 = 0; s2 <= t; ++s2) work.emplace_back(out.monomials.size() - 1, s2);
      }
    }
    out.relations.push_back(std::move(level_relations));
    out.monomials_at_level.push_back(out.monomials.size());
  }
  for (auto& m : out.monomials) m.exps.resize(out.generators.size(), 0);
  for (auto& level : out.relations)
    for (auto& r : level) r.exps.resize(out.generators.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto expr = echelon.reduce_or_insert(unit_vector(a.field, n, i), out.monomials.size());
    if (!expr) throw Error(ErrorCode::InvalidArgument, "generators do not span the algebra");
    out.basis_expr.push_back(std::move(*expr));
  }
  return out;
}

Scalar monomial_value(const std::vector<unsigned>& exps, const std::vector<Scalar>& values, std::size_t levels,
                      Field field) {
  Scalar v(field, 1L);
  for (std::size_t s = 0; s < levels && s < exps.size(); ++s)
    if (exps[s]) v *= values[s].pow(exps[s]);
  return v;
}

}  // namespace

std::vector<std::size_t> greedy_generators(const FinBialgebra& a) {
  if (!a.has_algebra()) throw Error(ErrorCode::InvalidArgument, "points need an algebra");
  if (a.dim == 0) return {};
  return close_generators(a).generators;
}

namespace {

bool is_algebra_point(const FinBialgebra& a, const Vector& phi) {
  Scalar at_unit(a.field);
  for (std::size_t i = 0; i < a.dim; ++i) at_unit += (*a.unit)[i] * phi[i];
  if (!at_unit.is_one()) return false;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Scalar v(a.field);
      for (const auto& [k, c] : a.product(i, j)) v += c * phi[k];
      if (v != phi[i] * phi[j]) return false;
    }
  return true;
}

}  // namespace

std::vector<Vector> points(const FinBialgebra& a, std::uint64_t budget) {
  validate_shapes(a);
  if (!a.has_algebra()) throw Error(ErrorCode::InvalidArgument, "points need an algebra");
  if (!a.field.is_prime()) throw Error(ErrorCode::FieldMismatch, "points are enumerated over prime fields only");
  if (!is_commutative(a)) throw Error(ErrorCode::NotCommutative, "points need a commutative algebra");
  if (a.dim == 0) return {};
  const Field field = a.field;
  const std::uint32_t p = field.characteristic();
  GeneratorClosure closure = close_generators(a);
  const std::size_t levels = closure.generators.size();
  std::vector<Vector> out;
  std::vector<Scalar> values(levels, Scalar(field));
  std::uint64_t visited = 0;

  auto relation_holds = [&](const Relation& r, std::size_t known) {
    Scalar rhs(field);
    for (const auto& [m, c] : r.over_monomials)
      rhs += c * monomial_value(closure.monomials[m].exps, values, known, field);
    return monomial_value(r.exps, values, known, field) == rhs;
  };

  // Depth-first over generator values. Relations found at level t only
  // involve generators 0..t, so they prune as soon as the t-th value is set.
  std::vector<std::size_t> stack_value(levels + 1, 0);
  std::size_t depth = 0;
  // Iterative DFS: stack_value[d] is the next value to try at depth d.
  while (true) {
    if (depth == levels) {
      Vector phi(a.dim, Scalar(field));
      for (std::size_t i = 0; i < a.dim; ++i)
        for (const auto& [m, c] : closure.basis_expr[i])
          phi[i] += c * monomial_value(closure.monomials[m].exps, values, levels, field);
      if (is_algebra_point(a, phi)) out.push_back(std::move(phi));
      if (depth == 0) break;
      --depth;
      continue;
    }
    if (stack_value[depth] == p) {
      stack_value[depth] = 0;
      if (depth == 0) break;
      --depth;
      continue;
    }
    values[depth] = Scalar(field, static_cast<long>(stack_value[depth]++));
    if (++visited > budget)
      throw Error(ErrorCode::BudgetExceeded, "point search exceeded " + std::to_string(budget) + " candidates");
    bool ok = true;
    for (const auto& r : closure.relations[depth])
      if (!relation_holds(r, depth + 1)) {
        ok = false;
        break;
      }
    if (ok) ++depth;
  }
  return out;
}

DualMonoid dual_monoid(const FiniteMonoid& g, Field prime_field, std::uint64_t budget) {
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "dual monoid of a noncommutative monoid");
  std::vector<Vector> chars = points(monoid_algebra(g, prime_field), budget);
  const std::size_t n = chars.size();
  std::map<std::vector<std::string>, std::size_t> index;
  auto key = [](const Vector& v) {
    std::vector<std::string> k;
    for (const auto& x : v) k.push_back(x.to_string());
    return k;
  };
  for (std::size_t c = 0; c < n; ++c) index[key(chars[c])] = c;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vector prod = chars[x];
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= chars[y][i];
      auto it = index.find(key(prod));
      if (it == index.end()) throw Error(ErrorCode::InvalidArgument, "characters not closed under product");
      table[x][y] = it->second;
    }
  auto unit_it = index.find(key(Vector(g.size(), Scalar(prime_field, 1L))));
  if (unit_it == index.end()) throw Error(ErrorCode::InvalidArgument, "trivial character missing");
  std::vector<std::string> names;
  for (std::size_t c = 0; c < n; ++c) names.push_back("chi" + std::to_string(c));
  return {FiniteMonoid(std::move(names), std::move(table), unit_it->second), std::move(chars)};
}

Report double_dual_check(const FiniteAbelianGroup& group, Field prime_field) {
  if (!prime_field.is_prime()) throw Error(ErrorCode::FieldMismatch, "double dual needs a prime field");
  const std::uint64_t p = prime_field.characteristic();
  if ((p - 1) % group.exponent() != 0)
    throw Error(ErrorCode::InsufficientRoots,
                "exponent " + std::to_string(group.exponent()) + " does not divide p - 1 = " + std::to_string(p - 1));
  Report report("double dual G -> G**");
  FiniteMonoid g = group.to_monoid();
  DualMonoid d1 = dual_monoid(g, prime_field);
  DualMonoid d2 = dual_monoid(d1.monoid, prime_field);
  report.expect(d1.monoid.size() == g.size(), "|G*| = |G|",
                std::to_string(d1.monoid.size()) + " vs " + std::to_string(g.size()));
  report.expect(d2.monoid.size() == g.size(), "|G**| = |G|",
                std::to_string(d2.monoid.size()) + " vs " + std::to_string(g.size()));
  std::vector<std::optional<std::size_t>> ev(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    Vector values;
    for (const auto& chi : d1.characters) values.push_back(chi[x]);
    for (std::size_t c = 0; c < d2.characters.size(); ++c)
      if (d2.characters[c] == values) ev[x] = c;
    if (!ev[x]) report.fail("evaluation lands in G**", "ev(" + g.name(x) + ") is not a character of G*");
  }
  if (std::all_of(ev.begin(), ev.end(), [](const auto& e) { return e.has_value(); })) {
    report.pass("evaluation lands in G**");
    std::set<std::size_t> image;
    for (const auto& e : ev) image.insert(*e);
    report.expect(image.size() == g.size() && image.size() == d2.monoid.size(), "evaluation is bijective",
                  "image has " + std::to_string(image.size()) + " elements");
    std::size_t failures = 0;
    for (std::size_t x = 0; x < g.size(); ++x)
      for (std::size_t y = 0; y < g.size(); ++y)
        if (*ev[g.mul(x, y)] != d2.monoid.mul(*ev[x], *ev[y])) {
          ++failures;
          report.fail("evaluation is a homomorphism", "(" + g.name(x) + "," + g.name(y) + ")");
        }
    if (failures == 0) report.pass("evaluation is a homomorphism");
    report.expect(*ev[g.unit()] == d2.monoid.unit(), "evaluation preserves the unit", "unit not preserved");
  }
  return report;
}

SubmonoidAlgebra submonoid_algebra(const std::vector<std::vector<long>>& generators, unsigned degree_bound,
                                   std::optional<std::vector<long>> grading, Field field) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "at least one generator is required");
  const std::size_t rank = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != rank) throw Error(ErrorCode::DimensionMismatch, "generators of different lengths");
  auto grade_of = [&](const std::vector<long>& lambda, const std::vector<long>& v) {
    long s = 0;
    for (std::size_t i = 0; i < rank; ++i) s += lambda[i] * v[i];
    return s;
  };
  auto positive = [&](const std::vector<long>& lambda) {
    return std::all_of(generators.begin(), generators.end(),
                       [&](const std::vector<long>& g) { return grade_of(lambda, g) > 0; });
  };
  SubmonoidAlgebra out;
  out.degree_bound = degree_bound;
  if (grading) {
    if (grading->size() != rank) throw Error(ErrorCode::DimensionMismatch, "grading length");
    if (!positive(*grading))
      throw Error(ErrorCode::NotPositivelyGraded, "the supplied grading is not positive on every generator");
    out.grading = *grading;
    out.grading_supplied = true;
  } else {
    constexpr long kSearchRadius = 8;
    bool found = false;
    for (long r = 1; r <= kSearchRadius && !found; ++r) {
      std::vector<long> lambda(rank, -r);
      while (true) {
        long sup = 0;
        for (auto x : lambda) sup = std::max(sup, std::labs(x));
        if (sup == r && positive(lambda)) {
          out.grading = lambda;
          found = true;
          break;
        }
        std::size_t i = rank;
        while (i > 0 && lambda[i - 1] == r) lambda[--i] = -r;
        if (i == 0) break;
        ++lambda[i - 1];
      }
    }
    if (!found) throw Error(ErrorCode::NotPositivelyGraded, "no positive grading found");
  }
  std::set<std::vector<long>> seen{std::vector<long>(rank, 0)};
  std::vector<std::vector<long>> frontier{std::vector<long>(rank, 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        std::vector<long> y = x;
        for (std::size_t i = 0; i < rank; ++i) y[i] += g[i];
        if (grade_of(out.grading, y) <= static_cast<long>(degree_bound) && seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  out.elements.assign(seen.begin(), seen.end());
  std::stable_sort(out.elements.begin(), out.elements.end(), [&](const auto& x, const auto& y) {
    return grade_of(out.grading, x) < grade_of(out.grading, y);
  });
  out.dims_by_grade.assign(degree_bound + 1, 0);
  std::map<std::vector<long>, std::size_t> index;
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    unsigned grade = static_cast<unsigned>(grade_of(out.grading, out.elements[i]));
    out.grades.push_back(grade);
    ++out.dims_by_grade[grade];
    index[out.elements[i]] = i;
  }
  const std::size_t n = out.elements.size();
  FinBialgebra& alg = out.algebra;
  alg.field = field;
  alg.dim = n;
  for (const auto& e : out.elements) {
    std::string name = "t^(";
    for (std::size_t i = 0; i < rank; ++i) name += (i ? "," : "") + std::to_string(e[i]);
    alg.basis.push_back(name + ")");
  }
  alg.mult.emplace(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long> s = out.elements[i];
      for (std::size_t k = 0; k < rank; ++k) s[k] += out.elements[j][k];
      auto it = index.find(s);
      if (it != index.end()) (*alg.mult)[i * n + j] = {{it->second, Scalar(field, 1L)}};
    }
  alg.unit = unit_vector(field, n, 0);
  out.report = Report("submonoid of Z^" + std::to_string(rank));
  std::string g = "(";
  for (std::size_t i = 0; i < rank; ++i) g += (i ? "," : "") + std::to_string(out.grading[i]);
  out.report.pass("positive grading", g + ")" + (out.grading_supplied ? " supplied" : " found by search"));
  out.report.pass("T -> group(T) is injective", "automatic for submonoids of Z^n");
  out.report.pass("group(T) is torsion-free", "automatic for subgroups of Z^n");
  out.report.merge(verify_algebra(alg), "truncated monoid algebra: ");
  std::string dims;
  for (std::size_t k = 0; k <= degree_bound; ++k) dims += (k ? "," : "") + std::to_string(out.dims_by_grade[k]);
  out.report.pass("elements by grade", dims);
  return out;
}

}  // namespace hopfdual
