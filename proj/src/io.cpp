#include "hopfdual/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "hopfdual/error.hpp"

namespace hopfdual::io {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::ParseError, source + ": " + (pointer.empty() ? "/" : pointer) + ": " + what);
}

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, source + ": syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

// Checked accessors; every failure names the JSON pointer of the value.
class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  const std::string& source() const { return source_; }

  [[noreturn]] void fail_at(const std::string& ptr, const std::string& what) const { fail(source_, ptr, what); }

  const json& member(const json& obj, const std::string& ptr, const char* key) const {
    if (!obj.is_object()) fail_at(ptr, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail_at(ptr, std::string("missing key \"") + key + "\"");
    return *it;
  }

  const json* optional_member(const json& obj, const char* key) const {
    auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
  }

  const json& array(const json& v, const std::string& ptr) const {
    if (!v.is_array()) fail_at(ptr, "expected an array");
    return v;
  }

  std::uint64_t natural(const json& v, const std::string& ptr) const {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail_at(ptr, "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  std::size_t index(const json& v, const std::string& ptr, std::size_t bound) const {
    const std::uint64_t i = natural(v, ptr);
    if (i >= bound) fail_at(ptr, "index " + std::to_string(i) + " out of range (dimension " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(i);
  }

  std::string string(const json& v, const std::string& ptr) const {
    if (!v.is_string()) fail_at(ptr, "expected a string");
    return v.get<std::string>();
  }

  Scalar scalar(const json& v, const std::string& ptr, Field field) const {
    std::string text;
    if (v.is_string()) {
      text = v.get<std::string>();
    } else if (v.is_number_integer()) {
      text = v.dump();
    } else {
      fail_at(ptr, "expected a scalar string");
    }
    try {
      return Scalar::parse(field, text);
    } catch (const Error& e) {
      fail_at(ptr, e.what());
    }
  }

  Field field(const json& v, const std::string& ptr) const {
    const std::string kind = string(member(v, ptr, "kind"), ptr + "/kind");
    if (kind == "rationals") return Field::rationals();
    if (kind == "prime") {
      try {
        return Field::prime(natural(member(v, ptr, "p"), ptr + "/p"));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        fail_at(ptr + "/p", e.what());
      }
    }
    fail_at(ptr + "/kind", "unknown field kind \"" + kind + "\"");
  }

  std::vector<std::string> names(const json& v, const std::string& ptr, std::size_t n) const {
    array(v, ptr);
    if (v.size() != n) fail_at(ptr, "expected " + std::to_string(n) + " names, got " + std::to_string(v.size()));
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(string(v[i], ptr + "/" + std::to_string(i)));
      if (!seen.insert(out.back()).second) fail_at(ptr + "/" + std::to_string(i), "duplicate name \"" + out.back() + "\"");
    }
    return out;
  }

  Vector vector(const json& v, const std::string& ptr, Field f, std::size_t n) const {
    array(v, ptr);
    if (v.size() != n) fail_at(ptr, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
    Vector out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(v[i], ptr + "/" + std::to_string(i), f));
    return out;
  }

  Matrix matrix(const json& v, const std::string& ptr, Field f, std::optional<std::size_t> rows,
                std::optional<std::size_t> cols) const {
    array(v, ptr);
    if (rows && v.size() != *rows) fail_at(ptr, "expected " + std::to_string(*rows) + " rows, got " + std::to_string(v.size()));
    const std::size_t r = v.size();
    std::size_t c = cols.value_or(r == 0 ? 0 : v[0].is_array() ? v[0].size() : 0);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < r; ++i) out.push_back(vector(v[i], ptr + "/" + std::to_string(i), f, c));
    return Matrix::from_rows(f, out, c);
  }

 private:
  std::string source_;
};

json field_json(Field f) {
  json j;
  if (f.is_prime()) {
    j["kind"] = "prime";
    j["p"] = f.characteristic();
  } else {
    j["kind"] = "rationals";
  }
  return j;
}

json vector_json(const Vector& v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

json matrix_json(const Matrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    j.push_back(std::move(row));
  }
  return j;
}

// Containers at depth 0 and 1 are broken over lines when they hold
// containers themselves; anything deeper is written compactly.
void emit(std::ostringstream& out, const json& v, int depth) {
  const bool nested = (v.is_array() || v.is_object()) && !v.empty() &&
                      std::any_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); });
  if (depth >= 2 || !(depth == 0 || nested)) {
    out << v.dump();
    return;
  }
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  out << (v.is_object() ? "{" : "[") << "\n";
  std::size_t i = 0;
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      out << pad << json(it.key()).dump() << ": ";
      emit(out, it.value(), depth + 1);
      out << (i + 1 < v.size() ? ",\n" : "\n");
    }
  } else {
    for (const auto& x : v) {
      out << pad;
      emit(out, x, depth + 1);
      out << (++i < v.size() ? ",\n" : "\n");
    }
  }
  out << close << (v.is_object() ? "}" : "]");
}

std::string render(const json& doc) {
  std::ostringstream out;
  emit(out, doc, 0);
  out << "\n";
  return out.str();
}

FinBialgebra bialgebra_from(const json& doc, const Reader& rd) {
  FinBialgebra a;
  a.field = rd.field(rd.member(doc, "", "field"), "/field");
  const Field f = a.field;
  const std::size_t n = rd.natural(rd.member(doc, "", "dim"), "/dim");
  a.dim = n;
  if (const json* b = rd.optional_member(doc, "basis")) {
    a.basis = rd.names(*b, "/basis", n);
  } else {
    for (std::size_t i = 0; i < n; ++i) a.basis.push_back("e" + std::to_string(i));
  }
  if (const json* fl = rd.optional_member(doc, "filtration")) {
    rd.array(*fl, "/filtration");
    if (fl->size() != n) rd.fail_at("/filtration", "expected " + std::to_string(n) + " degrees");
    std::vector<unsigned> deg;
    for (std::size_t i = 0; i < n; ++i) deg.push_back(static_cast<unsigned>(rd.natural((*fl)[i], "/filtration/" + std::to_string(i))));
    a.filtration = std::move(deg);
  }
  // Both tensors are lists of [slot, slot, slot, "c"] entries.
  auto tensor = [&](const char* key, bool product) {
    const std::string base = std::string("/") + key;
    std::vector<LinComb> acc(product ? n * n : n);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    const json& arr = rd.array(*rd.optional_member(doc, key), base);
    for (std::size_t e = 0; e < arr.size(); ++e) {
      const std::string ptr = base + "/" + std::to_string(e);
      const json& entry = arr[e];
      if (!entry.is_array() || entry.size() != 4) rd.fail_at(ptr, "expected [index, index, index, coefficient]");
      const std::size_t x = rd.index(entry[0], ptr + "/0", n), y = rd.index(entry[1], ptr + "/1", n),
                        z = rd.index(entry[2], ptr + "/2", n);
      if (!seen.insert({x, y, z}).second) rd.fail_at(ptr, "duplicate entry");
      const Scalar c = rd.scalar(entry[3], ptr + "/3", f);
      if (product) {
        accumulate(acc[x * n + y], z, c);
      } else {
        accumulate(acc[x], y * n + z, c);
      }
    }
    std::vector<SparseVec> out;
    for (const auto& l : acc) out.push_back(to_sparse(l));
    return out;
  };
  if (rd.optional_member(doc, "mult")) a.mult = tensor("mult", true);
  if (const json* u = rd.optional_member(doc, "unit")) a.unit = rd.vector(*u, "/unit", f, n);
  if (rd.optional_member(doc, "comult")) a.comult = tensor("comult", false);
  if (const json* c = rd.optional_member(doc, "counit")) a.counit = rd.vector(*c, "/counit", f, n);
  if (const json* s = rd.optional_member(doc, "antipode")) a.antipode = rd.matrix(*s, "/antipode", f, n, n);
  try {
    validate_shapes(a);
  } catch (const Error& e) {
    rd.fail_at("", e.what());
  }
  return a;
}

json bialgebra_to(const FinBialgebra& a) {
  json doc;
  const std::size_t n = a.dim;
  doc["field"] = field_json(a.field);
  doc["dim"] = n;
  doc["basis"] = a.basis;
  if (a.filtration) doc["filtration"] = *a.filtration;
  if (a.mult) {
    json m = json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : a.product(i, j)) m.push_back(json::array({i, j, k, c.to_string()}));
    doc["mult"] = std::move(m);
  }
  if (a.unit) doc["unit"] = vector_json(*a.unit);
  if (a.comult) {
    json m = json::array();
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [ij, c] : a.coproduct(k)) m.push_back(json::array({k, ij / n, ij % n, c.to_string()}));
    doc["comult"] = std::move(m);
  }
  if (a.counit) doc["counit"] = vector_json(*a.counit);
  if (a.antipode) doc["antipode"] = matrix_json(*a.antipode);
  return doc;
}

MonoidFile monoid_from(const json& doc, const Reader& rd, const std::string& base) {
  if (!doc.is_object()) rd.fail_at(base, "expected a monoid object");
  try {
    if (const json* fac = rd.optional_member(doc, "invariant_factors")) {
      rd.array(*fac, base + "/invariant_factors");
      std::vector<std::uint64_t> d;
      for (std::size_t i = 0; i < fac->size(); ++i) d.push_back(rd.natural((*fac)[i], base + "/invariant_factors/" + std::to_string(i)));
      return {FiniteAbelianGroup(d).to_monoid(), d};
    }
    const json& el = rd.array(rd.member(doc, base, "elements"), base + "/elements");
    const std::size_t n = el.size();
    auto names = rd.names(el, base + "/elements", n);
    const json& tab = rd.array(rd.member(doc, base, "table"), base + "/table");
    if (tab.size() != n) rd.fail_at(base + "/table", "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<std::size_t>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string ptr = base + "/table/" + std::to_string(i);
      rd.array(tab[i], ptr);
      if (tab[i].size() != n) rd.fail_at(ptr, "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) table[i].push_back(rd.index(tab[i][j], ptr + "/" + std::to_string(j), n));
    }
    const std::size_t unit = rd.index(rd.member(doc, base, "unit"), base + "/unit", std::max<std::size_t>(n, 1));
    return {FiniteMonoid(std::move(names), std::move(table), unit), std::nullopt};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    rd.fail_at(base, e.what());
  }
}

json monoid_to(const FiniteMonoid& m, const std::optional<std::vector<std::uint64_t>>& factors) {
  json doc;
  if (factors) {
    doc["invariant_factors"] = *factors;
    return doc;
  }
  doc["elements"] = m.names();
  doc["table"] = m.table();
  doc["unit"] = m.unit();
  return doc;
}

}  // namespace

FinBialgebra parse_bialgebra(std::string_view text, const std::string& source) {
  return bialgebra_from(parse_json(text, source), Reader(source));
}

std::string write_bialgebra(const FinBialgebra& a) { return render(bialgebra_to(a)); }

MonoidFile parse_monoid(std::string_view text, const std::string& source) {
  return monoid_from(parse_json(text, source), Reader(source), "");
}

std::string write_monoid(const MonoidFile& m) { return render(monoid_to(m.monoid, m.invariant_factors)); }
std::string write_monoid(const FiniteMonoid& m) { return render(monoid_to(m, std::nullopt)); }

RepFile parse_representation(std::string_view text, const std::string& source, const std::filesystem::path& base_dir) {
  const json doc = parse_json(text, source);
  const Reader rd(source);
  std::optional<std::string> reference;
  MonoidFile mf{monoids::trivial(), std::nullopt};
  const json& mj = rd.member(doc, "", "monoid");
  if (mj.is_string()) {
    reference = mj.get<std::string>();
    const std::filesystem::path p = base_dir / *reference;
    std::string body;
    try {
      body = read_file(p);
    } catch (const Error& e) {
      rd.fail_at("/monoid", e.what());
    }
    mf = parse_monoid(body, p.string());
  } else {
    mf = monoid_from(mj, rd, "/monoid");
  }
  const Field f = rd.optional_member(doc, "field") ? rd.field(doc["field"], "/field") : Field::rationals();
  const std::size_t d = rd.natural(rd.member(doc, "", "dim"), "/dim");
  const json& mats = rd.member(doc, "", "matrices");
  if (!mats.is_object()) rd.fail_at("/matrices", "expected an object keyed by element name");
  std::vector<std::optional<Matrix>> action(mf.monoid.size());
  for (auto it = mats.begin(); it != mats.end(); ++it) {
    const std::string ptr = "/matrices/" + it.key();
    auto g = mf.monoid.find(it.key());
    if (!g) rd.fail_at(ptr, "no element named \"" + it.key() + "\"");
    action[*g] = rd.matrix(it.value(), ptr, f, d, d);
  }
  std::vector<Matrix> matrices;
  for (std::size_t g = 0; g < action.size(); ++g) {
    if (!action[g]) rd.fail_at("/matrices", "missing matrix for \"" + mf.monoid.name(g) + "\"");
    matrices.push_back(std::move(*action[g]));
  }
  return {Representation{mf.monoid, f, d, std::move(matrices)}, reference, mf.invariant_factors};
}

std::string write_representation(const RepFile& r) {
  json doc;
  if (r.monoid_reference) {
    doc["monoid"] = *r.monoid_reference;
  } else {
    doc["monoid"] = monoid_to(r.rep.monoid, r.invariant_factors);
  }
  doc["field"] = field_json(r.rep.field);
  doc["dim"] = r.rep.dim;
  json mats = json::object();
  for (std::size_t g = 0; g < r.rep.monoid.size(); ++g) mats[r.rep.monoid.name(g)] = matrix_json(r.rep.action[g]);
  doc["matrices"] = std::move(mats);
  return render(doc);
}

std::string write_representation(const Representation& rho) { return write_representation(RepFile{rho, std::nullopt, std::nullopt}); }

LieAlgebra parse_lie(std::string_view text, const std::string& source) {
  const json doc = parse_json(text, source);
  const Reader rd(source);
  const Field f = rd.optional_member(doc, "field") ? rd.field(doc["field"], "/field") : Field::rationals();
  const std::size_t d = rd.natural(rd.member(doc, "", "dim"), "/dim");
  auto basis = rd.names(rd.member(doc, "", "basis"), "/basis", d);
  const json& br = rd.array(rd.member(doc, "", "brackets"), "/brackets");
  std::vector<std::tuple<std::size_t, std::size_t, SparseVec>> upper;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < br.size(); ++e) {
    const std::string ptr = "/brackets/" + std::to_string(e);
    const json& entry = br[e];
    if (!entry.is_array() || entry.size() != 3) rd.fail_at(ptr, "expected [i, j, [[k, coefficient], ...]]");
    const std::size_t i = rd.index(entry[0], ptr + "/0", d), j = rd.index(entry[1], ptr + "/1", d);
    if (i >= j) rd.fail_at(ptr, "brackets are listed for i < j only");
    if (!seen.insert({i, j}).second) rd.fail_at(ptr, "duplicate bracket");
    LinComb acc;
    std::set<std::size_t> terms;
    const json& rhs = rd.array(entry[2], ptr + "/2");
    for (std::size_t t = 0; t < rhs.size(); ++t) {
      const std::string tp = ptr + "/2/" + std::to_string(t);
      if (!rhs[t].is_array() || rhs[t].size() != 2) rd.fail_at(tp, "expected [k, coefficient]");
      const std::size_t k = rd.index(rhs[t][0], tp + "/0", d);
      if (!terms.insert(k).second) rd.fail_at(tp, "duplicate term");
      accumulate(acc, k, rd.scalar(rhs[t][1], tp + "/1", f));
    }
    upper.emplace_back(i, j, to_sparse(acc));
  }
  return make_lie_algebra(f, std::move(basis), upper);
}

std::string write_lie(const LieAlgebra& l) {
  json doc;
  if (l.field.is_prime()) doc["field"] = field_json(l.field);
  doc["dim"] = l.dim;
  doc["basis"] = l.basis;
  json br = json::array();
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = i + 1; j < l.dim; ++j) {
      if (l.bracket(i, j).empty()) continue;
      json rhs = json::array();
      for (const auto& [k, c] : l.bracket(i, j)) rhs.push_back(json::array({k, c.to_string()}));
      br.push_back(json::array({i, j, rhs}));
    }
  doc["brackets"] = std::move(br);
  return render(doc);
}

Matrix parse_matrix(std::string_view text, const std::string& source, std::optional<Field> field) {
  const json doc = parse_json(text, source);
  const Reader rd(source);
  Field f = Field::rationals();
  if (field) {
    f = *field;
  } else if (rd.optional_member(doc, "field")) {
    f = rd.field(doc["field"], "/field");
  }
  const json& m = rd.array(rd.member(doc, "", "matrix"), "/matrix");
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!m[i].is_array() || m[i].size() != m[0].size()) rd.fail_at("/matrix/" + std::to_string(i), "rows of unequal length");
  return rd.matrix(m, "/matrix", f, std::nullopt, std::nullopt);
}

std::string write_matrix(const Matrix& m) {
  json doc;
  doc["field"] = field_json(m.field());
  doc["matrix"] = matrix_json(m);
  return render(doc);
}

std::vector<Vector> parse_subspace(std::string_view text, Field field, std::size_t dim, const std::string& source) {
  const json doc = parse_json(text, source);
  const Reader rd(source);
  const json& s = rd.array(rd.member(doc, "", "subspace"), "/subspace");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(rd.vector(s[i], "/subspace/" + std::to_string(i), field, dim));
  return out;
}

FileKind detect_kind(std::string_view text, const std::string& source) {
  const json doc = parse_json(text, source);
  if (!doc.is_object()) fail(source, "", "expected a JSON object");
  if (doc.contains("matrices")) return FileKind::Representation;
  if (doc.contains("brackets")) return FileKind::Lie;
  if (doc.contains("matrix")) return FileKind::Matrix;
  if (doc.contains("table") || doc.contains("invariant_factors")) return FileKind::Monoid;
  if (doc.contains("mult") || doc.contains("comult")) return FileKind::Bialgebra;
  fail(source, "", "unrecognised file: none of the known keys present");
}

std::string canonicalize(std::string_view text, const std::string& source, const std::filesystem::path& base_dir) {
  switch (detect_kind(text, source)) {
    case FileKind::Bialgebra: return write_bialgebra(parse_bialgebra(text, source));
    case FileKind::Monoid: return write_monoid(parse_monoid(text, source));
    case FileKind::Representation: return write_representation(parse_representation(text, source, base_dir));
    case FileKind::Lie: return write_lie(parse_lie(text, source));
    case FileKind::Matrix: return write_matrix(parse_matrix(text, source));
  }
  return {};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, path.string() + ": cannot write file");
  out << text;
}

std::filesystem::path corpus_dir(const std::filesystem::path& fallback) {
  const char* env = std::getenv("HOPFDUAL_CORPUS");
  return env && *env ? std::filesystem::path(env) : fallback;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace hopfdual::io
