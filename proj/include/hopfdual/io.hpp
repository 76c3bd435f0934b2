#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfdual/bialgebra.hpp"
#include "hopfdual/lie.hpp"
#include "hopfdual/matrix.hpp"
#include "hopfdual/monoid.hpp"
#include "hopfdual/representation.hpp"

namespace hopfdual::io {

// Parsers throw Error(ParseError) with the source name and either the byte
// offset of a syntax error or the JSON pointer of the offending value.
// Writers emit canonical text: fixed key order, sorted tensor entries,
// reduced scalar strings, one entry per line, trailing newline.

FinBialgebra parse_bialgebra(std::string_view text, const std::string& source = "<input>");
std::string write_bialgebra(const FinBialgebra& a);

/// A monoid file either spells out the table or lists invariant factors;
/// the canonical form keeps whichever was given.
struct MonoidFile {
  FiniteMonoid monoid;
  std::optional<std::vector<std::uint64_t>> invariant_factors;
};
MonoidFile parse_monoid(std::string_view text, const std::string& source = "<input>");
std::string write_monoid(const MonoidFile& m);
std::string write_monoid(const FiniteMonoid& m);

/// "monoid" is either an inline monoid object or a path resolved against
/// `base_dir`. "field" is optional and defaults to the rationals.
struct RepFile {
  Representation rep;
  std::optional<std::string> monoid_reference;
  std::optional<std::vector<std::uint64_t>> invariant_factors;
};
RepFile parse_representation(std::string_view text, const std::string& source = "<input>",
                             const std::filesystem::path& base_dir = {});
std::string write_representation(const RepFile& r);
std::string write_representation(const Representation& rho);

LieAlgebra parse_lie(std::string_view text, const std::string& source = "<input>");
std::string write_lie(const LieAlgebra& l);

/// {"field": ..., "matrix": [[...]]}; `field` overrides the file's field.
Matrix parse_matrix(std::string_view text, const std::string& source = "<input>",
                    std::optional<Field> field = std::nullopt);
std::string write_matrix(const Matrix& m);

/// {"subspace": [[...], ...]}: vectors whose G-span is divided out.
std::vector<Vector> parse_subspace(std::string_view text, Field field, std::size_t dim,
                                   const std::string& source = "<input>");

enum class FileKind { Bialgebra, Monoid, Representation, Lie, Matrix };
/// Detected from the keys present.
FileKind detect_kind(std::string_view text, const std::string& source = "<input>");

/// Parses and rewrites in canonical form; idempotent.
std::string canonicalize(std::string_view text, const std::string& source = "<input>",
                         const std::filesystem::path& base_dir = {});

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// $HOPFDUAL_CORPUS, falling back to the given default.
std::filesystem::path corpus_dir(const std::filesystem::path& fallback = "corpus");

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace hopfdual::io
