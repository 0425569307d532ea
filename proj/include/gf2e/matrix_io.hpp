#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gf2e/packed_matrix.hpp"

namespace gf2e {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Layout tag stored in the file header. The body is identical for both.
enum class Repr { kPacked, kSliced };

struct MatrixFile {
  PackedMatrix matrix;
  Repr repr = Repr::kPacked;
};

/// Text format:
///   gf2e-mat v1 e=<e> f=<hex> rows=<m> cols=<n> repr=<packed|sliced>
/// followed by one line per row of lowercase hex entries separated by single
/// spaces, each line ending in '\n'.
std::string serialize(const PackedMatrix& a, Repr repr = Repr::kPacked);

/// Parses the canonical format; throws ParseError with a line number on any
/// deviation (wrong counts, entries >= 2^e, reducible f, ...).
MatrixFile parse_matrix(std::string_view text);

MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const PackedMatrix& a, Repr repr = Repr::kPacked);

}  // namespace gf2e
