#include "gf2e/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace gf2e {

namespace {

constexpr std::string_view kMagic = "gf2e-mat";
constexpr std::string_view kVersion = "v1";

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(' ', pos);
    const std::size_t end = next == std::string_view::npos ? s.size() : next;
    out.push_back(s.substr(pos, end - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::uint64_t parse_number(std::string_view token, int base, std::size_t line, std::string_view what) {
  if (base == 16 && token.size() > 2 && token[0] == '0' && token[1] == 'x') token.remove_prefix(2);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v, base);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(line, "malformed " + std::string(what) + " '" + std::string(token) + "'");
  }
  return v;
}

std::string_view expect_field(std::string_view token, std::string_view key, std::size_t line) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') {
    fail(line, "expected '" + std::string(key) + "=...' in header, got '" + std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

std::string to_hex(std::uint64_t v) {
  char buf[20];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, 16);
  return std::string(buf, ptr);
}

}  // namespace

std::string serialize(const PackedMatrix& a, Repr repr) {
  std::string out;
  out.reserve(64 + a.rows() * a.cols() * 3);
  out += kMagic;
  out += ' ';
  out += kVersion;
  out += " e=" + std::to_string(a.degree());
  out += " f=" + to_hex(a.field().modulus());
  out += " rows=" + std::to_string(a.rows());
  out += " cols=" + std::to_string(a.cols());
  out += repr == Repr::kPacked ? " repr=packed\n" : " repr=sliced\n";
  char buf[8];
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), a.at(i, j), 16);
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

MatrixFile parse_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) fail(lines.size() + 1, "missing trailing newline");
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) fail(1, "empty input");

  const auto header = split_spaces(lines[0]);
  if (header.size() != 7 || header[0] != kMagic) fail(1, "not a gf2e-mat header");
  if (header[1] != kVersion) fail(1, "unsupported version '" + std::string(header[1]) + "'");
  const auto e = parse_number(expect_field(header[2], "e", 1), 10, 1, "degree");
  const auto f = parse_number(expect_field(header[3], "f", 1), 16, 1, "modulus");
  const auto rows = parse_number(expect_field(header[4], "rows", 1), 10, 1, "row count");
  const auto cols = parse_number(expect_field(header[5], "cols", 1), 10, 1, "column count");
  const auto repr_name = expect_field(header[6], "repr", 1);
  Repr repr;
  if (repr_name == "packed") {
    repr = Repr::kPacked;
  } else if (repr_name == "sliced") {
    repr = Repr::kSliced;
  } else {
    fail(1, "unknown repr '" + std::string(repr_name) + "'");
  }

  FieldPtr field;
  try {
    if (e > 64 || f > 0xffffffffu) throw FieldError("out of range");
    field = (f == default_modulus(static_cast<int>(e))) ? default_field(static_cast<int>(e))
                                                       : make_field(static_cast<int>(e), static_cast<std::uint32_t>(f));
  } catch (const std::exception& ex) {
    fail(1, std::string("invalid field: ") + ex.what());
  }
  if (lines.size() != rows + 1) {
    fail(lines.size(), "expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 1));
  }

  PackedMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t line = i + 2;
    if (cols == 0) {
      if (!lines[i + 1].empty()) fail(line, "expected an empty row");
      continue;
    }
    const auto tokens = split_spaces(lines[i + 1]);
    if (tokens.size() != cols) {
      fail(line, "expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      for (char c : tokens[j]) {
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) fail(line, "entries must be lowercase hex");
      }
      const auto v = parse_number(tokens[j], 16, line, "entry");
      if (v >= field->order()) fail(line, "entry " + std::string(tokens[j]) + " is not below 2^e");
      m.put(i, j, static_cast<Element>(v));
    }
  }
  return {std::move(m), repr};
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_matrix(ss.str());
  } catch (const ParseError& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
}

void write_matrix_file(const std::filesystem::path& path, const PackedMatrix& a, Repr repr) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  const std::string text = serialize(a, repr);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace gf2e
