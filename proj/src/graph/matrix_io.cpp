#include "fbp/graph/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "fbp/errors.hpp"

namespace fbp {

BinaryMatrix parse_matrix(std::istream& in) {
  std::vector<Bitset> rows;
  std::size_t width = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    std::string bits;
    for (char c : line) {
      if (c == '0' || c == '1') {
        bits += c;
      } else if (c != ' ' && c != '\t') {
        throw FormatError("line " + std::to_string(line_no) + ": unexpected character '" + std::string(1, c) + "'");
      }
    }
    if (bits.empty()) continue;
    if (rows.empty()) {
      width = bits.size();
    } else if (bits.size() != width) {
      throw FormatError("line " + std::to_string(line_no) + ": row has " + std::to_string(bits.size()) +
                        " entries, expected " + std::to_string(width));
    }
    rows.push_back(Bitset::from_string(bits));
  }
  if (rows.empty()) throw FormatError("matrix has no rows");
  return BinaryMatrix(width, std::move(rows));
}

BinaryMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

std::string format_matrix(const BinaryMatrix& a) {
  std::string out;
  out.reserve(a.num_rows() * (a.num_cols() + 1));
  for (const auto& r : a.rows()) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

std::optional<BinaryMatrix> builtin_matrix(std::string_view name) {
  if (name == "domino") return BinaryMatrix::domino();
  if (name.starts_with("crown")) {
    std::size_t n = 0;
    const auto digits = name.substr(5);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && n >= 2 && n <= 4096) return BinaryMatrix::crown(n);
  }
  return std::nullopt;
}

BinaryMatrix load_matrix(const std::string& source) {
  if (auto m = builtin_matrix(source)) return *std::move(m);
  std::ifstream in(source);
  if (!in) throw FormatError("cannot open matrix file '" + source + "' (and it is not a built-in name)");
  return parse_matrix(in);
}

std::string matrix_hash(const BinaryMatrix& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (char c : std::to_string(a.num_rows()) + "x" + std::to_string(a.num_cols()) + "\n") feed(static_cast<unsigned char>(c));
  for (char c : format_matrix(a)) feed(static_cast<unsigned char>(c));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace fbp
