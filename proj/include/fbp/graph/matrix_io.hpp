#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "fbp/graph/binary_matrix.hpp"

namespace fbp {

// Text format: optional lines starting with '#', then one line per row made
// of '0'/'1' characters, optionally separated by spaces or tabs. All rows must
// have the same length. Blank lines are ignored. Throws FormatError.
BinaryMatrix parse_matrix(std::istream& in);
BinaryMatrix parse_matrix(std::string_view text);

// One line per row, no separators, trailing newline.
std::string format_matrix(const BinaryMatrix& a);

// "domino" and "crown5" (any "crownN", N >= 2) are built in.
std::optional<BinaryMatrix> builtin_matrix(std::string_view name);

// Built-in name or path to a matrix file. Throws FormatError.
BinaryMatrix load_matrix(const std::string& source);

// FNV-1a 64 over the dimensions and the row bitstrings, as 16 hex digits.
std::string matrix_hash(const BinaryMatrix& a);

}  // namespace fbp
