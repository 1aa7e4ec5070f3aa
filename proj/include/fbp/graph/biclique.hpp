#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "fbp/bitset.hpp"
#include "fbp/graph/binary_matrix.hpp"

namespace fbp {

// A (row-set, column-set) pair. Validity is relative to a matrix, see
// is_valid_biclique(). Ordering is the canonical (rows, cols) order.
struct Biclique {
  Bitset rows;
  Bitset cols;

  std::size_t num_edges() const { return rows.count() * cols.count(); }
  bool empty() const { return rows.none() || cols.none(); }
  Biclique transposed() const { return {cols, rows}; }

  friend bool operator==(const Biclique&, const Biclique&) = default;
  friend std::strong_ordering operator<=>(const Biclique& a, const Biclique& b) {
    if (auto c = a.rows <=> b.rows; c != 0) return c;
    return a.cols <=> b.cols;
  }
};

struct BicliqueHash {
  std::size_t operator()(const Biclique& b) const {
    return b.rows.hash() * 0x9e3779b97f4a7c15ULL ^ b.cols.hash();
  }
};

Biclique make_biclique(const BinaryMatrix& a, std::initializer_list<std::size_t> rows,
                       std::initializer_list<std::size_t> cols);

// True iff both sets are nonempty and a_ij = 1 on rows x cols. Throws
// ContractViolation if the bitset widths do not match the matrix.
bool is_valid_biclique(const BinaryMatrix& a, const Biclique& b);

// Column of the edge-biclique incidence matrix M: a bitset over edge indices.
// Throws ContractViolation if b is not a valid biclique of a.
Bitset incidence_column(const BinaryMatrix& a, const Biclique& b);

// Kronecker product of bicliques of A (m1 x n1) and A' (m2 x n2), viewed as a
// biclique of A (x) A'. Row i1*m2+i2, column j1*n2+j2.
Biclique kronecker_biclique(const Biclique& b1, const Biclique& b2);

// Multi-line 0/1 picture, handy in test diagnostics.
std::string to_matrix_string(const Biclique& b);

}  // namespace fbp
