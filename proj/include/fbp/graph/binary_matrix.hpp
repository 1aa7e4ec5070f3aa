#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fbp/bitset.hpp"

namespace fbp {

struct Edge {
  std::uint32_t row;
  std::uint32_t col;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A 0/1 matrix, i.e. the bipartite adjacency of G_A. Immutable after
// construction. Ones are numbered 0..E-1 in row-major order; every primal
// and dual vector in the library is indexed by that numbering.
class BinaryMatrix {
 public:
  // Throws ContractViolation if rows is empty, num_cols is zero, or any row
  // bitset has a width different from num_cols.
  BinaryMatrix(std::size_t num_cols, std::vector<Bitset> rows);

  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& entries);
  static BinaryMatrix domino();
  static BinaryMatrix crown(std::size_t n);
  static BinaryMatrix all_ones(std::size_t num_rows, std::size_t num_cols);
  static BinaryMatrix identity(std::size_t n);

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return num_cols_; }
  std::size_t num_edges() const { return edges_.size(); }

  bool at(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  const Bitset& row(std::size_t i) const { return rows_[i]; }
  const std::vector<Bitset>& rows() const { return rows_; }
  // Column j as a bitset over rows. Computed on demand.
  Bitset column(std::size_t j) const;

  const std::vector<Edge>& edges() const { return edges_; }
  Edge edge(std::size_t e) const { return edges_[e]; }
  // Row-major index of the one at (i, j); nullopt if a_ij = 0 or out of range.
  std::optional<std::size_t> edge_index(std::size_t i, std::size_t j) const;
  // First edge index belonging to row i (== edge count of rows < i).
  std::size_t row_offset(std::size_t i) const { return row_offset_[i]; }

  BinaryMatrix transpose() const;

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.num_cols_ == b.num_cols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t num_cols_;
  std::vector<Bitset> rows_;
  std::vector<std::size_t> row_offset_;
  std::vector<Edge> edges_;
};

}  // namespace fbp
