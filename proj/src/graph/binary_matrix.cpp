#include "fbp/graph/binary_matrix.hpp"

#include <limits>

#include "fbp/errors.hpp"

namespace fbp {

BinaryMatrix::BinaryMatrix(std::size_t num_cols, std::vector<Bitset> rows)
    : num_cols_(num_cols), rows_(std::move(rows)) {
  if (rows_.empty() || num_cols_ == 0) throw ContractViolation("matrix needs at least one row and one column");
  constexpr auto kMaxDim = static_cast<std::size_t>(std::numeric_limits<std::uint32_t>::max());
  if (rows_.size() > kMaxDim || num_cols_ > kMaxDim) throw SizeError("matrix dimension exceeds 2^32-1");
  row_offset_.reserve(rows_.size() + 1);
  std::size_t total = 0;
  for (const auto& r : rows_) {
    if (r.size() != num_cols_) throw ContractViolation("row width differs from num_cols");
    row_offset_.push_back(total);
    total += r.count();
  }
  row_offset_.push_back(total);
  edges_.reserve(total);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    rows_[i].for_each([&](std::size_t j) {
      edges_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    });
  }
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& entries) {
  if (entries.empty() || entries.front().empty()) throw ContractViolation("matrix needs at least one row and one column");
  const std::size_t n = entries.front().size();
  std::vector<Bitset> rows;
  rows.reserve(entries.size());
  for (const auto& r : entries) {
    if (r.size() != n) throw ContractViolation("ragged matrix rows");
    Bitset b(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (r[j] != 0 && r[j] != 1) throw ContractViolation("matrix entries must be 0 or 1");
      b.assign(j, r[j] == 1);
    }
    rows.push_back(std::move(b));
  }
  return BinaryMatrix(n, std::move(rows));
}

BinaryMatrix BinaryMatrix::domino() { return from_rows({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}); }

BinaryMatrix BinaryMatrix::crown(std::size_t n) {
  std::vector<Bitset> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Bitset b = Bitset::full(n);
    b.reset(i);
    rows.push_back(std::move(b));
  }
  return BinaryMatrix(n, std::move(rows));
}

BinaryMatrix BinaryMatrix::all_ones(std::size_t num_rows, std::size_t num_cols) {
  return BinaryMatrix(num_cols, std::vector<Bitset>(num_rows, Bitset::full(num_cols)));
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  std::vector<Bitset> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(Bitset::from_indices(n, {i}));
  return BinaryMatrix(n, std::move(rows));
}

Bitset BinaryMatrix::column(std::size_t j) const {
  Bitset c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c.assign(i, rows_[i].test(j));
  return c;
}

std::optional<std::size_t> BinaryMatrix::edge_index(std::size_t i, std::size_t j) const {
  if (i >= rows_.size() || j >= num_cols_ || !rows_[i].test(j)) return std::nullopt;
  return row_offset_[i] + rows_[i].count_below(j);
}

BinaryMatrix BinaryMatrix::transpose() const {
  std::vector<Bitset> cols(num_cols_, Bitset(rows_.size()));
  for (const auto& e : edges_) cols[e.col].set(e.row);
  return BinaryMatrix(rows_.size(), std::move(cols));
}

}  // namespace fbp
