#include "fbp/graph/biclique.hpp"

#include "fbp/errors.hpp"

namespace fbp {

Biclique make_biclique(const BinaryMatrix& a, std::initializer_list<std::size_t> rows,
                       std::initializer_list<std::size_t> cols) {
  return {Bitset::from_indices(a.num_rows(), rows), Bitset::from_indices(a.num_cols(), cols)};
}

bool is_valid_biclique(const BinaryMatrix& a, const Biclique& b) {
  if (b.rows.size() != a.num_rows() || b.cols.size() != a.num_cols()) {
    throw ContractViolation("biclique dimensions do not match the matrix");
  }
  if (b.empty()) return false;
  bool ok = true;
  b.rows.for_each([&](std::size_t i) { ok = ok && b.cols.is_subset_of(a.row(i)); });
  return ok;
}

Bitset incidence_column(const BinaryMatrix& a, const Biclique& b) {
  if (!is_valid_biclique(a, b)) throw ContractViolation("incidence_column of an invalid biclique");
  Bitset col(a.num_edges());
  b.rows.for_each([&](std::size_t i) {
    const std::size_t base = a.row_offset(i);
    const Bitset& row = a.row(i);
    // Rank of column j within row i is the running popcount.
    std::size_t rank = 0;
    row.for_each([&](std::size_t j) {
      if (b.cols.test(j)) col.set(base + rank);
      ++rank;
    });
  });
  return col;
}

Biclique kronecker_biclique(const Biclique& b1, const Biclique& b2) {
  const std::size_t m2 = b2.rows.size();
  const std::size_t n2 = b2.cols.size();
  Biclique out{Bitset(b1.rows.size() * m2), Bitset(b1.cols.size() * n2)};
  b1.rows.for_each([&](std::size_t i1) { b2.rows.for_each([&](std::size_t i2) { out.rows.set(i1 * m2 + i2); }); });
  b1.cols.for_each([&](std::size_t j1) { b2.cols.for_each([&](std::size_t j2) { out.cols.set(j1 * n2 + j2); }); });
  return out;
}

std::string to_matrix_string(const Biclique& b) {
  std::string s;
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    for (std::size_t j = 0; j < b.cols.size(); ++j) s += (b.rows.test(i) && b.cols.test(j)) ? '1' : '.';
    s += '\n';
  }
  return s;
}

}  // namespace fbp
