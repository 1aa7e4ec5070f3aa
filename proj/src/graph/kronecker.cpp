#include "fbp/graph/kronecker.hpp"

#include <limits>

#include "fbp/errors.hpp"

namespace fbp {

namespace {

std::size_t checked_mul(std::size_t x, std::size_t y) {
  std::size_t out;
  if (__builtin_mul_overflow(x, y, &out) || out > std::numeric_limits<std::uint32_t>::max()) {
    throw SizeError("Kronecker product dimension overflow");
  }
  return out;
}

}  // namespace

BinaryMatrix kronecker(const BinaryMatrix& a, const BinaryMatrix& b) {
  const std::size_t mb = b.num_rows();
  const std::size_t nb = b.num_cols();
  const std::size_t rows = checked_mul(a.num_rows(), mb);
  const std::size_t cols = checked_mul(a.num_cols(), nb);
  std::vector<Bitset> out(rows, Bitset(cols));
  for (std::size_t ia = 0; ia < a.num_rows(); ++ia) {
    for (std::size_t ib = 0; ib < mb; ++ib) {
      Bitset& row = out[ia * mb + ib];
      a.row(ia).for_each([&](std::size_t ja) { b.row(ib).for_each([&](std::size_t jb) { row.set(ja * nb + jb); }); });
    }
  }
  return BinaryMatrix(cols, std::move(out));
}

BinaryMatrix kronecker_power(const BinaryMatrix& a, int k) {
  if (k < 1) throw ContractViolation("kronecker_power needs k >= 1");
  BinaryMatrix result = a;
  for (int step = 1; step < k; ++step) result = kronecker(result, a);
  return result;
}

}  // namespace fbp
