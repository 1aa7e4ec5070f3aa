#pragma once

#include "fbp/graph/binary_matrix.hpp"

namespace fbp {

// Throws SizeError when the product dimensions overflow the index types.
BinaryMatrix kronecker(const BinaryMatrix& a, const BinaryMatrix& b);

// Left-associated k-fold product; k = 1 returns a copy of a.
BinaryMatrix kronecker_power(const BinaryMatrix& a, int k);

}  // namespace fbp
