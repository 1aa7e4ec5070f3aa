#pragma once

#include <cstddef>
#include <vector>

#include "fbp/bitset.hpp"

namespace fbp::lp {

// Mx = 1 (biclique partition) or Mx >= 1 (biclique cover).
enum class Sense { kPartition, kCover };

// min 1^T x  s.t.  M x (= | >=) 1,  x >= 0, where every column of M is a 0/1
// bitset over the num_rows constraint rows.
struct LinearProgram {
  std::size_t num_rows = 0;
  std::vector<Bitset> columns;
  Sense sense = Sense::kPartition;

  // Throws ContractViolation on an empty column or a width mismatch.
  void validate() const;
};

}  // namespace fbp::lp
