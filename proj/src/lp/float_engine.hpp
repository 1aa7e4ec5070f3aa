#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fbp/lp/linear_program.hpp"

namespace fbp::lp::detail {

struct FloatBasis {
  std::vector<std::size_t> columns;  // basic structural columns, ascending
  std::vector<std::size_t> rows;     // rows whose logical is basic, ascending
};

// Floating-point optimum of min 1^T x, M x = 1 (or >= 1), x >= 0, warm
// started from the given basic flags. Returns
// nullopt when the float solver gives up or runs out of time. The result is
// only a guess; callers verify it exactly.
std::optional<FloatBasis> float_optimal_basis(std::size_t num_rows, Sense sense,
                                              const std::vector<std::vector<std::uint32_t>>& cols,
                                              const std::vector<bool>& col_basic,
                                              const std::vector<bool>& row_basic,
                                              std::optional<std::chrono::steady_clock::time_point> deadline);

}  // namespace fbp::lp::detail
