#include "float_engine.hpp"

#include <Highs.h>

namespace fbp::lp::detail {

std::optional<FloatBasis> float_optimal_basis(std::size_t num_rows, Sense sense,
                                              const std::vector<std::vector<std::uint32_t>>& cols,
                                              const std::vector<bool>& col_basic,
                                              const std::vector<bool>& row_basic,
                                              std::optional<std::chrono::steady_clock::time_point> deadline) {
  HighsLp lp;
  lp.num_col_ = static_cast<HighsInt>(cols.size());
  lp.num_row_ = static_cast<HighsInt>(num_rows);
  lp.col_cost_.assign(cols.size(), 1.0);
  lp.col_lower_.assign(cols.size(), 0.0);
  lp.col_upper_.assign(cols.size(), kHighsInf);
  lp.row_lower_.assign(num_rows, 1.0);
  lp.row_upper_.assign(num_rows, sense == Sense::kPartition ? 1.0 : kHighsInf);
  lp.a_matrix_.format_ = MatrixFormat::kColwise;
  lp.a_matrix_.num_col_ = lp.num_col_;
  lp.a_matrix_.num_row_ = lp.num_row_;
  // start_ comes with a leading 0 already
  lp.a_matrix_.start_.assign(1, 0);
  lp.a_matrix_.start_.reserve(cols.size() + 1);
  for (const auto& c : cols) {
    for (auto r : c) {
      lp.a_matrix_.index_.push_back(static_cast<HighsInt>(r));
      lp.a_matrix_.value_.push_back(1.0);
    }
    lp.a_matrix_.start_.push_back(static_cast<HighsInt>(lp.a_matrix_.index_.size()));
  }

  Highs highs;
  highs.setOptionValue("output_flag", false);
  highs.setOptionValue("presolve", "off");
  highs.setOptionValue("solver", "simplex");
  highs.setOptionValue("threads", 1);
  highs.setOptionValue("random_seed", 0);
  if (deadline) {
    const double left = std::chrono::duration<double>(*deadline - std::chrono::steady_clock::now()).count();
    if (left <= 0) return std::nullopt;
    highs.setOptionValue("time_limit", left);
  }
  if (highs.passModel(std::move(lp)) != HighsStatus::kOk) return std::nullopt;

  // An alien basis is factored and repaired by HiGHS itself.
  if (col_basic.size() == cols.size() && row_basic.size() == num_rows) {
    HighsBasis start;
    start.col_status.resize(cols.size());
    start.row_status.resize(num_rows);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      start.col_status[j] = col_basic[j] ? HighsBasisStatus::kBasic : HighsBasisStatus::kLower;
    }
    for (std::size_t i = 0; i < num_rows; ++i) {
      start.row_status[i] = row_basic[i] ? HighsBasisStatus::kBasic : HighsBasisStatus::kLower;
    }
    if (highs.setBasis(start) != HighsStatus::kOk) highs.setBasis();
  }

  if (highs.run() == HighsStatus::kError) return std::nullopt;
  if (highs.getModelStatus() != HighsModelStatus::kOptimal) return std::nullopt;
  const HighsBasis& found = highs.getBasis();
  if (!found.valid) return std::nullopt;
  FloatBasis out;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (found.col_status[j] == HighsBasisStatus::kBasic) out.columns.push_back(j);
  }
  for (std::size_t i = 0; i < num_rows; ++i) {
    if (found.row_status[i] == HighsBasisStatus::kBasic) out.rows.push_back(i);
  }
  if (out.columns.size() + out.rows.size() != num_rows) return std::nullopt;
  return out;
}

}  // namespace fbp::lp::detail
