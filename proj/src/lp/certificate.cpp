#include "fbp/lp/certificate.hpp"

namespace fbp::lp {

std::vector<Rational> column_activities(std::span<const Bitset> columns, std::span<const Rational> y) {
  std::vector<Rational> out(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    Rational sum = 0;
    columns[c].for_each([&](std::size_t r) { sum += y[r]; });
    out[c] = std::move(sum);
  }
  return out;
}

CertificateCheck check_optimal(std::size_t num_rows, std::span<const Bitset> columns, Sense sense,
                               const LpSolution& sol) {
  CertificateCheck out;
  if (sol.status != Status::kOptimal) {
    out.failure = "solution is not marked optimal";
    return out;
  }
  if (sol.primal.size() != columns.size() || sol.dual.size() != num_rows) {
    out.failure = "certificate vectors have the wrong length";
    return out;
  }

  std::vector<Rational> row_activity(num_rows, Rational(0));
  out.primal_feasible = true;
  Rational primal_objective = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const Rational& x = sol.primal[c];
    if (sgn(x) < 0) out.primal_feasible = false;
    if (sgn(x) == 0) continue;
    primal_objective += x;
    columns[c].for_each([&](std::size_t r) { row_activity[r] += x; });
  }
  for (std::size_t r = 0; r < num_rows; ++r) {
    const int c = cmp(row_activity[r], 1);
    if (c < 0 || (sense == Sense::kPartition && c != 0)) out.primal_feasible = false;
  }
  if (!out.primal_feasible) out.failure = "primal infeasible";

  const auto col_activity = column_activities(columns, sol.dual);
  out.dual_feasible = true;
  for (const auto& a : col_activity) {
    if (a > 1) out.dual_feasible = false;
  }
  Rational dual_objective = 0;
  for (std::size_t r = 0; r < num_rows; ++r) {
    dual_objective += sol.dual[r];
    if (sense == Sense::kCover && sgn(sol.dual[r]) < 0) out.dual_feasible = false;
  }
  if (!out.dual_feasible && out.failure.empty()) out.failure = "dual infeasible";

  out.strong_duality = primal_objective == dual_objective && primal_objective == sol.objective;
  if (!out.strong_duality && out.failure.empty()) out.failure = "primal and dual objectives differ";

  out.complementary_slackness = true;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (sgn(sol.primal[c]) > 0 && col_activity[c] != 1) out.complementary_slackness = false;
  }
  if (sense == Sense::kCover) {
    for (std::size_t r = 0; r < num_rows; ++r) {
      if (sgn(sol.dual[r]) > 0 && row_activity[r] != 1) out.complementary_slackness = false;
    }
  }
  if (!out.complementary_slackness && out.failure.empty()) out.failure = "complementary slackness violated";
  return out;
}

CertificateCheck check_optimal(const LinearProgram& lp, const LpSolution& sol) {
  return check_optimal(lp.num_rows, lp.columns, lp.sense, sol);
}

bool check_infeasibility_ray(const LinearProgram& lp, const LpSolution& sol) {
  if (sol.status != Status::kInfeasible || sol.farkas.size() != lp.num_rows) return false;
  Rational total = 0;
  for (const auto& y : sol.farkas) {
    if (lp.sense == Sense::kCover && sgn(y) < 0) return false;
    total += y;
  }
  if (sgn(total) <= 0) return false;
  for (const auto& a : column_activities(lp.columns, sol.farkas)) {
    if (sgn(a) > 0) return false;
  }
  return true;
}

}  // namespace fbp::lp
