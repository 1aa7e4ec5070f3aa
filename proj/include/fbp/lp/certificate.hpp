#pragma once

#include <span>
#include <string>

#include "fbp/lp/simplex.hpp"

namespace fbp::lp {

struct CertificateCheck {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool strong_duality = false;
  bool complementary_slackness = false;
  std::string failure;

  bool ok() const { return primal_feasible && dual_feasible && strong_duality && complementary_slackness; }
};

// Independent rational re-check of an optimal solution against the columns.
CertificateCheck check_optimal(std::size_t num_rows, std::span<const Bitset> columns, Sense sense,
                               const LpSolution& sol);
CertificateCheck check_optimal(const LinearProgram& lp, const LpSolution& sol);

// True iff sol.farkas proves infeasibility: M^T y <= 0, 1^T y > 0, and y >= 0
// for covers.
bool check_infeasibility_ray(const LinearProgram& lp, const LpSolution& sol);

// Column activities (M^T y)_c over rational edge weights.
std::vector<Rational> column_activities(std::span<const Bitset> columns, std::span<const Rational> y);

}  // namespace fbp::lp
