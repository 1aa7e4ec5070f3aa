#pragma once

#include <cstddef>
#include <vector>

#include "fbp/lp/linear_program.hpp"
#include "fbp/rational.hpp"

namespace fbp::lp {

struct IntegerSolution {
  enum class Status { kOptimal, kInfeasible, kCapExceeded };
  Status status = Status::kInfeasible;
  // Best integer solution found (valid when has_incumbent).
  bool has_incumbent = false;
  std::size_t objective = 0;
  std::vector<int> x;
  // Proven lower bound on the integer optimum (the rounded-up root LP value
  // when the search was cut short).
  Integer lower_bound;
  std::size_t nodes = 0;
};

// Depth-first branch-and-bound over the exact LP relaxation. Meant for tiny
// instances; stops with kCapExceeded after node_cap LP solves.
IntegerSolution solve_integer(const LinearProgram& lp, std::size_t node_cap);

}  // namespace fbp::lp
