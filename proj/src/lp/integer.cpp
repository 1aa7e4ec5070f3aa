#include "fbp/lp/integer.hpp"

#include <optional>

#include "fbp/lp/simplex.hpp"

namespace fbp::lp {

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const LinearProgram& lp, std::size_t node_cap) : lp_(lp), node_cap_(node_cap) {}

  IntegerSolution run() {
    std::vector<std::size_t> all(lp_.columns.size());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    std::vector<int> fixed(lp_.columns.size(), 0);
    const bool finished = explore(Bitset::full(lp_.num_rows), all, fixed, 0, /*root=*/true);

    result_.nodes = nodes_;
    if (!finished) {
      result_.status = IntegerSolution::Status::kCapExceeded;
    } else if (result_.has_incumbent) {
      result_.status = IntegerSolution::Status::kOptimal;
      result_.lower_bound = Integer(static_cast<unsigned long>(result_.objective));
    } else {
      result_.status = IntegerSolution::Status::kInfeasible;
    }
    return result_;
  }

 private:
  // Returns false when the node cap stopped the search.
  bool explore(const Bitset& active, const std::vector<std::size_t>& allowed, std::vector<int>& fixed,
               std::size_t fixed_count, bool root) {
    if (result_.has_incumbent && fixed_count >= result_.objective) return true;
    if (active.none()) {
      record(fixed, fixed_count);
      return true;
    }
    if (++nodes_ > node_cap_) return false;

    // Restricted LP over the active rows.
    std::vector<std::size_t> row_map(lp_.num_rows, 0);
    std::size_t k = 0;
    active.for_each([&](std::size_t r) { row_map[r] = k++; });
    LinearProgram sub;
    sub.num_rows = k;
    sub.sense = lp_.sense;
    std::vector<std::size_t> sub_to_col;
    for (std::size_t j : allowed) {
      Bitset c(k);
      (lp_.columns[j] & active).for_each([&](std::size_t r) { c.set(row_map[r]); });
      if (c.none()) continue;
      sub.columns.push_back(std::move(c));
      sub_to_col.push_back(j);
    }
    const LpSolution sol = solve(sub);
    if (sol.status != Status::kOptimal) return true;

    Integer lp_ceil;
    mpz_cdiv_q(lp_ceil.get_mpz_t(), sol.objective.get_num_mpz_t(), sol.objective.get_den_mpz_t());
    if (root) result_.lower_bound = lp_ceil;
    const Integer bound = lp_ceil + static_cast<unsigned long>(fixed_count);
    if (result_.has_incumbent && bound >= static_cast<unsigned long>(result_.objective)) return true;

    // Branch on the fractional variable with the largest value.
    std::optional<std::size_t> branch;
    bool integral = true;
    for (std::size_t t = 0; t < sol.primal.size(); ++t) {
      const Rational& x = sol.primal[t];
      if (x.get_den() != 1) {
        integral = false;
        if (!branch || x > sol.primal[*branch]) branch = t;
      }
    }
    if (integral) {
      std::size_t extra = 0;
      for (std::size_t t = 0; t < sol.primal.size(); ++t) {
        if (sgn(sol.primal[t]) != 0) {
          fixed[sub_to_col[t]] = 1;
          ++extra;
        }
      }
      record(fixed, fixed_count + extra);
      for (std::size_t t = 0; t < sol.primal.size(); ++t) {
        if (sgn(sol.primal[t]) != 0) fixed[sub_to_col[t]] = 0;
      }
      return true;
    }

    const std::size_t j = sub_to_col[*branch];
    // x_j = 1: its rows are done; for partitions, overlapping columns are out.
    {
      Bitset rest = active;
      lp_.columns[j].for_each([&](std::size_t r) { rest.reset(r); });
      std::vector<std::size_t> next;
      for (std::size_t c : allowed) {
        if (c == j) continue;
        if (lp_.sense == Sense::kPartition && (lp_.columns[c] & active).intersects(lp_.columns[j])) continue;
        next.push_back(c);
      }
      fixed[j] = 1;
      const bool ok = explore(rest, next, fixed, fixed_count + 1, false);
      fixed[j] = 0;
      if (!ok) return false;
    }
    // x_j = 0.
    std::vector<std::size_t> next;
    for (std::size_t c : allowed) {
      if (c != j) next.push_back(c);
    }
    return explore(active, next, fixed, fixed_count, false);
  }

  void record(const std::vector<int>& fixed, std::size_t count) {
    if (result_.has_incumbent && count >= result_.objective) return;
    result_.has_incumbent = true;
    result_.objective = count;
    result_.x = fixed;
  }

  const LinearProgram& lp_;
  std::size_t node_cap_;
  std::size_t nodes_ = 0;
  IntegerSolution result_;
};

}  // namespace

IntegerSolution solve_integer(const LinearProgram& lp, std::size_t node_cap) {
  lp.validate();
  return BranchAndBound(lp, node_cap).run();
}

}  // namespace fbp::lp
