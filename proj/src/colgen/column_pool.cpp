#include "fbp/colgen/column_pool.hpp"

#include "fbp/errors.hpp"

namespace fbp {

bool ColumnPool::add(const Biclique& b, std::size_t iteration, bool star, std::size_t slack_counter) {
  if (index_.contains(b)) return false;
  PoolEntry entry{b, incidence_column(*matrix_, b), slack_counter, iteration, star};
  index_.emplace(b, entries_.size());
  entries_.push_back(std::move(entry));
  return true;
}

void ColumnPool::remove(const std::vector<bool>& mask) {
  if (mask.size() != entries_.size()) throw ContractViolation("pool removal mask has the wrong length");
  std::vector<PoolEntry> kept;
  kept.reserve(entries_.size());
  index_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (mask[i]) continue;
    index_.emplace(entries_[i].biclique, kept.size());
    kept.push_back(std::move(entries_[i]));
  }
  entries_ = std::move(kept);
}

std::vector<Bitset> ColumnPool::columns() const {
  std::vector<Bitset> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.column);
  return out;
}

PruneOutcome prune(ColumnPool& pool, const lp::LpSolution& solution, std::size_t prune_after) {
  if (solution.status != lp::Status::kOptimal) throw ContractViolation("prune needs an optimal master solution");
  if (solution.primal.size() != pool.size()) throw ContractViolation("solution does not match the pool");

  // y on a common denominator so activities are integer sums.
  Integer denominator = 1;
  for (const auto& y : solution.dual) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), y.get_den_mpz_t());
  std::vector<Integer> ynum(solution.dual.size());
  for (std::size_t r = 0; r < ynum.size(); ++r) {
    ynum[r] = solution.dual[r].get_num() * (denominator / solution.dual[r].get_den());
  }

  PruneOutcome out;
  out.removed.assign(pool.size(), false);
  Integer activity;
  for (std::size_t c = 0; c < pool.size(); ++c) {
    PoolEntry& e = pool[c];
    activity = 0;
    e.column.for_each([&](std::size_t r) { activity += ynum[r]; });
    const bool slack = activity < denominator;
    const bool weighted = sgn(solution.primal[c]) > 0;
    if (slack && !weighted) {
      ++e.slack_counter;
    } else {
      e.slack_counter = 0;
    }
    if (e.slack_counter > prune_after && !weighted && !e.star) {
      out.removed[c] = true;
      ++out.pruned;
    }
  }
  if (out.pruned > 0) pool.remove(out.removed);
  return out;
}

}  // namespace fbp
