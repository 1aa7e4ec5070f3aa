#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "fbp/graph/biclique.hpp"
#include "fbp/lp/simplex.hpp"

namespace fbp {

struct PoolEntry {
  Biclique biclique;
  Bitset column;  // incidence column over edge indices
  std::size_t slack_counter = 0;
  std::size_t born_iteration = 0;
  // Star columns are never pruned; they keep the master feasible.
  bool star = false;
};

// Deduplicated biclique columns of the master LP, in solver column order.
class ColumnPool {
 public:
  explicit ColumnPool(const BinaryMatrix& a) : matrix_(&a) {}

  // Adds a valid biclique; returns false (and changes nothing) on a duplicate.
  // Throws ContractViolation for an invalid biclique.
  bool add(const Biclique& b, std::size_t iteration, bool star = false, std::size_t slack_counter = 0);
  bool contains(const Biclique& b) const { return index_.contains(b); }
  void remove(const std::vector<bool>& mask);

  std::size_t size() const { return entries_.size(); }
  const PoolEntry& operator[](std::size_t i) const { return entries_[i]; }
  PoolEntry& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<PoolEntry>& entries() const { return entries_; }
  std::vector<Bitset> columns() const;

 private:
  const BinaryMatrix* matrix_;
  std::vector<PoolEntry> entries_;
  std::unordered_map<Biclique, std::size_t, BicliqueHash> index_;
};

struct PruneOutcome {
  std::size_t pruned = 0;
  std::vector<bool> removed;  // by pool index before removal
};

// Updates slack counters from the master optimum and removes the columns
// whose counter exceeds prune_after. A column is slack when (M^T y)_c < 1;
// tight columns and columns with positive weight reset their counter to 0.
// Columns with positive weight and star columns are never removed. The caller
// must drop the same columns from its solver (they are all nonbasic).
PruneOutcome prune(ColumnPool& pool, const lp::LpSolution& solution, std::size_t prune_after);

}  // namespace fbp
