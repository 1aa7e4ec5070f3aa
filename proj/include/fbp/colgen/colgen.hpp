#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fbp/graph/biclique.hpp"
#include "fbp/lp/simplex.hpp"
#include "fbp/rational.hpp"

namespace fbp {

enum class InitStrategy { kStars, kAllBicliques, kKroneckerSupport, kUnion };

struct IterationRecord;

struct ColGenConfig {
  Rational epsilon = Rational(1, 1000000);
  std::size_t prune_after = 3;
  std::size_t per_biclique_cap = 64;
  std::size_t global_cap = 4096;
  std::size_t max_iterations = 10000;
  InitStrategy init = InitStrategy::kUnion;
  // All-bicliques initialisation is only used below this subbiclique bound.
  std::size_t all_bicliques_limit = 100000;
  std::optional<std::string> checkpoint_path;
  unsigned threads = 1;
  std::optional<double> time_limit_seconds;
  lp::Engine engine = lp::Engine::kFloatGuided;
  // Called after every finished iteration, for progress output.
  std::function<void(const IterationRecord&)> on_iteration;

  // Throws ContractViolation unless epsilon > 0 and prune_after >= 1.
  void validate() const;
};

struct IterationRecord {
  std::size_t iteration = 0;
  Rational master_objective;
  Rational alpha;
  Rational lower_bound;
  std::size_t pool_size = 0;  // after pruning, before adding
  std::size_t added = 0;
  std::size_t pruned = 0;
  std::size_t pivots = 0;  // exact pivots, including the move onto a float basis

  // Equality ignores nothing: records are deterministic.
  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct SupportEntry {
  Biclique biclique;
  Rational weight;
};

struct ColGenReport {
  std::vector<IterationRecord> iterations;
  bool converged = false;
  // alpha <= 1 at the end: the value is bp_f exactly, not just within 1+eps.
  bool exact = false;
  bool resumed = false;
  Rational value;        // last master objective (an upper bound)
  Rational lower_bound;  // best master_objective / alpha seen
  Rational alpha;        // last pricing maximum
  std::vector<SupportEntry> support;
  lp::LpSolution certificate;
  std::size_t final_pool_size = 0;
  double seconds = 0.0;
};

// Star bicliques: one per nonempty row (side = rows) or column.
enum class StarSide { kRows, kCols };
std::vector<Biclique> initial_stars(const BinaryMatrix& a, StarSide side);

// { B (x) B' : B in support_a, B' in support_prev }, deduplicated, in
// generation order.
std::vector<Biclique> initial_kronecker_support(const std::vector<Biclique>& support_a,
                                                const std::vector<Biclique>& support_prev);

// Column generation for bp_f(a). `maximals` must be the maximal bicliques of
// a; `seeds` are extra initial columns (used by kron/union strategies). Row
// stars are always part of the initial pool.
//
// With config.checkpoint_path set, the state is written atomically after
// every iteration, and an existing checkpoint there is resumed (the matrix
// hash must match, otherwise CheckpointError).
ColGenReport run_column_generation(const BinaryMatrix& a, const std::vector<Biclique>& maximals,
                                   const ColGenConfig& config, const std::vector<Biclique>& seeds = {});

// Convenience for a plain matrix: maximal bicliques by direct enumeration,
// kron/union fall back to stars.
ColGenReport run_column_generation(const BinaryMatrix& a, const ColGenConfig& config);

// bp_f(base^(x)k) with inductive Kronecker seeding: level j is seeded by the
// products of the level-1 and level-(j-1) optimal supports. Returns one report
// per level that was run (all levels 1..k unless the strategy is stars or the
// checkpoint of level k is resumed). The checkpoint applies to level k only.
std::vector<ColGenReport> run_power(const BinaryMatrix& base, int k, const ColGenConfig& config);

}  // namespace fbp
