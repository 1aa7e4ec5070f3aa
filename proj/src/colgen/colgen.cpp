#include "fbp/colgen/colgen.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <unordered_set>

#include "fbp/colgen/checkpoint.hpp"
#include "fbp/colgen/column_pool.hpp"
#include "fbp/errors.hpp"
#include "fbp/graph/enumerate.hpp"
#include "fbp/graph/kronecker.hpp"
#include "fbp/graph/maximal.hpp"
#include "fbp/pricing.hpp"

namespace fbp {

void ColGenConfig::validate() const {
  if (sgn(epsilon) <= 0) throw ContractViolation("epsilon must be positive");
  if (prune_after < 1) throw ContractViolation("prune_after must be at least 1");
  if (per_biclique_cap < 1 || global_cap < 1) throw ContractViolation("candidate caps must be at least 1");
  if (max_iterations < 1) throw ContractViolation("max_iterations must be at least 1");
}

std::vector<Biclique> initial_stars(const BinaryMatrix& a, StarSide side) {
  std::vector<Biclique> out;
  if (side == StarSide::kRows) {
    for (std::size_t i = 0; i < a.num_rows(); ++i) {
      if (a.row(i).none()) continue;
      out.push_back({Bitset::from_indices(a.num_rows(), {i}), a.row(i)});
    }
  } else {
    for (std::size_t j = 0; j < a.num_cols(); ++j) {
      Bitset col = a.column(j);
      if (col.none()) continue;
      out.push_back({std::move(col), Bitset::from_indices(a.num_cols(), {j})});
    }
  }
  return out;
}

std::vector<Biclique> initial_kronecker_support(const std::vector<Biclique>& support_a,
                                                const std::vector<Biclique>& support_prev) {
  std::vector<Biclique> out;
  std::unordered_set<Biclique, BicliqueHash> seen;
  for (const auto& b1 : support_a) {
    for (const auto& b2 : support_prev) {
      Biclique p = kronecker_biclique(b1, b2);
      if (seen.insert(p).second) out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<SupportEntry> support_of(const ColumnPool& pool, const lp::LpSolution& sol) {
  std::vector<SupportEntry> out;
  for (std::size_t c = 0; c < sol.primal.size(); ++c) {
    if (sgn(sol.primal[c]) > 0) out.push_back({pool[c].biclique, sol.primal[c]});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.biclique < y.biclique; });
  return out;
}

}  // namespace

ColGenReport run_column_generation(const BinaryMatrix& a, const std::vector<Biclique>& maximals,
                                   const ColGenConfig& config, const std::vector<Biclique>& seeds) {
  config.validate();
  if (a.num_edges() == 0) throw EmptyGraphError("column generation needs a matrix with at least one edge");
  const auto start = Clock::now();

  lp::SolverOptions options;
  options.engine = config.engine;
  if (config.time_limit_seconds) {
    options.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(*config.time_limit_seconds));
  }
  lp::SimplexSolver solver(a.num_edges(), lp::Sense::kPartition, options);
  ColumnPool pool(a);
  ColGenReport report;
  Rational best_lower_bound = 0;
  std::size_t iteration = 0;

  std::optional<CheckpointState> saved;
  if (config.checkpoint_path) saved = read_checkpoint(*config.checkpoint_path, a);
  if (saved) {
    for (const auto& e : saved->pool) {
      if (!pool.add(e.biclique, e.born_iteration, e.star, e.slack_counter)) {
        throw CheckpointError("checkpoint pool holds a duplicate biclique");
      }
      solver.add_column(pool[pool.size() - 1].column);
    }
    try {
      solver.load_basis(saved->basis);
    } catch (const ContractViolation& e) {
      throw CheckpointError(std::string("checkpoint basis cannot be restored: ") + e.what());
    }
    iteration = saved->iteration;
    best_lower_bound = saved->best_lower_bound;
    report.iterations = saved->trace;
    report.resumed = true;
  } else {
    for (const auto& b : initial_stars(a, StarSide::kRows)) {
      pool.add(b, 0, true);
      solver.add_column(pool[pool.size() - 1].column);
    }
    for (const auto& b : seeds) {
      if (pool.add(b, 0)) solver.add_column(pool[pool.size() - 1].column);
    }
  }

  PricingOptions pricing;
  pricing.threshold = 1 + config.epsilon;
  pricing.per_biclique_cap = config.per_biclique_cap;
  pricing.global_cap = config.global_cap;
  pricing.threads = config.threads;

  std::optional<Rational> previous_objective;
  if (!report.iterations.empty()) previous_objective = report.iterations.back().master_objective;

  while (true) {
    ++iteration;
    lp::LpSolution sol = solver.solve();
    if (sol.status == lp::Status::kInterrupted) {
      report.certificate = std::move(sol);
      break;
    }
    if (sol.status != lp::Status::kOptimal) {
      throw InternalError("master problem became infeasible despite the star columns");
    }
    if (previous_objective && sol.objective > *previous_objective) {
      throw InternalError("master objective increased between iterations");
    }
    previous_objective = sol.objective;

    IterationRecord record;
    record.iteration = iteration;
    record.master_objective = sol.objective;
    record.pivots = sol.stats.pivots + sol.stats.transition_pivots;
    report.support = support_of(pool, sol);

    const PruneOutcome pruned = prune(pool, sol, config.prune_after);
    if (pruned.pruned > 0) solver.remove_columns(pruned.removed);
    record.pruned = pruned.pruned;
    record.pool_size = pool.size();

    PricingResult priced = price_all(a, maximals, EdgeWeights(sol.dual), pricing);
    if (sgn(priced.alpha) <= 0) throw InternalError("pricing maximum is not positive");
    record.alpha = priced.alpha;
    record.lower_bound = sol.objective / priced.alpha;
    if (record.lower_bound > best_lower_bound) best_lower_bound = record.lower_bound;

    report.value = sol.objective;
    report.alpha = priced.alpha;
    report.certificate = std::move(sol);

    if (priced.alpha <= pricing.threshold) {
      report.converged = true;
      report.exact = priced.alpha <= 1;
      if (config.on_iteration) config.on_iteration(record);
      report.iterations.push_back(std::move(record));
      break;
    }

    for (const auto& c : priced.candidates) {
      if (pool.add(c.biclique, iteration)) {
        solver.add_column(pool[pool.size() - 1].column);
        ++record.added;
      }
    }
    if (record.added == 0) throw InternalError("pricing found improving bicliques but none were new");
    if (config.on_iteration) config.on_iteration(record);
    report.iterations.push_back(std::move(record));

    if (config.checkpoint_path) {
      write_checkpoint(*config.checkpoint_path,
                       snapshot(a, pool, solver.basis(), iteration, best_lower_bound, report.iterations));
    }
    if (iteration >= config.max_iterations) break;
    if (options.deadline && Clock::now() >= *options.deadline) break;
  }

  report.lower_bound = best_lower_bound;
  report.final_pool_size = pool.size();
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

ColGenReport run_column_generation(const BinaryMatrix& a, const ColGenConfig& config) {
  const std::vector<Biclique> maximals = enumerate_maximal(a);
  std::vector<Biclique> seeds;
  if (config.init == InitStrategy::kAllBicliques && subbiclique_count_bound(maximals) <= config.all_bicliques_limit) {
    seeds = enumerate_all_bicliques(a, config.all_bicliques_limit);
  }
  return run_column_generation(a, maximals, config, seeds);
}

std::vector<ColGenReport> run_power(const BinaryMatrix& base, int k, const ColGenConfig& config) {
  if (k < 1) throw ContractViolation("power must be at least 1");
  config.validate();
  std::vector<ColGenReport> reports;

  const bool inductive = config.init == InitStrategy::kKroneckerSupport || config.init == InitStrategy::kUnion;
  std::error_code ec;
  const bool resuming = config.checkpoint_path && std::filesystem::exists(*config.checkpoint_path, ec);
  if (k == 1 || !inductive || resuming) {
    const BinaryMatrix a = kronecker_power(base, k);
    const std::vector<Biclique> maximals = maximal_bicliques_of_power(base, k);
    std::vector<Biclique> seeds;
    if (!resuming && (config.init == InitStrategy::kAllBicliques || inductive) &&
        subbiclique_count_bound(maximals) <= config.all_bicliques_limit) {
      seeds = enumerate_all_bicliques(a, config.all_bicliques_limit);
    }
    reports.push_back(run_column_generation(a, maximals, config, seeds));
    return reports;
  }

  ColGenConfig lower = config;
  lower.checkpoint_path.reset();

  const std::vector<Biclique> base_maximals = enumerate_maximal(base);
  std::vector<Biclique> base_seeds;
  if (subbiclique_count_bound(base_maximals) <= config.all_bicliques_limit) {
    base_seeds = enumerate_all_bicliques(base, config.all_bicliques_limit);
  }
  reports.push_back(run_column_generation(base, base_maximals, lower, base_seeds));

  auto supports = [](const ColGenReport& r) {
    std::vector<Biclique> out;
    for (const auto& s : r.support) out.push_back(s.biclique);
    return out;
  };
  const std::vector<Biclique> support1 = supports(reports.front());
  BinaryMatrix current = base;
  for (int j = 2; j <= k; ++j) {
    current = kronecker(base, current);
    const std::vector<Biclique> maximals = lift_maximal_kronecker(base_maximals, j);
    const std::vector<Biclique> seeds = initial_kronecker_support(support1, supports(reports.back()));
    reports.push_back(run_column_generation(current, maximals, j == k ? config : lower, seeds));
  }
  return reports;
}

}  // namespace fbp
