#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fbp/lp/linear_program.hpp"
#include "fbp/rational.hpp"

namespace fbp::lp {


enum class Status { kOptimal, kInfeasible, kInterrupted };

// A solver variable. The declaration order of Kind is also the least-index
// order used by Bland's rule: structural columns, then surplus, then
// artificial variables.
struct Variable {
  enum class Kind : std::uint8_t { kStructural, kSurplus, kArtificial };
  Kind kind = Kind::kStructural;
  std::size_t index = 0;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

// Basic variable for every constraint row, by basis position.
struct Basis {
  std::vector<Variable> heading;
  friend bool operator==(const Basis&, const Basis&) = default;
};

struct SolveStats {
  std::size_t pivots = 0;
  std::size_t phase1_pivots = 0;
  std::size_t degenerate_pivots = 0;
  std::size_t bland_pivots = 0;
  // Exact pivots spent moving onto the basis proposed by the float engine.
  std::size_t transition_pivots = 0;
  bool float_basis_accepted = false;
  // The float basis was solved directly and its certificate held, so no
  // exact pivots were needed.
  bool float_certified = false;
};

struct LpSolution {
  Status status = Status::kInterrupted;
  // One entry per structural column.
  std::vector<Rational> primal;
  // Optimal dual y (one per row) when status is optimal: M^T y <= 1, and
  // y >= 0 for covers.
  std::vector<Rational> dual;
  // Infeasibility ray when status is infeasible: M^T y <= 0, 1^T y > 0, and
  // y >= 0 for covers.
  std::vector<Rational> farkas;
  Rational objective;
  Basis basis;
  SolveStats stats;
};

enum class PivotRule {
  // Most negative reduced cost with ratio ties broken lexicographically on
  // the rows of B^-1, so no cycling. A long run of degenerate pivots still
  // switches to Bland's rule until the next improving pivot.
  kDantzigLexicographic,
  kBland,
};

enum class Engine {
  kExact,
  // A floating-point simplex (HiGHS) proposes an optimal basis. Its primal
  // and dual solutions are computed exactly (modular LU and p-adic lifting)
  // and checked. If the check fails, the exact solver pivots onto the basis
  // and finishes in exact arithmetic. Either way the reported solution is
  // exact and certified.
  kFloatGuided,
};

struct SolverOptions {
  PivotRule rule = PivotRule::kDantzigLexicographic;
  std::size_t degenerate_run_before_bland = 5000;
  Engine engine = Engine::kExact;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Exact primal simplex for the set partitioning / covering LPs above.
//
// The solver keeps Adj = d * B^{-1} as an integer matrix with d = +-det(B) and
// updates it with fraction-free (Bareiss-style) pivots, so every division is
// exact and no rational normalisation is needed inside the pivot loop. The
// basic solution is kept the same way (x_B = xnum / d), as is the dual
// (y = ynum / d).
//
// The instance persists across solve() calls: columns may be appended, and
// nonbasic columns removed, between calls, and the next solve starts from the
// current basis. This is what column generation relies on.
class SimplexSolver {
 public:
  SimplexSolver(std::size_t num_rows, Sense sense, SolverOptions options = {});

  std::size_t num_rows() const { return m_; }
  std::size_t num_columns() const { return cols_.size(); }
  Sense sense() const { return sense_; }
  SolverOptions& options() { return options_; }

  // Appends a structural column (nonbasic, x = 0). Returns its index.
  std::size_t add_column(const Bitset& rows);
  // Removes every structural column j with remove[j] set; such columns must be
  // nonbasic. Remaining columns keep their relative order.
  void remove_columns(const std::vector<bool>& remove);
  bool is_basic(std::size_t column) const { return basic_pos_[column] >= 0; }

  Basis basis() const;
  // Rebuilds the factorisation for the given basis. If the basis is singular
  // or not primal feasible, throws ContractViolation and leaves the solver in
  // its cold all-artificial state.
  void load_basis(const Basis& basis);
  // Resets to the all-artificial starting basis.
  void reset();

  // Runs phase 1 (if the current basis still carries artificial weight) and
  // phase 2. The returned certificate is checked exactly before returning;
  // a failed check raises InternalError.
  LpSolution solve();

 private:
  struct RatioChoice;

  int cost(const Variable& v) const;
  void recompute_dual();
  // w = Adj * a_v.
  void transform_column(const Variable& v, std::vector<mpz_class>& w) const;
  // g_v = c_v d - ynum^T a_v (reduced cost times d).
  void reduced_cost_numerator(const Variable& v, mpz_class& g) const;
  bool choose_entering(bool bland, Variable& entering, mpz_class& g);
  bool lex_less(std::size_t i, std::size_t b, const std::vector<mpz_class>& w) const;
  std::optional<std::size_t> choose_leaving(const std::vector<mpz_class>& w, bool bland) const;
  void pivot(std::size_t r, const Variable& entering, const std::vector<mpz_class>& w, const mpz_class& g);
  void set_heading(std::size_t r, const Variable& v);
  std::vector<std::uint32_t> column_rows(const Variable& v) const;
  bool artificial_weight_positive() const;
  bool basis_feasible() const;
  std::int64_t position(const Variable& v) const;
  // Exact basis exchange onto `target`, one pivot per target variable that is
  // not yet basic. Returns false, part way, if target is singular.
  bool move_to(const std::vector<Variable>& target, std::size_t& pivots);
  // Returns a certified optimum read off the float solution, if any.
  std::optional<LpSolution> guide(SolveStats& stats);
  std::optional<LpSolution> certify(const std::vector<Variable>& target) const;
  void adopt(const std::vector<Variable>& target);
  // Rebuilds Adj for heading_ after certified solves left it stale.
  void refactor();
  LpSolution extract(Status status) const;
  void check_certificate(const LpSolution& sol) const;
  bool run_phase(SolveStats& stats);

  std::size_t m_;
  Sense sense_;
  SolverOptions options_;

  std::vector<std::vector<std::uint32_t>> cols_;
  std::vector<std::int64_t> basic_pos_;      // per structural column, -1 if nonbasic
  std::vector<std::int64_t> surplus_pos_;    // per row (cover only)
  std::vector<std::int64_t> artificial_pos_; // per row; -1 once an artificial has left
  std::vector<Variable> heading_;

  std::vector<mpz_class> adj_;  // m x m, row-major, rows indexed by basis position
  mpz_class det_;
  std::vector<mpz_class> xnum_;
  std::vector<mpz_class> ynum_;
  int phase_ = 1;
  // False when adj_, det_, xnum_ and ynum_ no longer describe heading_.
  bool exact_state_ = true;
};

// One-shot convenience: build a solver for lp, optionally start from `start`
// (falling back to a cold start if it cannot be loaded), and solve.
LpSolution solve(const LinearProgram& lp, const Basis* start = nullptr, SolverOptions options = {});

}  // namespace fbp::lp
