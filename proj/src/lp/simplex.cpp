#include "fbp/lp/simplex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fbp/errors.hpp"
#include "float_engine.hpp"
#include "modular.hpp"

namespace fbp::lp {

void LinearProgram::validate() const {
  for (const auto& c : columns) {
    if (c.size() != num_rows) throw ContractViolation("LP column width differs from num_rows");
    if (c.none()) throw ContractViolation("LP column is empty");
  }
}

namespace {

using Kind = Variable::Kind;

// out = (a * b - c * e) / d, exact.
inline void bareiss(mpz_ptr out, mpz_srcptr a, mpz_srcptr b, mpz_srcptr c, mpz_srcptr e, mpz_srcptr d, mpz_ptr tmp) {
  mpz_mul(tmp, a, b);
  mpz_submul(tmp, c, e);
  mpz_divexact(out, tmp, d);
}

}  // namespace

SimplexSolver::SimplexSolver(std::size_t num_rows, Sense sense, SolverOptions options)
    : m_(num_rows), sense_(sense), options_(options) {
  if (m_ == 0) throw ContractViolation("SimplexSolver needs at least one row");
  if (sense_ == Sense::kCover) surplus_pos_.assign(m_, -1);
  artificial_pos_.assign(m_, -1);
  reset();
}

void SimplexSolver::reset() {
  heading_.assign(m_, Variable{});
  adj_.assign(m_ * m_, mpz_class(0));
  for (std::size_t i = 0; i < m_; ++i) {
    adj_[i * m_ + i] = 1;
    heading_[i] = {Kind::kArtificial, i};
    artificial_pos_[i] = static_cast<std::int64_t>(i);
  }
  std::fill(basic_pos_.begin(), basic_pos_.end(), -1);
  std::fill(surplus_pos_.begin(), surplus_pos_.end(), -1);
  det_ = 1;
  xnum_.assign(m_, mpz_class(1));
  phase_ = 1;
  exact_state_ = true;
  recompute_dual();
}

std::size_t SimplexSolver::add_column(const Bitset& rows) {
  if (rows.size() != m_) throw ContractViolation("column width differs from the number of rows");
  if (rows.none()) throw ContractViolation("empty column");
  std::vector<std::uint32_t> idx;
  idx.reserve(rows.count());
  rows.for_each([&](std::size_t r) { idx.push_back(static_cast<std::uint32_t>(r)); });
  cols_.push_back(std::move(idx));
  basic_pos_.push_back(-1);
  return cols_.size() - 1;
}

void SimplexSolver::remove_columns(const std::vector<bool>& remove) {
  if (remove.size() != cols_.size()) throw ContractViolation("remove mask has the wrong length");
  std::vector<std::int64_t> new_index(cols_.size(), -1);
  std::size_t next = 0;
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (remove[j]) {
      if (basic_pos_[j] >= 0) throw ContractViolation("cannot remove a basic column");
      continue;
    }
    new_index[j] = static_cast<std::int64_t>(next);
    if (next != j) {
      cols_[next] = std::move(cols_[j]);
      basic_pos_[next] = basic_pos_[j];
    }
    ++next;
  }
  cols_.resize(next);
  basic_pos_.resize(next);
  for (auto& v : heading_) {
    if (v.kind == Kind::kStructural) v.index = static_cast<std::size_t>(new_index[v.index]);
  }
}

Basis SimplexSolver::basis() const { return Basis{heading_}; }

int SimplexSolver::cost(const Variable& v) const {
  if (phase_ == 1) return v.kind == Kind::kArtificial ? 1 : 0;
  return v.kind == Kind::kStructural ? 1 : 0;
}

void SimplexSolver::recompute_dual() {
  ynum_.assign(m_, mpz_class(0));
  for (std::size_t i = 0; i < m_; ++i) {
    if (cost(heading_[i]) == 0) continue;
    const mpz_class* row = &adj_[i * m_];
    for (std::size_t k = 0; k < m_; ++k) {
      if (sgn(row[k]) != 0) ynum_[k] += row[k];
    }
  }
}

std::vector<std::uint32_t> SimplexSolver::column_rows(const Variable& v) const {
  if (v.kind == Kind::kStructural) return cols_[v.index];
  return {static_cast<std::uint32_t>(v.index)};
}

void SimplexSolver::transform_column(const Variable& v, std::vector<mpz_class>& w) const {
  w.resize(m_);
  if (v.kind == Kind::kStructural) {
    const auto& rows = cols_[v.index];
    for (std::size_t i = 0; i < m_; ++i) {
      mpz_ptr out = w[i].get_mpz_t();
      mpz_set_ui(out, 0);
      const mpz_class* row = &adj_[i * m_];
      for (auto r : rows) mpz_add(out, out, row[r].get_mpz_t());
    }
    return;
  }
  for (std::size_t i = 0; i < m_; ++i) {
    w[i] = adj_[i * m_ + v.index];
    if (v.kind == Kind::kSurplus) w[i] = -w[i];
  }
}

void SimplexSolver::reduced_cost_numerator(const Variable& v, mpz_class& g) const {
  mpz_ptr out = g.get_mpz_t();
  mpz_set_ui(out, 0);
  if (v.kind == Kind::kStructural) {
    for (auto r : cols_[v.index]) mpz_sub(out, out, ynum_[r].get_mpz_t());
  } else if (v.kind == Kind::kSurplus) {
    mpz_set(out, ynum_[v.index].get_mpz_t());
  } else {
    mpz_neg(out, ynum_[v.index].get_mpz_t());
  }
  if (cost(v) != 0) mpz_addmul_ui(out, det_.get_mpz_t(), static_cast<unsigned long>(cost(v)));
}

bool SimplexSolver::choose_entering(bool bland, Variable& entering, mpz_class& g) {
  const int s = sgn(det_);
  mpz_class cand;
  mpz_class best_h;
  bool found = false;
  auto consider = [&](const Variable& v) {
    reduced_cost_numerator(v, cand);
    if (s < 0) mpz_neg(cand.get_mpz_t(), cand.get_mpz_t());
    if (sgn(cand) >= 0) return false;
    if (!found || cand < best_h) {
      found = true;
      best_h = cand;
      entering = v;
    }
    return bland;
  };
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (basic_pos_[j] < 0 && consider({Kind::kStructural, j})) break;
  }
  if (!(bland && found) && sense_ == Sense::kCover) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (surplus_pos_[i] < 0 && consider({Kind::kSurplus, i})) break;
    }
  }
  if (found) {
    g = s < 0 ? mpz_class(-best_h) : best_h;
  }
  return found;
}

// Row i before row b when Adj_i / w_i < Adj_b / w_b lexicographically. The
// rows of a nonsingular matrix are never proportional, so this is a strict
// order on the tied rows.
bool SimplexSolver::lex_less(std::size_t i, std::size_t b, const std::vector<mpz_class>& w) const {
  const int sign = sgn(w[i]) * sgn(w[b]);
  mpz_class lhs;
  mpz_class rhs;
  for (std::size_t k = 0; k < m_; ++k) {
    mpz_mul(lhs.get_mpz_t(), adj_[i * m_ + k].get_mpz_t(), w[b].get_mpz_t());
    mpz_mul(rhs.get_mpz_t(), adj_[b * m_ + k].get_mpz_t(), w[i].get_mpz_t());
    const int c = mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t()) * sign;
    if (c != 0) return c < 0;
  }
  return false;
}

std::optional<std::size_t> SimplexSolver::choose_leaving(const std::vector<mpz_class>& w, bool bland) const {
  const int s = sgn(det_);
  std::optional<std::size_t> best;
  mpz_class lhs;
  mpz_class rhs;
  // Ratios compare as |xnum_i| / |w_i|; basic artificials in phase 2 are
  // fixed at zero and block with ratio 0 whenever w_i != 0.
  auto ratio_num = [&](std::size_t i) -> const mpz_class& { return xnum_[i]; };
  for (std::size_t i = 0; i < m_; ++i) {
    const int wi = sgn(w[i]);
    if (wi == 0) continue;
    const bool fixed_artificial = phase_ == 2 && heading_[i].kind == Kind::kArtificial;
    if (!fixed_artificial && wi != s) continue;
    if (!best) {
      best = i;
      continue;
    }
    const std::size_t b = *best;
    mpz_mul(lhs.get_mpz_t(), ratio_num(i).get_mpz_t(), w[b].get_mpz_t());
    mpz_mul(rhs.get_mpz_t(), ratio_num(b).get_mpz_t(), w[i].get_mpz_t());
    const int c = mpz_cmpabs(lhs.get_mpz_t(), rhs.get_mpz_t());
    if (c < 0) {
      best = i;
    } else if (c == 0) {
      const Variable& vi = heading_[i];
      const Variable& vb = heading_[b];
      if (bland) {
        if (vi < vb) best = i;
        continue;
      }
      const bool fi = fixed_artificial;
      const bool fb = phase_ == 2 && vb.kind == Kind::kArtificial;
      if (fi != fb) {
        if (fi) best = i;
      } else if (lex_less(i, b, w)) {
        best = i;
      }
    }
  }
  return best;
}

void SimplexSolver::set_heading(std::size_t r, const Variable& v) {
  const Variable old = heading_[r];
  switch (old.kind) {
    case Kind::kStructural: basic_pos_[old.index] = -1; break;
    case Kind::kSurplus: surplus_pos_[old.index] = -1; break;
    case Kind::kArtificial: artificial_pos_[old.index] = -1; break;
  }
  const auto pos = static_cast<std::int64_t>(r);
  switch (v.kind) {
    case Kind::kStructural: basic_pos_[v.index] = pos; break;
    case Kind::kSurplus: surplus_pos_[v.index] = pos; break;
    case Kind::kArtificial: artificial_pos_[v.index] = pos; break;
  }
  heading_[r] = v;
}

void SimplexSolver::pivot(std::size_t r, const Variable& entering, const std::vector<mpz_class>& w,
                          const mpz_class& g) {
  const mpz_srcptr wr = w[r].get_mpz_t();
  const mpz_srcptr d = det_.get_mpz_t();
  const bool same = mpz_cmp(wr, d) == 0;
  mpz_class neg_d = -det_;
  const bool flip = mpz_cmp(wr, neg_d.get_mpz_t()) == 0;
  mpz_class tmp_c;
  const mpz_ptr tmp = tmp_c.get_mpz_t();
  const mpz_class* rowr = &adj_[r * m_];

  // Entry update v' = (wr * v - wi * vr) / d with wi, vr for this row/column.
  auto update = [&](mpz_ptr v, mpz_srcptr wi, bool wi_zero, mpz_srcptr vr) {
    if (wi_zero || mpz_sgn(vr) == 0) {
      if (same || mpz_sgn(v) == 0) return;
      if (flip) {
        mpz_neg(v, v);
        return;
      }
      mpz_mul(tmp, v, wr);
      mpz_divexact(v, tmp, d);
      return;
    }
    bareiss(v, wr, v, wi, vr, d, tmp);
  };

  for (std::size_t i = 0; i < m_; ++i) {
    if (i == r) continue;
    const mpz_srcptr wi = w[i].get_mpz_t();
    const bool wi_zero = mpz_sgn(wi) == 0;
    if (wi_zero && same) continue;
    mpz_class* rowi = &adj_[i * m_];
    for (std::size_t k = 0; k < m_; ++k) update(rowi[k].get_mpz_t(), wi, wi_zero, rowr[k].get_mpz_t());
    update(xnum_[i].get_mpz_t(), wi, wi_zero, xnum_[r].get_mpz_t());
  }

  // ynum' = (wr * ynum + g * Adj_r) / d.
  const mpz_srcptr gp = g.get_mpz_t();
  const bool g_zero = mpz_sgn(gp) == 0;
  mpz_class minus_g = -g;
  for (std::size_t k = 0; k < m_; ++k) {
    update(ynum_[k].get_mpz_t(), minus_g.get_mpz_t(), g_zero, rowr[k].get_mpz_t());
  }

  det_ = w[r];
  set_heading(r, entering);
}

bool SimplexSolver::artificial_weight_positive() const {
  for (std::size_t i = 0; i < m_; ++i) {
    if (heading_[i].kind == Kind::kArtificial && sgn(xnum_[i]) != 0) return true;
  }
  return false;
}

bool SimplexSolver::run_phase(SolveStats& stats) {
  const bool always_bland = options_.rule == PivotRule::kBland;
  bool bland = always_bland;
  std::size_t degenerate_run = 0;
  std::vector<mpz_class> w;
  mpz_class g;
  Variable entering;
  for (;;) {
    if (options_.deadline && std::chrono::steady_clock::now() >= *options_.deadline) return false;
    if (phase_ == 1 && !artificial_weight_positive()) return true;
    if (!choose_entering(bland, entering, g)) return true;
    transform_column(entering, w);
    const auto leaving = choose_leaving(w, bland);
    if (!leaving) throw InternalError("simplex: unbounded direction in a bounded LP");
    const bool degenerate = sgn(xnum_[*leaving]) == 0;
    pivot(*leaving, entering, w, g);

    ++stats.pivots;
    if (phase_ == 1) ++stats.phase1_pivots;
    if (bland) ++stats.bland_pivots;
    if (degenerate) {
      ++stats.degenerate_pivots;
      if (++degenerate_run >= options_.degenerate_run_before_bland) bland = true;
    } else {
      degenerate_run = 0;
      bland = always_bland;
    }
  }
}

std::int64_t SimplexSolver::position(const Variable& v) const {
  switch (v.kind) {
    case Kind::kStructural: return basic_pos_[v.index];
    case Kind::kSurplus: return surplus_pos_[v.index];
    case Kind::kArtificial: return artificial_pos_[v.index];
  }
  return -1;
}

bool SimplexSolver::basis_feasible() const {
  const int s = sgn(det_);
  for (const auto& x : xnum_) {
    if (sgn(x) * s < 0) return false;
  }
  return true;
}

bool SimplexSolver::move_to(const std::vector<Variable>& target, std::size_t& pivots) {
  const std::set<Variable> wanted(target.begin(), target.end());
  std::vector<mpz_class> w;
  mpz_class g;
  for (const auto& v : target) {
    if (position(v) >= 0) continue;
    transform_column(v, w);
    std::optional<std::size_t> r;
    for (std::size_t i = 0; i < m_ && !r; ++i) {
      if (sgn(w[i]) != 0 && !wanted.contains(heading_[i])) r = i;
    }
    if (!r) return false;
    reduced_cost_numerator(v, g);
    pivot(*r, v, w, g);
    ++pivots;
  }
  return true;
}

std::optional<LpSolution> SimplexSolver::guide(SolveStats& stats) {
  std::vector<bool> col_basic(cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j) col_basic[j] = basic_pos_[j] >= 0;
  std::vector<bool> row_basic(m_, false);
  for (const auto& v : heading_) {
    if (v.kind != Kind::kStructural) row_basic[v.index] = true;
  }
  const auto found = detail::float_optimal_basis(m_, sense_, cols_, col_basic, row_basic, options_.deadline);
  if (!found) return std::nullopt;

  std::vector<Variable> target;
  target.reserve(m_);
  for (auto j : found->columns) target.push_back({Kind::kStructural, j});
  const Kind logical = sense_ == Sense::kPartition ? Kind::kArtificial : Kind::kSurplus;
  for (auto i : found->rows) target.push_back({logical, i});
  if (target.size() != m_) return std::nullopt;

  if (auto cert = certify(target)) {
    adopt(target);
    stats.float_certified = true;
    return cert;
  }
  if (!exact_state_) refactor();
  const std::vector<Variable> before = heading_;
  if (move_to(target, stats.transition_pivots) && basis_feasible()) {
    stats.float_basis_accepted = true;
  } else if (!move_to(before, stats.transition_pivots)) {
    throw InternalError("simplex: cannot return to the previous basis");
  }
  phase_ = artificial_weight_positive() ? 1 : 2;
  return std::nullopt;
}

// Solves for the basic solution and basic dual of `target` directly and
// checks, in integers, that both are feasible. Their objectives agree by
// construction (c_B^T x_B = y^T B x_B = y^T 1).
std::optional<LpSolution> SimplexSolver::certify(const std::vector<Variable>& target) const {
  detail::SignedColumns b;
  b.size = m_;
  std::vector<std::int64_t> cost_b(m_, 0);
  for (std::size_t p = 0; p < m_; ++p) {
    const Variable& v = target[p];
    b.rows.push_back(column_rows(v));
    b.sign.push_back(v.kind == Kind::kSurplus ? -1 : 1);
    if (v.kind == Kind::kStructural) cost_b[p] = 1;
  }
  const auto sol = detail::solve_basis(b, std::vector<std::int64_t>(m_, 1), cost_b);
  if (!sol) return std::nullopt;

  for (std::size_t p = 0; p < m_; ++p) {
    const int s = sgn(sol->x_num[p]);
    if (s < 0 || (s > 0 && target[p].kind == Kind::kArtificial)) return std::nullopt;
  }
  const auto& y = sol->y_num;
  if (sense_ == Sense::kCover) {
    for (const auto& v : y) {
      if (sgn(v) < 0) return std::nullopt;
    }
  }
  mpz_class dot;
  for (const auto& col : cols_) {
    dot = 0;
    for (auto r : col) dot += y[r];
    if (dot > sol->y_den) return std::nullopt;
  }

  LpSolution out;
  out.status = Status::kOptimal;
  out.basis = Basis{target};
  out.primal.assign(cols_.size(), Rational(0));
  mpz_class primal_sum = 0;
  for (std::size_t p = 0; p < m_; ++p) {
    if (target[p].kind != Kind::kStructural) continue;
    primal_sum += sol->x_num[p];
    Rational v(sol->x_num[p], sol->x_den);
    v.canonicalize();
    out.primal[target[p].index] = std::move(v);
  }
  out.dual.resize(m_);
  for (std::size_t r = 0; r < m_; ++r) {
    out.dual[r] = Rational(y[r], sol->y_den);
    out.dual[r].canonicalize();
  }
  out.objective = Rational(primal_sum, sol->x_den);
  out.objective.canonicalize();
  return out;
}

// Takes `target` as the current basis without touching Adj, which is freed.
void SimplexSolver::adopt(const std::vector<Variable>& target) {
  for (const auto& v : heading_) {
    switch (v.kind) {
      case Kind::kStructural: basic_pos_[v.index] = -1; break;
      case Kind::kSurplus: surplus_pos_[v.index] = -1; break;
      case Kind::kArtificial: artificial_pos_[v.index] = -1; break;
    }
  }
  for (std::size_t p = 0; p < m_; ++p) {
    heading_[p] = target[p];
    const auto pos = static_cast<std::int64_t>(p);
    switch (target[p].kind) {
      case Kind::kStructural: basic_pos_[target[p].index] = pos; break;
      case Kind::kSurplus: surplus_pos_[target[p].index] = pos; break;
      case Kind::kArtificial: artificial_pos_[target[p].index] = pos; break;
    }
  }
  std::vector<mpz_class>().swap(adj_);
  std::vector<mpz_class>().swap(xnum_);
  std::vector<mpz_class>().swap(ynum_);
  exact_state_ = false;
  phase_ = 2;
}

void SimplexSolver::refactor() {
  const Basis current{heading_};
  try {
    load_basis(current);
  } catch (const ContractViolation& e) {
    throw InternalError(std::string("simplex: certified basis cannot be refactored: ") + e.what());
  }
}

LpSolution SimplexSolver::solve() {
  SolveStats stats;
  if (options_.engine == Engine::kFloatGuided) {
    if (auto cert = guide(stats)) {
      cert->stats = stats;
      return std::move(*cert);
    }
  }
  if (!exact_state_) {
    // Rebuilding Adj is the costly part; skip it once time is up.
    if (options_.deadline && std::chrono::steady_clock::now() >= *options_.deadline) {
      LpSolution out;
      out.status = Status::kInterrupted;
      out.basis = basis();
      out.primal.assign(cols_.size(), Rational(0));
      out.stats = stats;
      return out;
    }
    refactor();
  }
  if (phase_ == 1) {
    recompute_dual();
    if (!run_phase(stats)) {
      LpSolution out = extract(Status::kInterrupted);
      out.stats = stats;
      return out;
    }
    if (artificial_weight_positive()) {
      LpSolution out = extract(Status::kInfeasible);
      out.stats = stats;
      return out;
    }
    phase_ = 2;
  }
  recompute_dual();
  const bool finished = run_phase(stats);
  LpSolution out = extract(finished ? Status::kOptimal : Status::kInterrupted);
  out.stats = stats;
  if (finished) check_certificate(out);
  return out;
}

LpSolution SimplexSolver::extract(Status status) const {
  LpSolution out;
  out.status = status;
  out.basis = basis();
  out.primal.assign(cols_.size(), Rational(0));
  out.objective = 0;
  if (status != Status::kInfeasible) {
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (basic_pos_[j] < 0) continue;
      Rational x(xnum_[static_cast<std::size_t>(basic_pos_[j])], det_);
      x.canonicalize();
      out.objective += x;
      out.primal[j] = std::move(x);
    }
  }
  std::vector<Rational> y(m_);
  for (std::size_t k = 0; k < m_; ++k) {
    y[k] = Rational(ynum_[k], det_);
    y[k].canonicalize();
  }
  if (status == Status::kInfeasible) {
    out.farkas = std::move(y);
  } else if (status == Status::kOptimal) {
    out.dual = std::move(y);
  }
  return out;
}

// Integer-form verification of the returned basis: B x_B = 1 with x_B >= 0,
// dual feasibility of every column, and equal objectives.
void SimplexSolver::check_certificate(const LpSolution& sol) const {
  (void)sol;
  const int s = sgn(det_);
  const mpz_class abs_d = abs(det_);
  std::vector<mpz_class> activity(m_, mpz_class(0));
  mpz_class primal_sum = 0;
  for (std::size_t i = 0; i < m_; ++i) {
    const Variable& v = heading_[i];
    const mpz_class& x = xnum_[i];
    if (sgn(x) * s < 0) throw InternalError("simplex certificate: negative basic variable");
    if (v.kind == Kind::kArtificial) {
      if (sgn(x) != 0) throw InternalError("simplex certificate: artificial variable carries weight");
      continue;
    }
    if (v.kind == Kind::kSurplus) {
      activity[v.index] -= x;
      continue;
    }
    primal_sum += x;
    for (auto r : cols_[v.index]) activity[r] += x;
  }
  for (std::size_t r = 0; r < m_; ++r) {
    if (activity[r] != det_) throw InternalError("simplex certificate: row activity differs from 1");
  }
  mpz_class dual_sum = 0;
  for (std::size_t r = 0; r < m_; ++r) {
    dual_sum += ynum_[r];
    if (sense_ == Sense::kCover && sgn(ynum_[r]) * s < 0) throw InternalError("simplex certificate: negative cover dual");
  }
  if (dual_sum != primal_sum) throw InternalError("simplex certificate: primal and dual objectives differ");
  mpz_class dot;
  for (const auto& col : cols_) {
    dot = 0;
    for (auto r : col) dot += ynum_[r];
    if (s < 0) dot = -dot;
    if (dot > abs_d) throw InternalError("simplex certificate: dual constraint violated");
  }
}

void SimplexSolver::load_basis(const Basis& target) {
  if (target.heading.size() != m_) throw ContractViolation("basis size differs from the number of rows");
  std::set<Variable> wanted;
  for (const auto& v : target.heading) {
    const bool in_range = (v.kind == Kind::kStructural && v.index < cols_.size()) ||
                          (v.kind == Kind::kSurplus && sense_ == Sense::kCover && v.index < m_) ||
                          (v.kind == Kind::kArtificial && v.index < m_);
    if (!in_range) throw ContractViolation("basis refers to an unknown variable");
    if (!wanted.insert(v).second) throw ContractViolation("basis lists a variable twice");
  }
  reset();
  std::size_t pivots = 0;
  if (!move_to(target.heading, pivots)) {
    reset();
    throw ContractViolation("basis is singular");
  }
  // Reorder positions to match the requested heading.
  std::vector<std::size_t> from(m_);
  for (std::size_t p = 0; p < m_; ++p) {
    const auto& v = target.heading[p];
    const std::int64_t pos = position(v);
    if (pos < 0) throw InternalError("load_basis: variable missing after factorisation");
    from[p] = static_cast<std::size_t>(pos);
  }
  std::vector<mpz_class> adj(m_ * m_);
  std::vector<mpz_class> xnum(m_);
  for (std::size_t p = 0; p < m_; ++p) {
    for (std::size_t k = 0; k < m_; ++k) adj[p * m_ + k].swap(adj_[from[p] * m_ + k]);
    xnum[p].swap(xnum_[from[p]]);
  }
  adj_ = std::move(adj);
  xnum_ = std::move(xnum);
  for (std::size_t p = 0; p < m_; ++p) {
    heading_[p] = target.heading[p];
    const auto pos = static_cast<std::int64_t>(p);
    const auto& v = heading_[p];
    switch (v.kind) {
      case Kind::kStructural: basic_pos_[v.index] = pos; break;
      case Kind::kSurplus: surplus_pos_[v.index] = pos; break;
      case Kind::kArtificial: artificial_pos_[v.index] = pos; break;
    }
  }
  if (!basis_feasible()) {
    reset();
    throw ContractViolation("basis is not primal feasible");
  }
  phase_ = artificial_weight_positive() ? 1 : 2;
  recompute_dual();
}

LpSolution solve(const LinearProgram& lp, const Basis* start, SolverOptions options) {
  lp.validate();
  if (lp.num_rows == 0) {
    LpSolution out;
    out.status = Status::kOptimal;
    out.primal.assign(lp.columns.size(), Rational(0));
    out.objective = 0;
    return out;
  }
  SimplexSolver solver(lp.num_rows, lp.sense, options);
  for (const auto& c : lp.columns) solver.add_column(c);
  if (start != nullptr) {
    try {
      solver.load_basis(*start);
    } catch (const ContractViolation&) {
      solver.reset();
    }
  }
  return solver.solve();
}

}  // namespace fbp::lp
