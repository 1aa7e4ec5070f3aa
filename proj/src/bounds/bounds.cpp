#include "fbp/bounds.hpp"

#include <algorithm>

#include "fbp/errors.hpp"
#include "fbp/graph/maximal.hpp"

namespace fbp {

namespace {

// Maximum clique with a greedy colouring bound, vertices kept in a fixed
// order so the search is deterministic.
class MaxClique {
 public:
  explicit MaxClique(std::vector<Bitset> adjacency) : adj_(std::move(adjacency)) {}

  std::size_t run() {
    const std::size_t n = adj_.size();
    if (n == 0) return 0;
    best_ = 0;
    expand(Bitset::full(n), 0);
    return best_;
  }

 private:
  void expand(Bitset candidates, std::size_t depth) {
    // Colour classes in candidate order; vertex v gets colour[v].
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    Bitset uncoloured = candidates;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset available = uncoloured;
      while (available.any()) {
        std::size_t v = 0;
        available.for_each([&](std::size_t x) { v = x; });
        available.reset(v);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
        Bitset keep = available;
        available.for_each([&](std::size_t x) {
          if (adj_[v].test(x)) keep.reset(x);
        });
        available = keep;
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (depth + colour[idx] <= best_) return;
      const std::size_t v = order[idx];
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        best_ = std::max(best_, depth + 1);
      } else {
        expand(std::move(next), depth + 1);
      }
      candidates.reset(v);
    }
  }

  std::vector<Bitset> adj_;
  std::size_t best_ = 0;
};

std::size_t isolated_clique(const BinaryMatrix& a, std::size_t cap, bool strict) {
  const std::size_t e = a.num_edges();
  if (e > cap) {
    throw CapExceeded("matrix has " + std::to_string(e) + " ones, above the cap of " + std::to_string(cap));
  }
  std::vector<Bitset> adj(e, Bitset(e));
  for (std::size_t p = 0; p < e; ++p) {
    const Edge x = a.edge(p);
    for (std::size_t q = p + 1; q < e; ++q) {
      const Edge y = a.edge(q);
      if (x.row == y.row || x.col == y.col) continue;
      const bool u = a.at(x.row, y.col);
      const bool v = a.at(y.row, x.col);
      if (strict ? (!u && !v) : !(u && v)) {
        adj[p].set(q);
        adj[q].set(p);
      }
    }
  }
  return MaxClique(std::move(adj)).run();
}

Real pow10(int digits) {
  Real p = 1;
  for (int i = 0; i < digits; ++i) p *= 10;
  return p;
}

// Renders the integer n / 10^digits.
std::string fixed_from_integer(const Real& n, int digits) {
  std::string s = n.str(0, std::ios::fixed);
  if (auto dot = s.find('.'); dot != std::string::npos) s.erase(dot);
  bool negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  if (s.find_first_not_of('0') == std::string::npos) negative = false;
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace

std::size_t fooling_set_number(const BinaryMatrix& a, std::size_t cap) { return isolated_clique(a, cap, false); }

std::size_t induced_matching_number(const BinaryMatrix& a, std::size_t cap) { return isolated_clique(a, cap, true); }

lp::LpSolution fractional_cover_solution(const BinaryMatrix& a) {
  const std::vector<Biclique> maximals = enumerate_maximal(a);
  lp::LinearProgram program{a.num_edges(), {}, lp::Sense::kCover};
  program.columns.reserve(maximals.size());
  for (const auto& b : maximals) program.columns.push_back(incidence_column(a, b));
  lp::LpSolution sol = lp::solve(program);
  if (sol.status != lp::Status::kOptimal) throw InternalError("cover LP over maximal bicliques is not optimal");
  return sol;
}

Rational fractional_cover_number(const BinaryMatrix& a) { return fractional_cover_solution(a).objective; }

Real to_real(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

Real kth_root(const Rational& q, int k) {
  if (k < 1) throw ContractViolation("root index must be at least 1");
  if (sgn(q) <= 0) throw ContractViolation("root of a nonpositive value");
  if (k == 1) return to_real(q);
  return boost::multiprecision::pow(to_real(q), Real(1) / k);
}

std::string format_real(const Real& x, int digits) {
  const Real scaled = x * pow10(digits);
  const Real n = x < 0 ? -boost::multiprecision::floor(-scaled + Real(0.5))
                       : boost::multiprecision::floor(scaled + Real(0.5));
  return fixed_from_integer(n, digits);
}

std::string format_real_ceil(const Real& x, int digits) {
  return fixed_from_integer(boost::multiprecision::ceil(x * pow10(digits)), digits);
}

LemmaBound lemma_lower_bound(const Rational& bp_f_a, const Rational& bc_f_a, int k) {
  if (k < 1) throw ContractViolation("power must be at least 1");
  if (sgn(bc_f_a) <= 0) throw ContractViolation("bc_f must be positive");
  if (bp_f_a < bc_f_a) throw ContractViolation("bp_f must be at least bc_f");
  const Rational ratio = bp_f_a / bc_f_a;
  LemmaBound out;
  out.rooted = to_real(bc_f_a) * kth_root(ratio, k);
  Rational power = 1;
  for (int i = 0; i < k; ++i) power *= bc_f_a;
  out.unrooted = ratio * power;
  return out;
}

Rational product_lower_bound(const Rational& bc_f_a, const Rational& bp_f_a2, const Rational& bp_f_a,
                             const Rational& bc_f_a2) {
  const Rational x = bc_f_a * bp_f_a2;
  const Rational y = bp_f_a * bc_f_a2;
  return x < y ? y : x;
}

SandwichReport sandwich_report(const BinaryMatrix& a, const Rational& bp_f_a,
                               const std::map<int, Rational>& upper_values, int kmax, std::size_t fooling_cap) {
  SandwichReport report;
  report.bp_f = bp_f_a;
  report.bc_f = fractional_cover_number(a);
  if (a.num_edges() <= fooling_cap) report.fooling_set = fooling_set_number(a, fooling_cap);
  if (report.fooling_set && Rational(static_cast<unsigned long>(*report.fooling_set)) > report.bc_f) {
    throw InternalError("fooling set number exceeds bc_f");
  }

  std::map<int, Rational> values = upper_values;
  values.emplace(1, bp_f_a);
  if (values.begin()->first < 1) throw InternalError("upper values must be indexed by k >= 1");
  const int last = std::max(kmax, values.rbegin()->first);

  std::optional<Real> best;
  for (int k = 1; k <= last; ++k) {
    SandwichRow row;
    row.k = k;
    const LemmaBound lemma = lemma_lower_bound(bp_f_a, report.bc_f, k);
    row.lower = lemma.rooted;
    if (auto it = values.find(k); it != values.end()) {
      const Rational& v = it->second;
      Rational cover_power = 1;
      for (int i = 0; i < k; ++i) cover_power *= report.bc_f;
      if (v < cover_power || v < lemma.unrooted) {
        throw InternalError("bp_f value for k = " + std::to_string(k) + " is below a proven lower bound");
      }
      row.value = v;
      row.upper = kth_root(v, k);
      if (!best || *row.upper < *best) best = row.upper;
    }
    row.best_upper = best;
    report.rows.push_back(std::move(row));
  }
  report.best_upper = *best;
  report.interval_low = to_string(report.bc_f);
  report.interval_high = format_real_ceil(report.best_upper, 6);
  return report;
}

}  // namespace fbp
