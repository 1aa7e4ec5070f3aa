#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "fbp/graph/binary_matrix.hpp"
#include "fbp/lp/simplex.hpp"
#include "fbp/rational.hpp"

namespace fbp {

using Real = boost::multiprecision::cpp_dec_float_50;

// Largest set of ones, no two of which lie in a common all-ones submatrix:
// (i,j), (i',j') are compatible iff i != i', j != j' and a_ij' * a_i'j = 0.
// Maximum clique by branch and bound. Throws CapExceeded when the matrix has
// more than `cap` ones.
std::size_t fooling_set_number(const BinaryMatrix& a, std::size_t cap = 512);

// Largest induced matching: as above but both a_ij' and a_i'j must be 0.
// Never larger than the fooling set number.
std::size_t induced_matching_number(const BinaryMatrix& a, std::size_t cap = 512);

// Cover LP over the maximal bicliques only.
lp::LpSolution fractional_cover_solution(const BinaryMatrix& a);
Rational fractional_cover_number(const BinaryMatrix& a);

Real to_real(const Rational& q);
// q^(1/k) for q > 0 and k >= 1.
Real kth_root(const Rational& q, int k);
// Fixed-point rendering; a trailing 5 rounds away from zero.
std::string format_real(const Real& x, int digits);
// Smallest value with `digits` decimals that is >= x.
std::string format_real_ceil(const Real& x, int digits);

struct LemmaBound {
  Real rooted;        // bc_f * (bp_f / bc_f)^(1/k)
  Rational unrooted;  // (bp_f / bc_f) * bc_f^k, a bound on bp_f of the k-th power
};

// Lower bound on bp_f(A^(x)k)^(1/k) from bp_f(A) and bc_f(A). Throws
// ContractViolation unless bc_f > 0, bp_f >= bc_f and k >= 1.
LemmaBound lemma_lower_bound(const Rational& bp_f_a, const Rational& bc_f_a, int k);

// max(bc_f(A) * bp_f(A'), bp_f(A) * bc_f(A')), a lower bound on bp_f(A (x) A').
Rational product_lower_bound(const Rational& bc_f_a, const Rational& bp_f_a2, const Rational& bp_f_a,
                             const Rational& bc_f_a2);

struct SandwichRow {
  int k = 0;
  Real lower;                     // lemma bound on the k-th root
  std::optional<Rational> value;  // supplied bp_f of the k-th power
  std::optional<Real> upper;      // its k-th root
  std::optional<Real> best_upper; // running minimum of the roots so far
};

struct SandwichReport {
  std::optional<std::size_t> fooling_set;  // absent when above the cap
  Rational bc_f;
  Rational bp_f;
  std::vector<SandwichRow> rows;
  Real best_upper;
  // The asymptotic value lies in [interval_low, interval_high]. The low end is
  // bc_f as an exact rational; the upper end
  // is rounded up to 6 decimals so the printed interval stays valid.
  std::string interval_low;
  std::string interval_high;
};

// Rows k = 1..max(kmax, largest supplied k). bp_f_a is used for k = 1 when
// upper_values has no entry for it. Throws InternalError if the proven chain
// i <= bc_f <= bp_f^(1/k) fails for any row, or a supplied k < 1.
SandwichReport sandwich_report(const BinaryMatrix& a, const Rational& bp_f_a,
                               const std::map<int, Rational>& upper_values, int kmax,
                               std::size_t fooling_cap = 512);

}  // namespace fbp
