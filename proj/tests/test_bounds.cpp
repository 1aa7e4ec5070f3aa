#include <doctest.h>

#include <random>

#include "fbp/bounds.hpp"
#include "fbp/errors.hpp"
#include "fbp/graph/enumerate.hpp"
#include "fbp/graph/kronecker.hpp"
#include "fbp/graph/maximal.hpp"
#include "fbp/lp/integer.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fbp;

namespace {

lp::LinearProgram all_biclique_program(const BinaryMatrix& a, lp::Sense sense) {
  lp::LinearProgram p;
  p.num_rows = a.num_edges();
  p.sense = sense;
  for (const auto& b : enumerate_all_bicliques(a, 100000)) p.columns.push_back(incidence_column(a, b));
  return p;
}

// Brute-force induced matching: ones with distinct rows and columns whose
// cross entries are all zero.
std::size_t induced_matching_oracle(const BinaryMatrix& a) {
  const auto& edges = a.edges();
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  auto ok = [&](std::size_t e) {
    for (std::size_t f : chosen) {
      const Edge x = edges[e];
      const Edge y = edges[f];
      if (x.row == y.row || x.col == y.col || a.at(x.row, y.col) || a.at(y.row, x.col)) return false;
    }
    return true;
  };
  auto go = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, chosen.size());
    for (std::size_t e = from; e < edges.size(); ++e) {
      if (!ok(e)) continue;
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
    }
  };
  go(go, 0);
  return best;
}

}  // namespace

TEST_CASE("fooling sets") {
  CHECK(fooling_set_number(BinaryMatrix::crown(5)) == 3);
  CHECK(fooling_set_number(BinaryMatrix::domino()) == 2);
  CHECK(oracle::fooling_set(BinaryMatrix::domino()) == 2);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(fooling_set_number(BinaryMatrix::identity(n)) == n);
  CHECK(fooling_set_number(BinaryMatrix::all_ones(3, 4)) == 1);
  CHECK_THROWS_AS(fooling_set_number(BinaryMatrix::all_ones(5, 5), 24), CapExceeded);
}

TEST_CASE("induced matchings") {
  CHECK(induced_matching_number(BinaryMatrix::domino()) == 2);
  CHECK(induced_matching_number(BinaryMatrix::crown(5)) == 2);
  CHECK(induced_matching_number(BinaryMatrix::identity(4)) == 4);
}

TEST_CASE("fooling set and induced matching agree with brute force") {
  std::mt19937 rng(31);
  for (int t = 0; t < 200; ++t) {
    const BinaryMatrix a = oracle::random_matrix(rng, 5, 5);
    const std::size_t fs = fooling_set_number(a);
    const std::size_t im = induced_matching_number(a);
    CHECK(fs == oracle::fooling_set(a));
    CHECK(im == induced_matching_oracle(a));
    CHECK(im <= fs);
  }
}

TEST_CASE("fractional cover numbers") {
  CHECK(fractional_cover_number(BinaryMatrix::domino()) == 2);
  CHECK(fractional_cover_number(BinaryMatrix::crown(5)) == Rational(10, 3));
  CHECK(fractional_cover_number(BinaryMatrix::all_ones(3, 2)) == 1);
  CHECK(fractional_cover_number(BinaryMatrix::identity(4)) == 4);
  const BinaryMatrix d = BinaryMatrix::domino();
  CHECK(fractional_cover_number(kronecker(d, d)) == 4);
}

TEST_CASE("cover over maximal bicliques equals cover over all bicliques") {
  std::mt19937 rng(41);
  for (int t = 0; t < 100; ++t) {
    const BinaryMatrix a = oracle::random_matrix(rng, 4, 5);
    CHECK(fractional_cover_number(a) == lp::solve(all_biclique_program(a, lp::Sense::kCover)).objective);
  }
}

TEST_CASE("chain i <= bc_f <= bp_f <= bp on random matrices") {
  std::mt19937 rng(43);
  for (int t = 0; t < 60; ++t) {
    const BinaryMatrix a = oracle::random_matrix(rng, 4, 4);
    const Rational bcf = fractional_cover_number(a);
    const auto part = all_biclique_program(a, lp::Sense::kPartition);
    const Rational bpf = lp::solve(part).objective;
    const auto bp = lp::solve_integer(part, 1000000);
    REQUIRE(bp.status == lp::IntegerSolution::Status::kOptimal);
    CHECK(Rational(fooling_set_number(a)) <= bcf);
    CHECK(bcf <= bpf);
    CHECK(bpf <= Rational(bp.objective));
  }
}

TEST_CASE("lemma table for the domino") {
  for (int k = 1; k <= 5; ++k) {
    const LemmaBound b = lemma_lower_bound(Rational(5, 2), 2, k);
    CHECK(format_real(b.rooted, 3) == fixture::kLemmaTable[k - 1]);
    Rational expected = Rational(5, 4);
    for (int i = 0; i < k; ++i) expected *= 2;
    CHECK(b.unrooted == expected);
  }
  CHECK(format_real(lemma_lower_bound(Rational(5, 2), 2, 1).rooted, 6) == "2.500000");
}

TEST_CASE("lemma bound decreases to bc_f") {
  Real previous = lemma_lower_bound(Rational(5, 2), 2, 1).rooted;
  for (int k = 2; k <= 64; ++k) {
    const Real now = lemma_lower_bound(Rational(5, 2), 2, k).rooted;
    CHECK(now < previous);
    CHECK(now > 2);
    previous = now;
  }
  // 2 * (5/4)^(1/64) - 2 is about 7e-3; the limit is approached from above.
  const Real far = lemma_lower_bound(Rational(5, 2), 2, 1 << 20).rooted;
  CHECK(far - 2 < Real("1e-6"));
  CHECK(previous - 2 < Real("0.0071"));
}

TEST_CASE("lemma bound domain") {
  CHECK_THROWS_AS(lemma_lower_bound(Rational(5, 2), 0, 2), ContractViolation);
  CHECK_THROWS_AS(lemma_lower_bound(Rational(1), 2, 2), ContractViolation);
  CHECK_THROWS_AS(lemma_lower_bound(Rational(5, 2), 2, 0), ContractViolation);
}

TEST_CASE("product bound") {
  CHECK(product_lower_bound(2, Rational(5, 2), Rational(5, 2), 2) == 5);
  CHECK(product_lower_bound(1, Rational(7, 3), Rational(7, 3), 1) == Rational(7, 3));
  CHECK(product_lower_bound(2, 6, Rational(5, 2), 4) == 12);
  CHECK(Rational(12) <= Rational(2059, 149));
}

TEST_CASE("real formatting") {
  CHECK(format_real(Real("2.4494897"), 6) == "2.449490");
  CHECK(format_real(Real("2.0000005"), 6) == "2.000001");
  CHECK(format_real(Real(3), 2) == "3.00");
  CHECK(format_real_ceil(Real("2.3727121"), 6) == "2.372713");
  CHECK(format_real_ceil(Real("2.5"), 6) == "2.500000");
  CHECK(format_real(kth_root(6, 2), 6) == "2.449490");
  CHECK(format_real(to_real(Rational(1, 3)), 4) == "0.3333");
}

TEST_CASE("sandwich with k = 1 only") {
  const SandwichReport r = sandwich_report(BinaryMatrix::domino(), Rational(5, 2), {}, 1);
  REQUIRE(r.rows.size() == 1);
  CHECK(format_real(r.rows[0].lower, 6) == "2.500000");
  REQUIRE(r.rows[0].upper);
  CHECK(format_real(*r.rows[0].upper, 6) == "2.500000");
  CHECK(r.fooling_set == 2u);
  CHECK(r.bc_f == 2);
  CHECK(r.interval_low == "2");
  CHECK(r.interval_high == "2.500000");
}

TEST_CASE("sandwich with the reference values") {
  const BinaryMatrix d = BinaryMatrix::domino();
  std::map<int, Rational> upper = {{2, Rational(6)}, {3, Rational(2059, 149)}};
  const SandwichReport three = sandwich_report(d, Rational(5, 2), upper, 5);
  REQUIRE(three.rows.size() == 5);
  for (int k = 1; k <= 3; ++k) CHECK(format_real(*three.rows[k - 1].upper, 6) == fixture::kPowerRoots[k - 1]);
  CHECK_FALSE(three.rows[3].upper.has_value());
  for (int k = 1; k <= 5; ++k) CHECK(format_real(three.rows[k - 1].lower, 3) == fixture::kLemmaTable[k - 1]);
  CHECK(three.interval_low == "2");
  CHECK(three.interval_high == "2.399699");

  upper[4] = parse_rational("32.040389");
  upper[5] = parse_rational("75.201302");
  const SandwichReport five = sandwich_report(d, Rational(5, 2), upper, 3);
  REQUIRE(five.rows.size() == 5);
  CHECK(format_real(*five.rows[3].upper, 6) == "2.379164");
  CHECK(format_real(*five.rows[4].upper, 6) == "2.372712");
  CHECK(format_real(*five.rows[4].best_upper, 6) == "2.372712");
  CHECK(five.interval_high == "2.372713");
}

TEST_CASE("sandwich rejects values below the chain") {
  const BinaryMatrix d = BinaryMatrix::domino();
  // 7 < 2^3 = bc_f^3
  CHECK_THROWS_AS(sandwich_report(d, Rational(5, 2), {{3, Rational(7)}}, 3), InternalError);
  // 9 < (5/4) * 8 = 10, below the lemma
  CHECK_THROWS_AS(sandwich_report(d, Rational(5, 2), {{3, Rational(9)}}, 3), InternalError);
  CHECK_THROWS_AS(sandwich_report(d, Rational(5, 2), {{0, Rational(9)}}, 3), InternalError);
}
