#include <doctest.h>

#include <random>

#include "fbp/errors.hpp"
#include "fbp/graph/enumerate.hpp"
#include "fbp/graph/maximal.hpp"
#include "fbp/lp/certificate.hpp"
#include "fbp/lp/integer.hpp"
#include "fbp/lp/simplex.hpp"
#include "../src/lp/modular.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fbp;
using lp::LinearProgram;
using lp::Sense;

namespace {

LinearProgram program(const BinaryMatrix& a, const std::vector<Biclique>& bicliques, Sense sense) {
  LinearProgram p;
  p.num_rows = a.num_edges();
  p.sense = sense;
  for (const auto& b : bicliques) p.columns.push_back(incidence_column(a, b));
  return p;
}

Rational sum(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

Rational ratio(const mpz_class& num, const mpz_class& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

lp::SolverOptions with(lp::PivotRule rule, lp::Engine engine) {
  lp::SolverOptions o;
  o.rule = rule;
  o.engine = engine;
  return o;
}

const lp::SolverOptions kVariants[] = {
    with(lp::PivotRule::kDantzigLexicographic, lp::Engine::kExact),
    with(lp::PivotRule::kBland, lp::Engine::kExact),
    with(lp::PivotRule::kDantzigLexicographic, lp::Engine::kFloatGuided),
};

}  // namespace

TEST_CASE("all bicliques of the domino give 5/2") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const LinearProgram p = program(d, enumerate_all_bicliques(d, 1000), Sense::kPartition);
  for (const auto& o : kVariants) {
    const lp::LpSolution s = lp::solve(p, nullptr, o);
    REQUIRE(s.status == lp::Status::kOptimal);
    CHECK(s.objective == Rational(5, 2));
    CHECK(sum(s.dual) == Rational(5, 2));
    CHECK(sum(s.primal) == Rational(5, 2));
    CHECK(lp::check_optimal(p, s).ok());
  }
}

TEST_CASE("the reference dual witness is feasible and matches the optimum") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const LinearProgram p = program(d, enumerate_all_bicliques(d, 1000), Sense::kPartition);
  const auto y = fixture::domino_dual();
  CHECK(sum(y) == Rational(5, 2));
  for (const auto& act : lp::column_activities(p.columns, y)) CHECK(act <= 1);
  const lp::LpSolution s = lp::solve(p);
  CHECK(s.objective == sum(y));
}

TEST_CASE("maximal bicliques of the domino cannot partition it") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const LinearProgram p = program(d, enumerate_maximal(d), Sense::kPartition);
  for (const auto& o : kVariants) {
    const lp::LpSolution s = lp::solve(p, nullptr, o);
    REQUIRE(s.status == lp::Status::kInfeasible);
    CHECK(lp::check_infeasibility_ray(p, s));
  }
  // The same columns do cover it, with value 2.
  const lp::LpSolution c = lp::solve(program(d, enumerate_maximal(d), Sense::kCover));
  REQUIRE(c.status == lp::Status::kOptimal);
  CHECK(c.objective == 2);
  CHECK(lp::check_optimal(program(d, enumerate_maximal(d), Sense::kCover), c).ok());
}

TEST_CASE("singleton edges") {
  const BinaryMatrix d = BinaryMatrix::domino();
  std::vector<Biclique> singles;
  for (const auto& e : d.edges()) singles.push_back(make_biclique(d, {e.row}, {e.col}));
  const lp::LpSolution s = lp::solve(program(d, singles, Sense::kPartition));
  REQUIRE(s.status == lp::Status::kOptimal);
  CHECK(s.objective == 7);
  for (const auto& x : s.primal) CHECK(x == 1);
}

TEST_CASE("malformed programs are rejected") {
  LinearProgram p;
  p.num_rows = 3;
  p.columns = {Bitset(3)};
  CHECK_THROWS_AS(lp::solve(p), ContractViolation);
  p.columns = {Bitset::full(2)};
  CHECK_THROWS_AS(lp::solve(p), ContractViolation);
}

TEST_CASE("pivot rules and engines agree on random instances") {
  std::mt19937 rng(21);
  for (int t = 0; t < 60; ++t) {
    const BinaryMatrix a = oracle::random_matrix(rng, 4, 4);
    const auto all = enumerate_all_bicliques(a, 100000);
    for (Sense sense : {Sense::kPartition, Sense::kCover}) {
      const LinearProgram p = program(a, all, sense);
      std::optional<Rational> value;
      for (const auto& o : kVariants) {
        const lp::LpSolution s = lp::solve(p, nullptr, o);
        REQUIRE(s.status == lp::Status::kOptimal);
        CHECK(lp::check_optimal(p, s).ok());
        if (value) CHECK(*value == s.objective);
        value = s.objective;
      }
    }
  }
}

TEST_CASE("certificate checks reject doctored solutions") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const LinearProgram p = program(d, enumerate_all_bicliques(d, 1000), Sense::kPartition);
  const lp::LpSolution s = lp::solve(p);
  REQUIRE(lp::check_optimal(p, s).ok());

  lp::LpSolution bad = s;
  bad.dual[0] += 1;
  CHECK_FALSE(lp::check_optimal(p, bad).ok());

  bad = s;
  bad.primal.assign(bad.primal.size(), Rational(0));
  CHECK_FALSE(lp::check_optimal(p, bad).primal_feasible);

  bad = s;
  bad.objective += Rational(1, 3);
  CHECK_FALSE(lp::check_optimal(p, bad).ok());
}

TEST_CASE("warm start from a saved basis") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const LinearProgram p = program(d, enumerate_all_bicliques(d, 1000), Sense::kPartition);
  const lp::LpSolution first = lp::solve(p);
  const lp::LpSolution again = lp::solve(p, &first.basis);
  REQUIRE(again.status == lp::Status::kOptimal);
  CHECK(again.objective == first.objective);
  CHECK(again.stats.pivots == 0);
  CHECK(again.primal == first.primal);
  CHECK(again.dual == first.dual);
}

TEST_CASE("incremental solver: adding columns never raises the objective") {
  const BinaryMatrix d2 = kronecker(BinaryMatrix::domino(), BinaryMatrix::domino());
  lp::SimplexSolver solver(d2.num_edges(), Sense::kPartition);
  for (std::size_t i = 0; i < d2.num_rows(); ++i) {
    solver.add_column(incidence_column(d2, Biclique{Bitset::from_indices(9, {i}), d2.row(i)}));
  }
  lp::LpSolution s = solver.solve();
  REQUIRE(s.status == lp::Status::kOptimal);
  CHECK(s.objective == 9);
  Rational previous = s.objective;
  for (const auto& b : fixture::domino2_support()) {
    solver.add_column(incidence_column(d2, b));
    s = solver.solve();
    REQUIRE(s.status == lp::Status::kOptimal);
    CHECK(s.objective <= previous);
    previous = s.objective;
  }
  CHECK(s.objective <= 6);
}

TEST_CASE("modular basis solve matches rational elimination") {
  std::mt19937 rng(5);
  std::bernoulli_distribution bit(0.4);
  std::bernoulli_distribution negative(0.2);
  int solved = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 12;
    lp::detail::SignedColumns b;
    b.size = n;
    std::vector<std::vector<Rational>> dense(n, std::vector<Rational>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      b.sign.push_back(negative(rng) ? -1 : 1);
      b.rows.emplace_back();
      for (std::size_t i = 0; i < n; ++i) {
        if (!bit(rng)) continue;
        b.rows[j].push_back(static_cast<std::uint32_t>(i));
        dense[i][j] = b.sign[j];
      }
    }
    std::vector<std::int64_t> rhs(n);
    std::vector<std::int64_t> cost(n);
    std::vector<Rational> rq(n);
    std::vector<Rational> cq(n);
    for (std::size_t i = 0; i < n; ++i) {
      rhs[i] = static_cast<std::int64_t>(rng() % 5) - 2;
      cost[i] = static_cast<std::int64_t>(rng() % 3);
      rq[i] = rhs[i];
      cq[i] = cost[i];
    }
    std::vector<std::vector<Rational>> transposed(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) transposed[i][j] = dense[j][i];
    }
    const auto want_x = oracle::solve_dense(dense, rq);
    const auto got = lp::detail::solve_basis(b, rhs, cost);
    REQUIRE(want_x.has_value() == got.has_value());
    if (!got) continue;
    ++solved;
    const auto want_y = oracle::solve_dense(transposed, cq);
    REQUIRE(want_y);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(ratio(got->x_num[i], got->x_den) == (*want_x)[i]);
      CHECK(ratio(got->y_num[i], got->y_den) == (*want_y)[i]);
    }
  }
  CHECK(solved > 50);
}

TEST_CASE("modular basis solve on a basis with a large determinant") {
  // I + J - e_1 e_1^T style matrices have determinants growing with n; the
  // all-ones-minus-identity matrix has det (n-1)(-1)^(n-1).
  const std::size_t n = 40;
  lp::detail::SignedColumns b;
  b.size = n;
  for (std::size_t j = 0; j < n; ++j) {
    b.sign.push_back(1);
    b.rows.emplace_back();
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) b.rows[j].push_back(static_cast<std::uint32_t>(i));
    }
  }
  std::vector<std::int64_t> rhs(n, 0);
  rhs[0] = 1;
  const auto got = lp::detail::solve_basis(b, rhs, std::vector<std::int64_t>(n, 1));
  REQUIRE(got);
  // x = (J - I)^-1 e_1 = (1/(n-1)) 1 - e_1.
  CHECK(ratio(got->x_num[0], got->x_den) == Rational(1, n - 1) - 1);
  CHECK(ratio(got->x_num[1], got->x_den) == Rational(1, n - 1));
  CHECK(ratio(got->y_num[5], got->y_den) == Rational(1, n - 1));
}

TEST_CASE("exact solves after certified float solves rebuild the factorisation") {
  const BinaryMatrix d2 = kronecker(BinaryMatrix::domino(), BinaryMatrix::domino());
  lp::SolverOptions o;
  o.engine = lp::Engine::kFloatGuided;
  lp::SimplexSolver solver(d2.num_edges(), Sense::kPartition, o);
  for (std::size_t i = 0; i < d2.num_rows(); ++i) {
    solver.add_column(incidence_column(d2, Biclique{Bitset::from_indices(9, {i}), d2.row(i)}));
  }
  const lp::LpSolution first = solver.solve();
  REQUIRE(first.status == lp::Status::kOptimal);
  CHECK(first.stats.float_certified);
  CHECK(first.stats.pivots == 0);
  for (const auto& b : fixture::domino2_support()) solver.add_column(incidence_column(d2, b));
  solver.options().engine = lp::Engine::kExact;
  solver.options().deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  const lp::LpSolution late = solver.solve();
  CHECK(late.status == lp::Status::kInterrupted);
  CHECK(late.basis == first.basis);
  solver.options().deadline.reset();
  const lp::LpSolution exact = solver.solve();
  REQUIRE(exact.status == lp::Status::kOptimal);
  CHECK(exact.objective == 6);
  CHECK_FALSE(exact.stats.float_certified);
  solver.options().engine = lp::Engine::kFloatGuided;
  const lp::LpSolution again = solver.solve();
  CHECK(again.objective == 6);
  CHECK(again.stats.pivots == 0);
}

TEST_CASE("deadline interrupts the solve") {
  const BinaryMatrix d = BinaryMatrix::domino();
  lp::SolverOptions o;
  o.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  const lp::LpSolution s = lp::solve(program(d, enumerate_all_bicliques(d, 1000), Sense::kPartition), nullptr, o);
  CHECK(s.status == lp::Status::kInterrupted);
}

TEST_CASE("integer partition and cover numbers") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const auto bp = lp::solve_integer(program(d, enumerate_all_bicliques(d, 1000), Sense::kPartition), 100000);
  REQUIRE(bp.status == lp::IntegerSolution::Status::kOptimal);
  CHECK(bp.objective == 3);
  CHECK(bp.objective == oracle::partition_number(d));

  const auto bc = lp::solve_integer(program(d, enumerate_maximal(d), Sense::kCover), 100000);
  REQUIRE(bc.status == lp::IntegerSolution::Status::kOptimal);
  CHECK(bc.objective == 2);

  const BinaryMatrix ones = BinaryMatrix::all_ones(2, 2);
  const auto one = lp::solve_integer(program(ones, enumerate_all_bicliques(ones, 100), Sense::kPartition), 100);
  CHECK(one.objective == 1);

  const auto none = lp::solve_integer(program(d, enumerate_maximal(d), Sense::kPartition), 100);
  CHECK(none.status == lp::IntegerSolution::Status::kInfeasible);
}

TEST_CASE("integer values bracket the relaxations on random matrices") {
  std::mt19937 rng(8);
  for (int t = 0; t < 40; ++t) {
    const BinaryMatrix a = oracle::random_matrix(rng, 4, 4);
    const auto all = enumerate_all_bicliques(a, 100000);
    const auto bp = lp::solve_integer(program(a, all, Sense::kPartition), 1000000);
    const auto bc = lp::solve_integer(program(a, enumerate_maximal(a), Sense::kCover), 1000000);
    REQUIRE(bp.status == lp::IntegerSolution::Status::kOptimal);
    REQUIRE(bc.status == lp::IntegerSolution::Status::kOptimal);
    CHECK(bp.objective == oracle::partition_number(a));
    CHECK(bc.objective <= bp.objective);
    CHECK(Rational(bp.objective) >= lp::solve(program(a, all, Sense::kPartition)).objective);
  }
}

TEST_CASE("node cap is reported, not hidden") {
  const BinaryMatrix c = BinaryMatrix::crown(5);
  const auto r = lp::solve_integer(program(c, enumerate_all_bicliques(c, 100000), Sense::kPartition), 1);
  CHECK(r.status == lp::IntegerSolution::Status::kCapExceeded);
  CHECK(r.lower_bound >= 1);
}
