#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "fbp/colgen/checkpoint.hpp"
#include "fbp/colgen/colgen.hpp"
#include "fbp/colgen/column_pool.hpp"
#include "fbp/errors.hpp"
#include "fbp/graph/enumerate.hpp"
#include "fbp/graph/kronecker.hpp"
#include "fbp/graph/matrix_io.hpp"
#include "fbp/graph/maximal.hpp"
#include "fbp/lp/certificate.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fbp;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "fbp_test_colgen";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::filesystem::remove(path);
  std::filesystem::remove(path.string() + ".tmp");
  return path;
}

// A solution over a 1-edge matrix whose single dual entry is y.
lp::LpSolution fake_solution(std::size_t columns, const Rational& y, std::vector<Rational> primal) {
  lp::LpSolution s;
  s.status = lp::Status::kOptimal;
  s.dual = {y};
  s.primal = std::move(primal);
  s.primal.resize(columns);
  return s;
}

Rational cover_sum(const BinaryMatrix& a, const std::vector<Biclique>& bs, const Rational& w, std::size_t e) {
  Rational s = 0;
  for (const auto& b : bs) {
    if (incidence_column(a, b).test(e)) s += w;
  }
  return s;
}

ColGenConfig stars_config() {
  ColGenConfig c;
  c.init = InitStrategy::kStars;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  ColGenConfig c;
  CHECK_NOTHROW(c.validate());
  c.epsilon = 0;
  CHECK_THROWS_AS(c.validate(), ContractViolation);
  c = ColGenConfig{};
  c.prune_after = 0;
  CHECK_THROWS_AS(c.validate(), ContractViolation);
}

TEST_CASE("stars") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const auto rows = initial_stars(d, StarSide::kRows);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == make_biclique(d, {0}, {0, 1}));
  CHECK(rows[1] == make_biclique(d, {1}, {0, 1, 2}));
  CHECK(rows[2] == make_biclique(d, {2}, {1, 2}));
  const auto cols = initial_stars(d, StarSide::kCols);
  REQUIRE(cols.size() == 3);
  CHECK(cols[0] == make_biclique(d, {0, 1}, {0}));
  CHECK(initial_stars(kronecker(d, d), StarSide::kRows).size() == 9);

  Bitset covered(d.num_edges());
  for (const auto& b : rows) {
    CHECK_FALSE(covered.intersects(incidence_column(d, b)));
    covered |= incidence_column(d, b);
  }
  CHECK(covered.count() == 7);
}

TEST_CASE("pool deduplicates and validates") {
  const BinaryMatrix d = BinaryMatrix::domino();
  ColumnPool pool(d);
  CHECK(pool.add(make_biclique(d, {0, 1}, {0, 1}), 1));
  CHECK_FALSE(pool.add(make_biclique(d, {0, 1}, {0, 1}), 2));
  CHECK(pool.size() == 1);
  CHECK(pool.contains(make_biclique(d, {0, 1}, {0, 1})));
  CHECK_THROWS_AS(pool.add(make_biclique(d, {0, 2}, {0}), 1), ContractViolation);
  CHECK(pool.add(make_biclique(d, {2}, {2}), 1));
  pool.remove({true, false});
  CHECK(pool.size() == 1);
  CHECK_FALSE(pool.contains(make_biclique(d, {0, 1}, {0, 1})));
  CHECK(pool[0].biclique == make_biclique(d, {2}, {2}));
  CHECK(pool.add(make_biclique(d, {0, 1}, {0, 1}), 3));
}

TEST_CASE("slack columns are pruned after prune_after+1 rounds") {
  const BinaryMatrix one = BinaryMatrix::all_ones(1, 1);
  const Biclique b = make_biclique(one, {0}, {0});
  ColumnPool pool(one);
  pool.add(b, 0);
  const auto slack = fake_solution(1, Rational(1, 2), {});
  for (int round = 1; round <= 3; ++round) {
    CHECK(prune(pool, slack, 3).pruned == 0);
    CHECK(pool[0].slack_counter == static_cast<std::size_t>(round));
  }
  const auto out = prune(pool, slack, 3);
  CHECK(out.pruned == 1);
  CHECK(out.removed == std::vector<bool>{true});
  CHECK(pool.size() == 0);
}

TEST_CASE("tight columns never leave and reset their counter") {
  const BinaryMatrix one = BinaryMatrix::all_ones(1, 1);
  ColumnPool pool(one);
  pool.add(make_biclique(one, {0}, {0}), 0);
  for (int round = 0; round < 3; ++round) prune(pool, fake_solution(1, Rational(1, 3), {}), 3);
  CHECK(pool[0].slack_counter == 3);
  for (int round = 0; round < 10; ++round) CHECK(prune(pool, fake_solution(1, Rational(1), {}), 3).pruned == 0);
  CHECK(pool[0].slack_counter == 0);
}

TEST_CASE("weighted and star columns are protected") {
  const BinaryMatrix one = BinaryMatrix::all_ones(1, 1);
  {
    ColumnPool pool(one);
    pool.add(make_biclique(one, {0}, {0}), 0, /*star=*/true);
    for (int round = 0; round < 10; ++round) CHECK(prune(pool, fake_solution(1, Rational(0), {}), 3).pruned == 0);
    CHECK(pool[0].slack_counter == 10);
  }
  {
    ColumnPool pool(one);
    pool.add(make_biclique(one, {0}, {0}), 0);
    for (int round = 0; round < 10; ++round) {
      CHECK(prune(pool, fake_solution(1, Rational(0), {Rational(1)}), 3).pruned == 0);
    }
    CHECK(pool[0].slack_counter == 0);
  }
  ColumnPool pool(one);
  pool.add(make_biclique(one, {0}, {0}), 0);
  CHECK_THROWS_AS(prune(pool, fake_solution(2, Rational(0), {}), 3), ContractViolation);
}

TEST_CASE("the twelve-biclique half-weight fixture partitions D (x) D") {
  const BinaryMatrix d2 = kronecker(BinaryMatrix::domino(), BinaryMatrix::domino());
  const auto support = fixture::domino2_support();
  REQUIRE(support.size() == 12);
  for (const auto& b : support) REQUIRE(is_valid_biclique(d2, b));
  for (std::size_t e = 0; e < d2.num_edges(); ++e) CHECK(cover_sum(d2, support, Rational(1, 2), e) == 1);
  CHECK(Rational(1, 2) * support.size() == 6);
}

TEST_CASE("the five-biclique half-weight fixture partitions D") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const auto support = fixture::domino_support();
  for (std::size_t e = 0; e < d.num_edges(); ++e) CHECK(cover_sum(d, support, Rational(1, 2), e) == 1);
}

TEST_CASE("kronecker support seeds") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const BinaryMatrix d2 = kronecker(d, d);
  const auto s1 = fixture::domino_support();
  const auto seeds = initial_kronecker_support(s1, s1);
  CHECK(seeds.size() <= 25);
  for (const auto& b : seeds) CHECK(is_valid_biclique(d2, b));

  // The product partition has weight 1/4 everywhere, so the start is at most 25/4.
  for (std::size_t e = 0; e < d2.num_edges(); ++e) CHECK(cover_sum(d2, seeds, Rational(1, 4), e) == 1);

  const auto s3 = initial_kronecker_support(s1, fixture::domino2_support());
  CHECK(s3.size() <= 60);
  const BinaryMatrix d3 = kronecker(d, d2);
  for (const auto& b : s3) CHECK(is_valid_biclique(d3, b));
  for (std::size_t e = 0; e < d3.num_edges(); ++e) CHECK(cover_sum(d3, s3, Rational(1, 4), e) == 1);

  const BinaryMatrix one = BinaryMatrix::all_ones(1, 1);
  CHECK(initial_kronecker_support(s1, {make_biclique(one, {0}, {0})}) == s1);
}

TEST_CASE("domino by every strategy") {
  const BinaryMatrix d = BinaryMatrix::domino();
  for (InitStrategy s : {InitStrategy::kStars, InitStrategy::kAllBicliques, InitStrategy::kKroneckerSupport,
                         InitStrategy::kUnion}) {
    ColGenConfig c;
    c.init = s;
    const ColGenReport r = run_column_generation(d, c);
    CHECK(r.converged);
    CHECK(r.exact);
    CHECK(r.value == Rational(5, 2));
    CHECK(r.lower_bound == Rational(5, 2));
    if (s == InitStrategy::kAllBicliques) CHECK(r.iterations.size() == 1);
  }
}

TEST_CASE("report invariants on D (x) D") {
  const BinaryMatrix d = BinaryMatrix::domino();
  for (lp::Engine engine : {lp::Engine::kExact, lp::Engine::kFloatGuided}) {
    ColGenConfig c;
    c.engine = engine;
    const auto levels = run_power(d, 2, c);
    REQUIRE(levels.size() == 2);
    const ColGenReport& r = levels.back();
    CHECK(r.converged);
    CHECK(r.value == 6);
    CHECK(r.iterations.front().master_objective <= Rational(25, 4));
    Rational previous = r.iterations.front().master_objective;
    for (const auto& it : r.iterations) {
      CHECK(it.master_objective <= previous);
      CHECK(it.lower_bound <= 6);
      CHECK(it.master_objective >= 6);
      previous = it.master_objective;
    }
    CHECK(r.value == r.iterations.back().master_objective);

    Rational total = 0;
    for (const auto& s : r.support) total += s.weight;
    CHECK(total == 6);

    // Dividing the final dual by alpha gives an exactly feasible dual.
    const BinaryMatrix d2 = kronecker(d, d);
    std::vector<Rational> scaled = r.certificate.dual;
    for (auto& y : scaled) y /= r.alpha;
    for (const auto& b : enumerate_all_bicliques(d2, 100000)) {
      Rational act = 0;
      incidence_column(d2, b).for_each([&](std::size_t e) { act += scaled[e]; });
      CHECK(act <= 1);
    }
  }
}

TEST_CASE("column generation matches the full LP on random matrices") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 60; ++t) {
    const BinaryMatrix a = oracle::random_matrix(rng, 4, 4);
    lp::LinearProgram p;
    p.num_rows = a.num_edges();
    for (const auto& b : enumerate_all_bicliques(a, 100000)) p.columns.push_back(incidence_column(a, b));
    const Rational full = lp::solve(p).objective;
    const ColGenReport r = run_column_generation(a, stars_config());
    CHECK(r.converged);
    CHECK(r.value == full);
  }
}

TEST_CASE("iteration and time limits give nonconverged reports") {
  const BinaryMatrix d2 = kronecker(BinaryMatrix::domino(), BinaryMatrix::domino());
  ColGenConfig c = stars_config();
  c.max_iterations = 1;
  const ColGenReport r = run_column_generation(d2, c);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations.size() == 1);
  CHECK(r.value == 9);
  CHECK(r.lower_bound <= 6);
}

TEST_CASE("runs are deterministic") {
  const BinaryMatrix d = BinaryMatrix::domino();
  ColGenConfig c;
  c.threads = 1;
  const auto a = run_power(d, 2, c);
  c.threads = 4;
  const auto b = run_power(d, 2, c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].iterations == b[i].iterations);
    CHECK(a[i].value == b[i].value);
    CHECK(a[i].certificate.dual == b[i].certificate.dual);
    CHECK(a[i].certificate.basis == b[i].certificate.basis);
  }
}

TEST_CASE("checkpoint resume reproduces the uninterrupted run") {
  const BinaryMatrix d2 = kronecker(BinaryMatrix::domino(), BinaryMatrix::domino());
  ColGenConfig base = stars_config();
  const ColGenReport full = run_column_generation(d2, base);
  REQUIRE(full.converged);
  REQUIRE(full.iterations.size() >= 3);

  const auto path = temp_file("resume.json");
  ColGenConfig c = base;
  c.checkpoint_path = path.string();
  c.max_iterations = 2;
  const ColGenReport head = run_column_generation(d2, c);
  CHECK_FALSE(head.converged);
  REQUIRE(std::filesystem::exists(path));
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));

  const auto state = read_checkpoint(path.string(), d2);
  REQUIRE(state);
  CHECK(state->iteration == 2);
  CHECK(state->matrix_hash == matrix_hash(d2));

  c.max_iterations = base.max_iterations;
  const ColGenReport tail = run_column_generation(d2, c);
  CHECK(tail.resumed);
  CHECK(tail.converged);
  CHECK(tail.value == full.value);
  CHECK(tail.iterations == full.iterations);
  CHECK(tail.certificate.dual == full.certificate.dual);
}

TEST_CASE("checkpoint refuses a different matrix and malformed files") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const BinaryMatrix d2 = kronecker(d, d);
  const auto path = temp_file("mismatch.json");
  ColGenConfig c = stars_config();
  c.checkpoint_path = path.string();
  c.max_iterations = 1;
  run_column_generation(d2, c);
  REQUIRE(std::filesystem::exists(path));
  CHECK_THROWS_AS(read_checkpoint(path.string(), d), CheckpointError);
  CHECK_THROWS_AS(run_column_generation(d, c), CheckpointError);

  CHECK_FALSE(read_checkpoint(temp_file("missing.json").string(), d).has_value());

  const auto junk = temp_file("junk.json");
  std::ofstream(junk) << "{ not json";
  CHECK_THROWS_AS(read_checkpoint(junk.string(), d), CheckpointError);
  std::ofstream(junk) << R"({"format": "something-else", "version": 1})";
  CHECK_THROWS_AS(read_checkpoint(junk.string(), d), CheckpointError);
}

TEST_CASE("checkpoint round trip keeps every field") {
  const BinaryMatrix d = BinaryMatrix::domino();
  ColumnPool pool(d);
  pool.add(make_biclique(d, {1}, {0, 1, 2}), 0, true);
  pool.add(make_biclique(d, {0, 1}, {0, 1}), 4, false, 2);
  std::vector<IterationRecord> trace(1);
  trace[0].iteration = 4;
  trace[0].master_objective = Rational(7, 3);
  trace[0].alpha = Rational(-1, 9);
  trace[0].lower_bound = Rational(5, 2);
  lp::Basis basis;
  basis.heading = {{lp::Variable::Kind::kStructural, 1}, {lp::Variable::Kind::kArtificial, 3}};
  const auto path = temp_file("roundtrip.json");
  write_checkpoint(path.string(), snapshot(d, pool, basis, 4, Rational(5, 2), trace));
  const auto back = read_checkpoint(path.string(), d);
  REQUIRE(back);
  CHECK(back->iteration == 4);
  CHECK(back->best_lower_bound == Rational(5, 2));
  CHECK(back->basis == basis);
  CHECK(back->trace == trace);
  REQUIRE(back->pool.size() == 2);
  CHECK(back->pool[0].star);
  CHECK(back->pool[1].slack_counter == 2);
  CHECK(back->pool[1].born_iteration == 4);
  CHECK(back->pool[1].biclique == make_biclique(d, {0, 1}, {0, 1}));

  CHECK_THROWS_AS(write_checkpoint("/nonexistent-dir/x/cp.json", snapshot(d, pool, basis, 4, 0, trace)),
                  CheckpointError);
}
