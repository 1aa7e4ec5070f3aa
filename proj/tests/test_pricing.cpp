#include <doctest.h>

#include <random>
#include <set>

#include "fbp/errors.hpp"
#include "fbp/graph/kronecker.hpp"
#include "fbp/graph/maximal.hpp"
#include "fbp/pricing.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fbp;

namespace {

const Rational kThreshold(1000001, 1000000);

std::vector<Rational> transpose_weights(const BinaryMatrix& a, const std::vector<Rational>& y) {
  const BinaryMatrix t = a.transpose();
  std::vector<Rational> out(y.size());
  for (std::size_t e = 0; e < a.num_edges(); ++e) {
    const Edge edge = a.edge(e);
    out[*t.edge_index(edge.col, edge.row)] = y[e];
  }
  return out;
}

}  // namespace

TEST_CASE("domino block under the dual witness") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const EdgeWeights y(fixture::domino_dual());
  const auto r = price_maximal(d, make_biclique(d, {0, 1}, {0, 1}), y, kThreshold, 64);
  CHECK(r.best.value == 1);
  CHECK(r.candidates.empty());
  CHECK(oracle::max_subrectangle(d, y.values(), make_biclique(d, {0, 1}, {0, 1})) == 1);
}

TEST_CASE("domino middle row under the dual witness") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const EdgeWeights y(fixture::domino_dual());
  const auto r = price_maximal(d, make_biclique(d, {1}, {0, 1, 2}), y, kThreshold, 64);
  CHECK(r.best.value == 1);
  CHECK(r.best.biclique == make_biclique(d, {1}, {0, 2}));
}

TEST_CASE("price_all certifies the domino optimum") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const auto maximals = enumerate_maximal(d);
  PricingOptions o;
  const auto r = price_all(d, maximals, EdgeWeights(fixture::domino_dual()), o);
  CHECK(r.alpha == 1);
  CHECK(r.candidates.empty());

  const auto ones = price_all(d, maximals, EdgeWeights::constant(7, 1), o);
  CHECK(ones.alpha == 4);
  CHECK(maximals[ones.alpha_index].num_edges() == 4);
  CHECK_FALSE(ones.candidates.empty());
  CHECK(ones.candidates.front().value == 4);

  const auto zero = price_all(d, maximals, EdgeWeights::constant(7, 0), o);
  CHECK(zero.alpha == 0);
  CHECK(zero.candidates.empty());
}

TEST_CASE("zero duals still return a single edge") {
  const BinaryMatrix d = BinaryMatrix::domino();
  for (const auto& b : enumerate_maximal(d)) {
    const auto r = price_maximal(d, b, EdgeWeights::constant(7, 0), kThreshold, 64);
    CHECK(r.best.value == 0);
    CHECK(r.best.biclique.num_edges() == 1);
    CHECK(r.best.biclique.rows.is_subset_of(b.rows));
    CHECK(r.best.biclique.cols.is_subset_of(b.cols));
  }
}

TEST_CASE("all-negative duals return the least negative edge") {
  const BinaryMatrix d = BinaryMatrix::domino();
  std::vector<Rational> y(7, Rational(-1));
  y[3] = Rational(-1, 5);
  const auto r = price_maximal(d, make_biclique(d, {0, 1}, {0, 1}), EdgeWeights(y), kThreshold, 64);
  CHECK(r.best.value == Rational(-1, 5));
  CHECK(r.best.biclique == make_biclique(d, {1}, {1}));
}

TEST_CASE("pricing equals brute force on random duals") {
  std::mt19937 rng(99);
  const BinaryMatrix d = BinaryMatrix::domino();
  const BinaryMatrix d2 = kronecker(d, d);
  for (const BinaryMatrix* a : {&d, &d2}) {
    const auto maximals = enumerate_maximal(*a);
    for (int t = 0; t < 40; ++t) {
      const auto y = oracle::random_weights(rng, a->num_edges());
      const EdgeWeights w(y);
      for (const auto& b : maximals) {
        const auto r = price_maximal(*a, b, w, kThreshold, 64);
        CHECK(r.best.value == oracle::max_subrectangle(*a, y, b));
        CHECK(w.weight(*a, r.best.biclique) == r.best.value);
        std::set<Biclique> seen;
        for (const auto& c : r.candidates) {
          CHECK(c.value > kThreshold);
          CHECK(w.weight(*a, c.biclique) == c.value);
          CHECK(is_valid_biclique(*a, c.biclique));
          CHECK(seen.insert(c.biclique).second);
        }
      }
    }
  }
}

TEST_CASE("price_all candidates are sorted, deduplicated and above threshold") {
  std::mt19937 rng(4);
  const BinaryMatrix d2 = kronecker(BinaryMatrix::domino(), BinaryMatrix::domino());
  const auto maximals = enumerate_maximal(d2);
  for (int t = 0; t < 20; ++t) {
    const auto y = oracle::random_weights(rng, d2.num_edges());
    for (unsigned threads : {1u, 4u}) {
      PricingOptions o;
      o.threads = threads;
      o.global_cap = 50;
      const auto r = price_all(d2, maximals, EdgeWeights(y), o);
      Rational alpha = oracle::max_subrectangle(d2, y, maximals[0]);
      for (const auto& b : maximals) alpha = std::max(alpha, oracle::max_subrectangle(d2, y, b));
      CHECK(r.alpha == alpha);
      CHECK(r.candidates.size() <= 50);
      std::set<Biclique> seen;
      for (std::size_t i = 0; i < r.candidates.size(); ++i) {
        CHECK(r.candidates[i].value > o.threshold);
        CHECK(seen.insert(r.candidates[i].biclique).second);
        if (i > 0) CHECK(r.candidates[i - 1].value >= r.candidates[i].value);
      }
    }
  }
}

TEST_CASE("thread count does not change the result") {
  std::mt19937 rng(12);
  const BinaryMatrix d2 = kronecker(BinaryMatrix::domino(), BinaryMatrix::domino());
  const auto maximals = enumerate_maximal(d2);
  const auto y = oracle::random_weights(rng, d2.num_edges());
  PricingOptions one;
  PricingOptions many;
  many.threads = 8;
  const auto a = price_all(d2, maximals, EdgeWeights(y), one);
  const auto b = price_all(d2, maximals, EdgeWeights(y), many);
  CHECK(a.alpha == b.alpha);
  CHECK(a.alpha_index == b.alpha_index);
  REQUIRE(a.candidates.size() == b.candidates.size());
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    CHECK(a.candidates[i].biclique == b.candidates[i].biclique);
    CHECK(a.candidates[i].value == b.candidates[i].value);
  }
}

TEST_CASE("transposed pricing gives transposed maximizers") {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    const BinaryMatrix a = oracle::random_matrix(rng, 5, 4);
    const BinaryMatrix at = a.transpose();
    const auto y = oracle::random_weights(rng, a.num_edges());
    const auto yt = transpose_weights(a, y);
    for (const auto& b : enumerate_maximal(a)) {
      const auto r = price_maximal(a, b, EdgeWeights(y), kThreshold, 64);
      const auto rt = price_maximal(at, b.transposed(), EdgeWeights(yt), kThreshold, 64);
      CHECK(r.best.value == rt.best.value);
      CHECK(EdgeWeights(yt).weight(at, r.best.biclique.transposed()) == r.best.value);
    }
  }
}

TEST_CASE("subset limit is enforced") {
  const BinaryMatrix ones = BinaryMatrix::all_ones(6, 6);
  const auto b = enumerate_maximal(ones).front();
  CHECK_THROWS_AS(price_maximal(ones, b, EdgeWeights::constant(36, 1), kThreshold, 64, 16), CapExceeded);
  CHECK_THROWS_AS(EdgeWeights::constant(3, 1).weight(ones, b), ContractViolation);
}
