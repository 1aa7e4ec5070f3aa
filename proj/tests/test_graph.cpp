#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fbp/errors.hpp"
#include "fbp/graph/enumerate.hpp"
#include "fbp/graph/kronecker.hpp"
#include "fbp/graph/matrix_io.hpp"
#include "fbp/graph/maximal.hpp"
#include "oracles.hpp"

using namespace fbp;

namespace {

Bitset bits(const char* s) { return Bitset::from_string(s); }

std::size_t count_ones(const BinaryMatrix& a) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.num_rows(); ++i) {
    for (std::size_t j = 0; j < a.num_cols(); ++j) n += a.at(i, j);
  }
  return n;
}

}  // namespace

TEST_CASE("bitset basics and canonical order") {
  Bitset b = bits("0110");
  CHECK(b.size() == 4);
  CHECK(b.count() == 2);
  CHECK(b.test(1));
  CHECK_FALSE(b.test(0));
  CHECK(b.to_string() == "0110");
  CHECK(b.count_below(2) == 1);
  CHECK(b.indices() == std::vector<std::size_t>{1, 2});

  // position 0 first, '0' < '1'
  CHECK(bits("010") < bits("011"));
  CHECK(bits("011") < bits("110"));
  CHECK(bits("110") < bits("111"));
  CHECK(bits("0") < bits("1"));

  CHECK(bits("0100").is_subset_of(bits("0110")));
  CHECK_FALSE(bits("1000").is_subset_of(bits("0110")));
  CHECK(bits("0110").intersects(bits("0011")));
  CHECK((bits("0110") & bits("0011")) == bits("0010"));
  CHECK((bits("0110") | bits("0011")) == bits("0111"));
  CHECK_THROWS_AS(Bitset::from_string("01x"), FormatError);
}

TEST_CASE("bitset hex round trip") {
  std::mt19937 rng(7);
  for (std::size_t width : {1u, 3u, 4u, 5u, 63u, 64u, 65u, 130u}) {
    for (int t = 0; t < 20; ++t) {
      Bitset b(width);
      for (std::size_t i = 0; i < width; ++i) {
        if (rng() & 1U) b.set(i);
      }
      CHECK(Bitset::from_hex(b.to_hex(), width) == b);
    }
  }
  CHECK(bits("1000").to_hex() == "8");
  CHECK(bits("0001").to_hex() == "1");
  CHECK(bits("11111").to_hex() == "f8");
  CHECK_THROWS_AS(Bitset::from_hex("f", 3), FormatError);
  CHECK_THROWS_AS(Bitset::from_hex("g", 4), FormatError);
}

TEST_CASE("domino and its edge numbering") {
  const BinaryMatrix d = BinaryMatrix::domino();
  CHECK(d.num_rows() == 3);
  CHECK(d.num_cols() == 3);
  CHECK(d.num_edges() == 7);
  CHECK(format_matrix(d) == "110\n111\n011\n");
  CHECK(d.edge(0) == Edge{0, 0});
  CHECK(d.edge(2) == Edge{1, 0});
  CHECK(d.edge(6) == Edge{2, 2});
  CHECK(d.edge_index(1, 2) == 4);
  CHECK_FALSE(d.edge_index(0, 2).has_value());
  CHECK_FALSE(d.edge_index(5, 0).has_value());
  CHECK(d.row_offset(2) == 5);
  CHECK(d.column(0) == bits("110"));
  CHECK(d.transpose() == d);
}

TEST_CASE("matrix construction errors") {
  CHECK_THROWS_AS(BinaryMatrix(3, {}), ContractViolation);
  CHECK_THROWS_AS(BinaryMatrix(0, {Bitset(0)}), ContractViolation);
  CHECK_THROWS_AS(BinaryMatrix(3, {Bitset(2)}), ContractViolation);
}

TEST_CASE("crown, identity and all-ones") {
  const BinaryMatrix c = BinaryMatrix::crown(5);
  CHECK(c.num_edges() == 20);
  for (std::size_t i = 0; i < 5; ++i) CHECK_FALSE(c.at(i, i));
  CHECK(BinaryMatrix::identity(4).num_edges() == 4);
  CHECK(BinaryMatrix::all_ones(2, 3).num_edges() == 6);
}

TEST_CASE("matrix text format") {
  const BinaryMatrix a = parse_matrix("# a comment\n1 1 0\n\n1\t1 1\n011\n");
  CHECK(a == BinaryMatrix::domino());
  CHECK(parse_matrix(format_matrix(a)) == a);
  CHECK(parse_matrix("10\r\n01\r\n") == BinaryMatrix::identity(2));
  CHECK_THROWS_AS(parse_matrix("110\n11\n"), FormatError);
  CHECK_THROWS_AS(parse_matrix("12\n"), FormatError);
  CHECK_THROWS_AS(parse_matrix("# only a comment\n"), FormatError);
  CHECK_THROWS_AS(load_matrix("/nonexistent/matrix.txt"), FormatError);
  CHECK(load_matrix("crown5") == BinaryMatrix::crown(5));
  CHECK(load_matrix("domino") == BinaryMatrix::domino());
}

TEST_CASE("matrix hash is stable and distinguishes shapes") {
  const std::string h = matrix_hash(BinaryMatrix::domino());
  CHECK(h.size() == 16);
  CHECK(h == matrix_hash(parse_matrix("110\n111\n011\n")));
  CHECK(h != matrix_hash(BinaryMatrix::identity(3)));
  // same bits, different shapes
  CHECK(matrix_hash(BinaryMatrix::all_ones(1, 2)) != matrix_hash(BinaryMatrix::all_ones(2, 1)));
}

TEST_CASE("kronecker products") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const BinaryMatrix d2 = kronecker_power(d, 2);
  CHECK(d2.num_rows() == 9);
  CHECK(d2.num_cols() == 9);
  CHECK(d2.num_edges() == 49);
  CHECK(count_ones(d2) == 49);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) CHECK(d2.at(i, j) == (d.at(i / 3, j / 3) && d.at(i % 3, j % 3)));
  }
  const BinaryMatrix d3 = kronecker_power(d, 3);
  CHECK(d3.num_rows() == 27);
  CHECK(d3.num_edges() == 343);
  CHECK(kronecker(d, d2) == d3);
  CHECK(kronecker(d2, d) == d3);
  CHECK(kronecker_power(d, 1) == d);
  CHECK(kronecker(BinaryMatrix::all_ones(1, 1), d) == d);
  CHECK_THROWS_AS(kronecker_power(d, 0), ContractViolation);
}

TEST_CASE("bicliques") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const Biclique b = make_biclique(d, {0, 1}, {0, 1});
  CHECK(is_valid_biclique(d, b));
  CHECK(b.num_edges() == 4);
  CHECK(incidence_column(d, b) == bits("1111000"));
  CHECK_FALSE(is_valid_biclique(d, make_biclique(d, {0}, {2})));
  CHECK_FALSE(is_valid_biclique(d, Biclique{Bitset(3), bits("100")}));
  CHECK_THROWS_AS(incidence_column(d, make_biclique(d, {0, 2}, {0})), ContractViolation);
  CHECK_THROWS_AS(is_valid_biclique(d, Biclique{Bitset(2), Bitset(3)}), ContractViolation);
  CHECK(b.transposed().rows == b.cols);
  CHECK(incidence_column(d, make_biclique(d, {2}, {2})).count() == 1);
  CHECK(incidence_column(d, make_biclique(d, {1}, {0, 1, 2})) == bits("0011100"));
  CHECK(is_valid_biclique(d, make_biclique(d, {0, 1, 2}, {1})));
}

TEST_CASE("kronecker biclique lands on ones of the product") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const BinaryMatrix d2 = kronecker_power(d, 2);
  const Biclique b1 = make_biclique(d, {0, 1}, {0, 1});
  const Biclique b2 = make_biclique(d, {0, 1}, {0, 1});
  const Biclique p = kronecker_biclique(b1, b2);
  CHECK(p.rows.indices() == std::vector<std::size_t>{0, 1, 3, 4});
  CHECK(p.cols.indices() == std::vector<std::size_t>{0, 1, 3, 4});
  CHECK(is_valid_biclique(d2, p));
  const Biclique q = kronecker_biclique(make_biclique(d, {0, 1}, {0, 1}), make_biclique(d, {0, 1}, {0}));
  CHECK(q.rows.indices() == std::vector<std::size_t>{0, 1, 3, 4});
  CHECK(q.cols.indices() == std::vector<std::size_t>{0, 3});
  for (const auto& x : enumerate_maximal(d)) {
    for (const auto& y : enumerate_maximal(d)) CHECK(is_valid_biclique(d2, kronecker_biclique(x, y)));
  }
}

TEST_CASE("maximal bicliques of the domino") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const auto m = enumerate_maximal(d);
  REQUIRE(m.size() == 4);
  CHECK(m[0] == make_biclique(d, {1}, {0, 1, 2}));
  CHECK(m[1] == make_biclique(d, {1, 2}, {1, 2}));
  CHECK(m[2] == make_biclique(d, {0, 1}, {0, 1}));
  CHECK(m[3] == make_biclique(d, {0, 1, 2}, {1}));
  CHECK(enumerate_maximal(BinaryMatrix::all_ones(2, 3)).size() == 1);
  CHECK(enumerate_maximal(BinaryMatrix::identity(4)).size() == 4);
  CHECK_THROWS_AS(enumerate_maximal(BinaryMatrix(2, {Bitset(2), Bitset(2)})), EmptyGraphError);
}

TEST_CASE("maximal bicliques agree with a brute-force maximality check") {
  std::mt19937 rng(11);
  for (int t = 0; t < 150; ++t) {
    const BinaryMatrix a = oracle::random_matrix(rng, 5, 5);
    const auto all = oracle::all_bicliques(a);
    std::vector<Biclique> expected;
    for (const auto& b : all) {
      bool maximal = true;
      for (const auto& c : all) {
        if (c != b && b.rows.is_subset_of(c.rows) && b.cols.is_subset_of(c.cols)) maximal = false;
      }
      if (maximal) expected.push_back(b);
    }
    CHECK(enumerate_maximal(a) == expected);
    CHECK(enumerate_maximal(a.transpose()).size() == expected.size());
  }
}

TEST_CASE("maximal bicliques of Kronecker powers") {
  const BinaryMatrix d = BinaryMatrix::domino();
  for (int k = 1; k <= 3; ++k) {
    const auto lifted = maximal_bicliques_of_power(d, k);
    std::size_t expected = 1;
    for (int i = 0; i < k; ++i) expected *= 4;
    CHECK(lifted.size() == expected);
    if (k <= 2) CHECK(lifted == enumerate_maximal(kronecker_power(d, k)));
  }
  // The k = 3 lift against direct enumeration on the 27 x 27 matrix.
  CHECK(maximal_bicliques_of_power(d, 3) == enumerate_maximal(kronecker_power(d, 3)));
}

TEST_CASE("enumerating all bicliques") {
  const BinaryMatrix d = BinaryMatrix::domino();
  const auto all = enumerate_all_bicliques(d, 1000);
  CHECK(all.size() == 21);
  CHECK(all == oracle::all_bicliques(d));
  CHECK(subbiclique_count_bound(enumerate_maximal(d)) == 32);
  CHECK_THROWS_AS(enumerate_all_bicliques(d, 10), CapExceeded);

  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const BinaryMatrix a = oracle::random_matrix(rng, 4, 5);
    CHECK(enumerate_all_bicliques(a, 100000) == oracle::all_bicliques(a));
  }
  const BinaryMatrix d2 = kronecker_power(d, 2);
  CHECK(enumerate_all_bicliques(d2, 100000) == oracle::all_bicliques(d2));
}

TEST_CASE("all-ones matrices have (2^m - 1)(2^n - 1) bicliques") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto all = enumerate_all_bicliques(BinaryMatrix::all_ones(m, n), 100000);
      CHECK(all.size() == ((std::size_t{1} << m) - 1) * ((std::size_t{1} << n) - 1));
    }
  }
}

TEST_CASE("kronecker is associative on random inputs") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const BinaryMatrix a = oracle::random_matrix(rng, 3, 3);
    const BinaryMatrix b = oracle::random_matrix(rng, 3, 2);
    const BinaryMatrix c = oracle::random_matrix(rng, 2, 3);
    CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
    CHECK(kronecker(a, b).num_edges() == a.num_edges() * b.num_edges());
  }
}

TEST_CASE("maximal bicliques cannot be extended and cover every edge") {
  const BinaryMatrix d3 = kronecker_power(BinaryMatrix::domino(), 3);
  const auto m = maximal_bicliques_of_power(BinaryMatrix::domino(), 3);
  Bitset covered(d3.num_edges());
  std::size_t largest = 0;
  for (const auto& b : m) {
    REQUIRE(is_valid_biclique(d3, b));
    covered |= incidence_column(d3, b);
    largest = std::max(largest, b.num_edges());
    for (std::size_t i = 0; i < d3.num_rows(); ++i) {
      if (b.rows.test(i)) continue;
      Biclique wider = b;
      wider.rows.set(i);
      CHECK_FALSE(is_valid_biclique(d3, wider));
    }
  }
  CHECK(covered.count() == d3.num_edges());
  CHECK(largest == 64);
}
