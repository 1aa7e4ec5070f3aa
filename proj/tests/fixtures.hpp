#pragma once

// Hand-entered Domino data: the dual witness, the weight-1/2 optimal supports
// of D and D (x) D, and the reference table values.

#include <vector>

#include "fbp/graph/biclique.hpp"
#include "fbp/graph/kronecker.hpp"
#include "fbp/rational.hpp"

namespace fixture {

using fbp::BinaryMatrix;
using fbp::Biclique;
using fbp::Rational;

// Dual witness for D, one entry per edge in row-major order.
inline std::vector<Rational> domino_dual() {
  const Rational h(1, 2);
  return {h, h, h, -h, h, h, h};
}

// Five bicliques of weight 1/2 partitioning D.
inline std::vector<Biclique> domino_support() {
  const BinaryMatrix d = BinaryMatrix::domino();
  return {
      fbp::make_biclique(d, {0, 1}, {0, 1}), fbp::make_biclique(d, {1, 2}, {1, 2}),
      fbp::make_biclique(d, {0}, {0, 1}),    fbp::make_biclique(d, {1}, {0, 2}),
      fbp::make_biclique(d, {2}, {1, 2}),
  };
}

// Twelve bicliques of weight 1/2 partitioning D (x) D, read off the 9x9 display.
inline std::vector<Biclique> domino2_support() {
  const BinaryMatrix d2 = fbp::kronecker(BinaryMatrix::domino(), BinaryMatrix::domino());
  return {
      fbp::make_biclique(d2, {0, 1, 3, 4}, {0, 1, 3}), fbp::make_biclique(d2, {1, 2, 4, 5}, {1, 2, 4, 5}),
      fbp::make_biclique(d2, {0, 1}, {0, 3, 4}),       fbp::make_biclique(d2, {1, 2}, {2, 5}),
      fbp::make_biclique(d2, {4, 6, 7}, {3, 4, 6}),    fbp::make_biclique(d2, {4, 5, 7, 8}, {5, 7, 8}),
      fbp::make_biclique(d2, {3, 6, 7}, {3, 6, 7}),    fbp::make_biclique(d2, {7, 8}, {4, 5, 8}),
      fbp::make_biclique(d2, {3, 4}, {0, 6}),          fbp::make_biclique(d2, {4, 5}, {2, 7, 8}),
      fbp::make_biclique(d2, {0, 2, 3, 5}, {1, 4}),    fbp::make_biclique(d2, {3, 6, 8}, {4, 7}),
  };
}

inline constexpr double kPowerValues[] = {2.5, 6.0, 13.818792, 32.040389, 75.201302};
inline constexpr const char* kPowerRoots[] = {"2.500000", "2.449490", "2.399699", "2.379164", "2.372712"};
inline constexpr const char* kLemmaTable[] = {"2.500", "2.236", "2.154", "2.115", "2.091"};

}  // namespace fixture
