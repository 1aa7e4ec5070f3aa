#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the matrix and biclique types, and are only meant for tiny
// inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "fbp/graph/biclique.hpp"
#include "fbp/rational.hpp"

namespace oracle {

using fbp::BinaryMatrix;
using fbp::Biclique;
using fbp::Bitset;
using fbp::Rational;

inline Bitset mask_bits(std::size_t width, std::uint64_t mask) {
  Bitset b(width);
  for (std::size_t i = 0; i < width; ++i) {
    if ((mask >> i) & 1U) b.set(i);
  }
  return b;
}

// Every biclique, by trying each nonempty row subset and each nonempty subset
// of its common neighbourhood.
inline std::vector<Biclique> all_bicliques(const BinaryMatrix& a) {
  const std::size_t m = a.num_rows();
  const std::size_t n = a.num_cols();
  std::vector<Biclique> out;
  for (std::uint64_t r = 1; r < (std::uint64_t{1} << m); ++r) {
    std::vector<std::size_t> common;
    for (std::size_t j = 0; j < n; ++j) {
      bool all = true;
      for (std::size_t i = 0; i < m && all; ++i) {
        if (((r >> i) & 1U) && !a.at(i, j)) all = false;
      }
      if (all) common.push_back(j);
    }
    for (std::uint64_t c = 1; c < (std::uint64_t{1} << common.size()); ++c) {
      Bitset cols(n);
      for (std::size_t t = 0; t < common.size(); ++t) {
        if ((c >> t) & 1U) cols.set(common[t]);
      }
      out.push_back({mask_bits(m, r), cols});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Weight of rows x cols under edge weights y (row-major edge order).
inline Rational rect_weight(const BinaryMatrix& a, const std::vector<Rational>& y, const Bitset& rows,
                            const Bitset& cols) {
  Rational s = 0;
  std::size_t e = 0;
  for (std::size_t i = 0; i < a.num_rows(); ++i) {
    for (std::size_t j = 0; j < a.num_cols(); ++j) {
      if (!a.at(i, j)) continue;
      if (rows.test(i) && cols.test(j)) s += y[e];
      ++e;
    }
  }
  return s;
}

// max over all nonempty R x C inside b.
inline Rational max_subrectangle(const BinaryMatrix& a, const std::vector<Rational>& y, const Biclique& b) {
  const auto ri = b.rows.indices();
  const auto ci = b.cols.indices();
  bool first = true;
  Rational best = 0;
  for (std::uint64_t r = 1; r < (std::uint64_t{1} << ri.size()); ++r) {
    Bitset rows(a.num_rows());
    for (std::size_t t = 0; t < ri.size(); ++t) {
      if ((r >> t) & 1U) rows.set(ri[t]);
    }
    for (std::uint64_t c = 1; c < (std::uint64_t{1} << ci.size()); ++c) {
      Bitset cols(a.num_cols());
      for (std::size_t t = 0; t < ci.size(); ++t) {
        if ((c >> t) & 1U) cols.set(ci[t]);
      }
      const Rational v = rect_weight(a, y, rows, cols);
      if (first || v > best) best = v;
      first = false;
    }
  }
  return best;
}

// Minimum number of bicliques partitioning the ones, by exhaustive search:
// the first uncovered one must be covered by some biclique of uncovered ones.
inline std::size_t partition_number(const BinaryMatrix& a) {
  const auto bicliques = all_bicliques(a);
  std::vector<std::vector<bool>> cover;
  for (const auto& b : bicliques) {
    std::vector<bool> c(a.num_edges(), false);
    std::size_t e = 0;
    for (std::size_t i = 0; i < a.num_rows(); ++i) {
      for (std::size_t j = 0; j < a.num_cols(); ++j) {
        if (!a.at(i, j)) continue;
        c[e++] = b.rows.test(i) && b.cols.test(j);
      }
    }
    cover.push_back(std::move(c));
  }
  std::size_t best = a.num_edges();
  std::vector<bool> used(a.num_edges(), false);
  std::function<void(std::size_t)> go = [&](std::size_t depth) {
    if (depth >= best) return;
    std::size_t first = 0;
    while (first < used.size() && used[first]) ++first;
    if (first == used.size()) {
      best = depth;
      return;
    }
    for (const auto& c : cover) {
      if (!c[first]) continue;
      bool clash = false;
      for (std::size_t e = 0; e < c.size() && !clash; ++e) clash = c[e] && used[e];
      if (clash) continue;
      for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e]) used[e] = true;
      }
      go(depth + 1);
      for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e]) used[e] = false;
      }
    }
  };
  go(0);
  return best;
}

// Largest set of ones no two of which fit in one all-ones submatrix, by
// exhaustive include/exclude search.
inline std::size_t fooling_set(const BinaryMatrix& a) {
  const auto& edges = a.edges();
  auto compatible = [&](std::size_t p, std::size_t q) {
    const auto x = edges[p];
    const auto y = edges[q];
    // Two ones in a common all-ones submatrix iff the 2x2 (or 1x2) they span
    // is all ones.
    return !(a.at(x.row, y.col) && a.at(y.row, x.col));
  };
  std::vector<std::size_t> chosen;
  std::size_t best = 0;
  std::function<void(std::size_t)> go = [&](std::size_t next) {
    best = std::max(best, chosen.size());
    if (chosen.size() + (edges.size() - next) <= best) return;
    for (std::size_t p = next; p < edges.size(); ++p) {
      bool ok = true;
      for (auto q : chosen) ok = ok && compatible(p, q);
      if (!ok) continue;
      chosen.push_back(p);
      go(p + 1);
      chosen.pop_back();
    }
  };
  go(0);
  return best;
}

// Random m x n matrix with at least one 1.
inline BinaryMatrix random_matrix(std::mt19937& rng, std::size_t max_rows, std::size_t max_cols) {
  std::uniform_int_distribution<std::size_t> rows(1, max_rows);
  std::uniform_int_distribution<std::size_t> cols(1, max_cols);
  std::bernoulli_distribution bit(0.6);
  for (;;) {
    std::vector<std::vector<int>> e(rows(rng), std::vector<int>(cols(rng)));
    bool any = false;
    for (auto& r : e) {
      for (auto& v : r) {
        v = bit(rng) ? 1 : 0;
        any = any || v;
      }
    }
    if (any) return BinaryMatrix::from_rows(e);
  }
}

// Rationals p/q with |p| <= 6, 1 <= q <= 4.
inline std::vector<Rational> random_weights(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> y(n);
  for (auto& v : y) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return y;
}

// Gauss-Jordan over the rationals. nullopt if a is singular.
inline std::optional<std::vector<Rational>> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[k]);
    std::swap(b[piv], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) b[k] /= a[k][k];
  return b;
}

}  // namespace oracle
