#pragma once

#include <cstddef>
#include <vector>

#include "fbp/graph/biclique.hpp"
#include "fbp/rational.hpp"

namespace fbp {

// Dual values y, one per edge in row-major edge order. May be negative.
class EdgeWeights {
 public:
  explicit EdgeWeights(std::vector<Rational> values) : values_(std::move(values)) {}
  static EdgeWeights constant(std::size_t num_edges, const Rational& value) {
    return EdgeWeights(std::vector<Rational>(num_edges, value));
  }

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t e) const { return values_[e]; }
  const std::vector<Rational>& values() const { return values_; }

  // Exact sum of y over rows x cols of b.
  Rational weight(const BinaryMatrix& a, const Biclique& b) const;

 private:
  std::vector<Rational> values_;
};

struct PricedBiclique {
  Biclique biclique;
  Rational value;
};

struct MaximalPricing {
  // Maximum of sum(y) over nonempty subrectangles of the biclique.
  PricedBiclique best;
  // Distinct closed subbicliques (R, C(R)) whose value exceeds the threshold,
  // by value descending then canonical key, at most `cap` of them.
  std::vector<PricedBiclique> candidates;
};

struct PricingOptions {
  Rational threshold = Rational(1000001, 1000000);
  std::size_t per_biclique_cap = 64;
  std::size_t global_cap = 4096;
  // Largest number of subsets enumerated on the smaller side of a biclique.
  std::size_t max_subsets = std::size_t{1} << 20;
  unsigned threads = 1;
};

// Exact max-weight submatrix of one biclique. Enumerates the subsets R of the
// smaller side and closes each with C(R) = { j : sum_{i in R} y_ij > 0 }.
// Among equal values the biclique with fewer edges wins, then the canonically
// smaller one. Throws ContractViolation for an invalid biclique and
// CapExceeded when 2^(smaller side) - 1 > max_subsets.
MaximalPricing price_maximal(const BinaryMatrix& a, const Biclique& b, const EdgeWeights& y,
                             const Rational& threshold, std::size_t cap,
                             std::size_t max_subsets = std::size_t{1} << 20);

struct PricingResult {
  Rational alpha;
  std::size_t alpha_index = 0;  // maximal biclique attaining alpha
  std::vector<PricedBiclique> candidates;
};

// Prices every maximal biclique (in parallel when options.threads > 1) and
// merges deterministically: dedup, sort by (value desc, canonical key), cap.
PricingResult price_all(const BinaryMatrix& a, const std::vector<Biclique>& maximals, const EdgeWeights& y,
                        const PricingOptions& options);

}  // namespace fbp
