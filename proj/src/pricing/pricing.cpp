#include "fbp/pricing.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <limits>
#include <thread>
#include <unordered_set>

#include "fbp/errors.hpp"

namespace fbp {

Rational EdgeWeights::weight(const BinaryMatrix& a, const Biclique& b) const {
  if (values_.size() != a.num_edges()) throw ContractViolation("edge weights do not match the matrix");
  Rational sum = 0;
  b.rows.for_each([&](std::size_t i) {
    b.cols.for_each([&](std::size_t j) {
      const auto e = a.edge_index(i, j);
      if (!e) throw ContractViolation("weight of an invalid biclique");
      sum += values_[*e];
    });
  });
  return sum;
}

namespace {

// Subrectangle search on a dense local block. Rows of `w` are the enumerated
// side (at most 63 of them), columns the closed side.
template <class T>
class BlockPricer {
 public:
  struct Found {
    T value;
    std::size_t edges;
    std::uint64_t mask;
    Bitset closure;
  };

  BlockPricer(std::vector<std::vector<T>> w, bool transposed) : w_(std::move(w)), transposed_(transposed) {}

  // Returns false if no subset had a nonempty closure.
  bool run(const T& threshold, std::size_t cap) {
    const std::size_t s = w_.size();
    const std::size_t o = w_.front().size();
    std::vector<T> colsum(o, T(0));
    std::uint64_t mask = 0;
    const std::uint64_t end = std::uint64_t{1} << s;
    T value;
    for (std::uint64_t g = 1; g < end; ++g) {
      const auto flip = static_cast<std::size_t>(std::countr_zero(g));
      mask ^= std::uint64_t{1} << flip;
      const bool added = (mask >> flip) & 1U;
      const auto& row = w_[flip];
      for (std::size_t j = 0; j < o; ++j) {
        if (added) {
          colsum[j] += row[j];
        } else {
          colsum[j] -= row[j];
        }
      }
      value = 0;
      std::size_t positive = 0;
      for (std::size_t j = 0; j < o; ++j) {
        if (colsum[j] > 0) {
          value += colsum[j];
          ++positive;
        }
      }
      if (positive == 0) continue;
      const std::size_t edges = static_cast<std::size_t>(std::popcount(mask)) * positive;
      consider_best(value, edges, mask, colsum);
      if (value > threshold) {
        found_.push_back(Found{value, edges, mask, closure_of(colsum)});
        if (found_.size() >= 2 * cap + 16) trim(cap);
      }
    }
    trim(cap);
    return has_best_;
  }

  const Found& best() const { return best_; }
  const std::vector<Found>& found() const { return found_; }

  // Canonical (rows, cols) order on local representations.
  bool key_less(const Found& a, const Found& b) const {
    const int mask_cmp = compare_masks(a.mask, b.mask);
    const auto closure_cmp = a.closure <=> b.closure;
    if (!transposed_) {
      if (mask_cmp != 0) return mask_cmp < 0;
      return closure_cmp < 0;
    }
    if (closure_cmp != 0) return closure_cmp < 0;
    return mask_cmp < 0;
  }

 private:
  // Same bitstring order as Bitset: lowest differing position decides, with
  // the set bit being greater.
  static int compare_masks(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return 0;
    const std::uint64_t low = diff & (~diff + 1);
    return (a & low) != 0 ? 1 : -1;
  }

  Bitset closure_of(const std::vector<T>& colsum) const {
    Bitset c(colsum.size());
    for (std::size_t j = 0; j < colsum.size(); ++j) {
      if (colsum[j] > 0) c.set(j);
    }
    return c;
  }

  void consider_best(const T& value, std::size_t edges, std::uint64_t mask, const std::vector<T>& colsum) {
    if (has_best_) {
      if (value < best_.value) return;
      if (value == best_.value) {
        if (edges > best_.edges) return;
        if (edges == best_.edges) {
          Found probe{value, edges, mask, closure_of(colsum)};
          if (!key_less(probe, best_)) return;
          best_ = std::move(probe);
          return;
        }
      }
    }
    has_best_ = true;
    best_ = Found{value, edges, mask, closure_of(colsum)};
  }

  void trim(std::size_t cap) {
    auto better = [&](const Found& a, const Found& b) {
      if (a.value != b.value) return a.value > b.value;
      return key_less(a, b);
    };
    if (found_.size() > cap) {
      std::nth_element(found_.begin(), found_.begin() + static_cast<std::ptrdiff_t>(cap), found_.end(), better);
      found_.resize(cap);
    }
    std::sort(found_.begin(), found_.end(), better);
  }

  std::vector<std::vector<T>> w_;
  bool transposed_;
  bool has_best_ = false;
  Found best_;
  std::vector<Found> found_;
};

Biclique to_global(const Biclique& parent, const std::vector<std::size_t>& side_idx,
                   const std::vector<std::size_t>& other_idx, std::uint64_t mask, const Bitset& closure,
                   bool transposed) {
  Bitset side(transposed ? parent.cols.size() : parent.rows.size());
  Bitset other(transposed ? parent.rows.size() : parent.cols.size());
  for (std::size_t t = 0; t < side_idx.size(); ++t) {
    if ((mask >> t) & 1U) side.set(side_idx[t]);
  }
  closure.for_each([&](std::size_t j) { other.set(other_idx[j]); });
  return transposed ? Biclique{std::move(other), std::move(side)} : Biclique{std::move(side), std::move(other)};
}

template <class T>
MaximalPricing price_block(const Biclique& b, const std::vector<std::size_t>& side_idx,
                           const std::vector<std::size_t>& other_idx, std::vector<std::vector<T>> w,
                           const Integer& denominator, const T& threshold, std::size_t cap, bool transposed,
                           const std::vector<std::vector<Integer>>& exact) {
  BlockPricer<T> pricer(std::move(w), transposed);
  MaximalPricing out;
  auto value_of = [&](const T& v) {
    Rational q;
    if constexpr (std::is_same_v<T, Integer>) {
      q = Rational(v, denominator);
    } else {
      q = Rational(Integer(static_cast<long>(v)), denominator);
    }
    q.canonicalize();
    return q;
  };
  if (pricer.run(threshold, cap)) {
    const auto& best = pricer.best();
    out.best = {to_global(b, side_idx, other_idx, best.mask, best.closure, transposed), value_of(best.value)};
  } else {
    // Every entry is <= 0, so the best subrectangle is a single edge.
    std::size_t bi = 0;
    std::size_t bj = 0;
    std::optional<Biclique> best_key;
    for (std::size_t i = 0; i < exact.size(); ++i) {
      for (std::size_t j = 0; j < exact[i].size(); ++j) {
        Bitset c(other_idx.size());
        c.set(j);
        Biclique key = to_global(b, side_idx, other_idx, std::uint64_t{1} << i, c, transposed);
        if (!best_key || exact[i][j] > exact[bi][bj] || (exact[i][j] == exact[bi][bj] && key < *best_key)) {
          bi = i;
          bj = j;
          best_key = std::move(key);
        }
      }
    }
    Rational q(exact[bi][bj], denominator);
    q.canonicalize();
    out.best = {std::move(*best_key), std::move(q)};
  }
  for (const auto& f : pricer.found()) {
    out.candidates.push_back({to_global(b, side_idx, other_idx, f.mask, f.closure, transposed), value_of(f.value)});
  }
  return out;
}

}  // namespace

MaximalPricing price_maximal(const BinaryMatrix& a, const Biclique& b, const EdgeWeights& y,
                             const Rational& threshold, std::size_t cap, std::size_t max_subsets) {
  if (y.size() != a.num_edges()) throw ContractViolation("edge weights do not match the matrix");
  if (!is_valid_biclique(a, b)) throw ContractViolation("price_maximal on an invalid biclique");

  const auto rows = b.rows.indices();
  const auto cols = b.cols.indices();
  const bool transposed = cols.size() < rows.size();
  const auto& side_idx = transposed ? cols : rows;
  const auto& other_idx = transposed ? rows : cols;
  if (side_idx.size() >= 63 || ((std::uint64_t{1} << side_idx.size()) - 1) > max_subsets) {
    throw CapExceeded("pricing enumeration limit exceeded for biclique rows=" + b.rows.to_hex() +
                      " cols=" + b.cols.to_hex());
  }

  // Common denominator of the block's weights.
  Integer denominator = 1;
  auto y_at = [&](std::size_t s, std::size_t o) -> const Rational& {
    const std::size_t i = transposed ? other_idx[o] : side_idx[s];
    const std::size_t j = transposed ? side_idx[s] : other_idx[o];
    return y[*a.edge_index(i, j)];
  };
  for (std::size_t s = 0; s < side_idx.size(); ++s) {
    for (std::size_t o = 0; o < other_idx.size(); ++o) {
      mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), y_at(s, o).get_den_mpz_t());
    }
  }
  std::vector<std::vector<Integer>> exact(side_idx.size(), std::vector<Integer>(other_idx.size()));
  Integer max_abs = 0;
  for (std::size_t s = 0; s < side_idx.size(); ++s) {
    for (std::size_t o = 0; o < other_idx.size(); ++o) {
      const Rational& q = y_at(s, o);
      exact[s][o] = q.get_num() * (denominator / q.get_den());
      if (abs(exact[s][o]) > max_abs) max_abs = abs(exact[s][o]);
    }
  }
  Rational scaled_threshold = threshold * Rational(denominator);
  Integer threshold_int;
  mpz_fdiv_q(threshold_int.get_mpz_t(), scaled_threshold.get_num_mpz_t(), scaled_threshold.get_den_mpz_t());

  const Integer bound = max_abs * static_cast<unsigned long>(side_idx.size() * other_idx.size());
  const Integer limit = Integer(std::numeric_limits<long>::max() / 4);
  if (bound < limit && abs(threshold_int) < limit) {
    std::vector<std::vector<long>> w(side_idx.size(), std::vector<long>(other_idx.size()));
    for (std::size_t s = 0; s < side_idx.size(); ++s) {
      for (std::size_t o = 0; o < other_idx.size(); ++o) w[s][o] = exact[s][o].get_si();
    }
    return price_block<long>(b, side_idx, other_idx, std::move(w), denominator, threshold_int.get_si(), cap,
                             transposed, exact);
  }
  return price_block<Integer>(b, side_idx, other_idx, exact, denominator, threshold_int, cap, transposed, exact);
}

PricingResult price_all(const BinaryMatrix& a, const std::vector<Biclique>& maximals, const EdgeWeights& y,
                        const PricingOptions& options) {
  if (maximals.empty()) throw ContractViolation("price_all needs at least one maximal biclique");
  std::vector<MaximalPricing> results(maximals.size());
  std::vector<std::exception_ptr> errors(maximals.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < maximals.size(); t = next++) {
      try {
        results[t] = price_maximal(a, maximals[t], y, options.threshold, options.per_biclique_cap, options.max_subsets);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(maximals.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  PricingResult out;
  out.alpha = results.front().best.value;
  std::unordered_set<Biclique, BicliqueHash> seen;
  for (std::size_t t = 0; t < results.size(); ++t) {
    if (results[t].best.value > out.alpha) {
      out.alpha = results[t].best.value;
      out.alpha_index = t;
    }
    for (auto& c : results[t].candidates) {
      if (seen.insert(c.biclique).second) out.candidates.push_back(std::move(c));
    }
  }
  std::sort(out.candidates.begin(), out.candidates.end(), [](const PricedBiclique& l, const PricedBiclique& r) {
    if (l.value != r.value) return l.value > r.value;
    return l.biclique < r.biclique;
  });
  if (out.candidates.size() > options.global_cap) out.candidates.resize(options.global_cap);
  return out;
}

}  // namespace fbp
