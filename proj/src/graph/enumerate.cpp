#include "fbp/graph/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "fbp/errors.hpp"
#include "fbp/graph/maximal.hpp"

namespace fbp {

namespace {

std::size_t saturating_mul(std::size_t x, std::size_t y) {
  std::size_t out;
  return __builtin_mul_overflow(x, y, &out) ? std::numeric_limits<std::size_t>::max() : out;
}

std::size_t nonempty_subsets(std::size_t n) {
  return n >= 64 ? std::numeric_limits<std::size_t>::max() : (std::size_t{1} << n) - 1;
}

// All nonempty subsets of `members` as bitsets of the given width.
std::vector<Bitset> nonempty_subsets_of(const Bitset& members) {
  const auto idx = members.indices();
  std::vector<Bitset> out;
  out.reserve(nonempty_subsets(idx.size()));
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << idx.size()); ++mask) {
    Bitset b(members.size());
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if ((mask >> t) & 1U) b.set(idx[t]);
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::size_t subbiclique_count_bound(const std::vector<Biclique>& maximals) {
  std::size_t total = 0;
  for (const auto& b : maximals) {
    const std::size_t here = saturating_mul(nonempty_subsets(b.rows.count()), nonempty_subsets(b.cols.count()));
    total = (total > std::numeric_limits<std::size_t>::max() - here) ? std::numeric_limits<std::size_t>::max()
                                                                      : total + here;
  }
  return total;
}

std::vector<Biclique> enumerate_all_bicliques(const BinaryMatrix& a, std::size_t size_cap) {
  const auto maximals = enumerate_maximal(a);
  const std::size_t bound = subbiclique_count_bound(maximals);
  if (bound > size_cap) {
    throw CapExceeded("biclique enumeration bound " + std::to_string(bound) + " exceeds cap " +
                      std::to_string(size_cap));
  }
  std::unordered_set<Biclique, BicliqueHash> seen;
  seen.reserve(bound);
  for (const auto& m : maximals) {
    const auto row_subsets = nonempty_subsets_of(m.rows);
    const auto col_subsets = nonempty_subsets_of(m.cols);
    for (const auto& r : row_subsets) {
      for (const auto& c : col_subsets) seen.insert(Biclique{r, c});
    }
  }
  std::vector<Biclique> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fbp
