#include "fbp/graph/maximal.hpp"

#include <algorithm>
#include <unordered_set>

#include "fbp/errors.hpp"

namespace fbp {

// Every maximal biclique (R, C) has C = intersection of the row neighbourhoods
// N(i), i in R, and R = {i : C subset of N(i)}. So the maximal bicliques are
// in bijection with the nonempty members of the intersection closure of the
// row neighbourhoods. The closure is grown one row at a time: after row i is
// processed it holds every nonempty intersection of neighbourhoods of rows
// 0..i. Output-polynomial: O(|closure| * m) intersections.
std::vector<Biclique> enumerate_maximal(const BinaryMatrix& a) {
  if (a.num_edges() == 0) throw EmptyGraphError("maximal biclique enumeration on a matrix without ones");

  std::vector<Bitset> closure;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (std::size_t i = 0; i < a.num_rows(); ++i) {
    const Bitset& nbr = a.row(i);
    if (nbr.none()) continue;
    const std::size_t before = closure.size();
    auto add = [&](Bitset s) {
      if (s.any() && seen.insert(s).second) closure.push_back(std::move(s));
    };
    for (std::size_t t = 0; t < before; ++t) add(closure[t] & nbr);
    add(nbr);
  }

  std::vector<Biclique> out;
  out.reserve(closure.size());
  for (auto& cols : closure) {
    Bitset rows(a.num_rows());
    for (std::size_t i = 0; i < a.num_rows(); ++i) {
      if (cols.is_subset_of(a.row(i))) rows.set(i);
    }
    out.push_back({std::move(rows), std::move(cols)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Biclique> lift_maximal_kronecker(const std::vector<Biclique>& maximals_of_base, int k) {
  if (k < 1) throw ContractViolation("lift_maximal_kronecker needs k >= 1");
  std::vector<Biclique> current = maximals_of_base;
  for (int step = 1; step < k; ++step) {
    std::unordered_set<Biclique, BicliqueHash> seen;
    std::vector<Biclique> next;
    next.reserve(current.size() * maximals_of_base.size());
    for (const auto& left : current) {
      for (const auto& right : maximals_of_base) {
        Biclique b = kronecker_biclique(left, right);
        if (seen.insert(b).second) next.push_back(std::move(b));
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  current.erase(std::unique(current.begin(), current.end()), current.end());
  return current;
}

std::vector<Biclique> maximal_bicliques_of_power(const BinaryMatrix& base, int k) {
  return lift_maximal_kronecker(enumerate_maximal(base), k);
}

}  // namespace fbp
