#pragma once

#include <cstddef>
#include <vector>

#include "fbp/graph/biclique.hpp"

namespace fbp {

// Upper bound on the number of bicliques produced by expanding every maximal
// biclique into its nonempty subbicliques: sum of (2^|R|-1)(2^|C|-1).
// Saturates at SIZE_MAX.
std::size_t subbiclique_count_bound(const std::vector<Biclique>& maximals);

// Every valid nonempty biclique of a, each exactly once, canonically sorted.
// Throws CapExceeded when subbiclique_count_bound exceeds size_cap and
// EmptyGraphError when a has no ones.
std::vector<Biclique> enumerate_all_bicliques(const BinaryMatrix& a, std::size_t size_cap);

}  // namespace fbp
