#pragma once

#include <cstddef>
#include <vector>

#include "fbp/graph/biclique.hpp"

namespace fbp {

// Inclusion-wise maximal bicliques in canonical order. Throws EmptyGraphError
// on a matrix without ones.
std::vector<Biclique> enumerate_maximal(const BinaryMatrix& a);

// All k-fold Kronecker products of the maximal bicliques of a base matrix
// (given by its dimensions), deduplicated and canonically sorted.
std::vector<Biclique> lift_maximal_kronecker(const std::vector<Biclique>& maximals_of_base, int k);

// Maximal bicliques of base^(x)k via lifting.
std::vector<Biclique> maximal_bicliques_of_power(const BinaryMatrix& base, int k);

}  // namespace fbp
