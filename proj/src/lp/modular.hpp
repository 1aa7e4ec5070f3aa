#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace fbp::lp::detail {

// Square matrix given by columns: column j has entry sign[j] (+1 or -1) on
// each row listed in rows[j] and 0 elsewhere.
struct SignedColumns {
  std::size_t size = 0;
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<int> sign;
};

// Solutions over a common denominator: x = x_num / x_den, y = y_num / y_den.
struct BasisSolution {
  std::vector<mpz_class> x_num;
  mpz_class x_den;
  std::vector<mpz_class> y_num;
  mpz_class y_den;
};

// Exact x and y with B x = b and B^T y = c, by an LU factorisation modulo a
// word-size prime and p-adic lifting. The results are verified before they
// are returned. nullopt if B is singular modulo the prime (or singular).
std::optional<BasisSolution> solve_basis(const SignedColumns& basis, const std::vector<std::int64_t>& b,
                                         const std::vector<std::int64_t>& c);

}  // namespace fbp::lp::detail
