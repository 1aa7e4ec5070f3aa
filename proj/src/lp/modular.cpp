#include "modular.hpp"

#include <cmath>

namespace fbp::lp::detail {

namespace {

constexpr std::uint64_t kPrime = 2147483647;  // 2^31 - 1

// v mod p for v < 2^63.
inline std::uint64_t reduce(std::uint64_t v) {
  v = (v & kPrime) + (v >> 31);
  v = (v & kPrime) + (v >> 31);
  return v >= kPrime ? v - kPrime : v;
}

std::uint64_t inverse(std::uint64_t a) {
  std::uint64_t result = 1;
  std::uint64_t e = kPrime - 2;
  while (e != 0) {
    if (e & 1) result = reduce(result * a);
    a = reduce(a * a);
    e >>= 1;
  }
  return result;
}

std::uint32_t residue(std::int64_t v) {
  const auto p = static_cast<std::int64_t>(kPrime);
  v %= p;
  return static_cast<std::uint32_t>(v < 0 ? v + p : v);
}

// P B = L U modulo the prime, dense and row-major. L has a unit diagonal and
// shares storage with U.
class ModularLu {
 public:
  bool factor(const SignedColumns& a) {
    n_ = a.size;
    lu_.assign(n_ * n_, 0);
    for (std::size_t j = 0; j < n_; ++j) {
      const std::uint32_t v = a.sign[j] > 0 ? 1 : static_cast<std::uint32_t>(kPrime - 1);
      for (auto r : a.rows[j]) lu_[r * n_ + j] = v;
    }
    perm_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
    inv_diag_.assign(n_, 0);
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t piv = k;
      while (piv < n_ && lu_[piv * n_ + k] == 0) ++piv;
      if (piv == n_) return false;
      if (piv != k) {
        std::swap_ranges(&lu_[piv * n_], &lu_[piv * n_] + n_, &lu_[k * n_]);
        std::swap(perm_[piv], perm_[k]);
      }
      const std::uint32_t* rowk = &lu_[k * n_];
      inv_diag_[k] = static_cast<std::uint32_t>(inverse(rowk[k]));
      nz.clear();
      for (std::size_t j = k + 1; j < n_; ++j) {
        if (rowk[j] != 0) nz.push_back(j);
      }
      const bool sparse = nz.size() * 4 < n_ - k;
      for (std::size_t i = k + 1; i < n_; ++i) {
        std::uint32_t* rowi = &lu_[i * n_];
        if (rowi[k] == 0) continue;
        const std::uint64_t f = reduce(std::uint64_t{rowi[k]} * inv_diag_[k]);
        rowi[k] = static_cast<std::uint32_t>(f);
        const std::uint64_t neg = kPrime - f;
        if (sparse) {
          for (auto j : nz) rowi[j] = static_cast<std::uint32_t>(reduce(rowi[j] + neg * rowk[j]));
        } else {
          for (std::size_t j = k + 1; j < n_; ++j) {
            rowi[j] = static_cast<std::uint32_t>(reduce(rowi[j] + neg * rowk[j]));
          }
        }
      }
    }
    return true;
  }

  // x with B x = r.
  void solve(const std::vector<std::uint32_t>& r, std::vector<std::uint32_t>& x) const {
    std::vector<std::uint64_t> z(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      const std::uint32_t* row = &lu_[k * n_];
      std::uint64_t acc = r[perm_[k]];
      for (std::size_t j = 0; j < k; ++j) acc = reduce(acc + (kPrime - row[j]) * z[j]);
      z[k] = acc;
    }
    x.assign(n_, 0);
    for (std::size_t k = n_; k-- > 0;) {
      const std::uint32_t* row = &lu_[k * n_];
      std::uint64_t acc = z[k];
      for (std::size_t j = k + 1; j < n_; ++j) acc = reduce(acc + (kPrime - row[j]) * x[j]);
      x[k] = static_cast<std::uint32_t>(reduce(acc * inv_diag_[k]));
    }
  }

  // y with B^T y = c: U^T w = c, L^T v = w, y = P^T v.
  void solve_transposed(const std::vector<std::uint32_t>& c, std::vector<std::uint32_t>& y) const {
    std::vector<std::uint64_t> acc(c.begin(), c.end());
    for (std::size_t k = 0; k < n_; ++k) {
      const std::uint32_t* row = &lu_[k * n_];
      const std::uint64_t w = reduce(acc[k] * inv_diag_[k]);
      acc[k] = w;
      const std::uint64_t neg = kPrime - w;
      for (std::size_t j = k + 1; j < n_; ++j) {
        if (row[j] != 0) acc[j] = reduce(acc[j] + neg * row[j]);
      }
    }
    for (std::size_t k = n_; k-- > 0;) {
      const std::uint32_t* row = &lu_[k * n_];
      const std::uint64_t neg = kPrime - acc[k];
      for (std::size_t j = 0; j < k; ++j) {
        if (row[j] != 0) acc[j] = reduce(acc[j] + neg * row[j]);
      }
    }
    y.assign(n_, 0);
    for (std::size_t k = 0; k < n_; ++k) y[perm_[k]] = static_cast<std::uint32_t>(acc[k]);
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> lu_;
  std::vector<std::uint32_t> inv_diag_;
  std::vector<std::size_t> perm_;
};

// (A d) for A = B, or B^T when transposed.
void multiply(const SignedColumns& a, bool transposed, const std::vector<std::uint32_t>& d,
              std::vector<std::int64_t>& out) {
  out.assign(a.size, 0);
  for (std::size_t j = 0; j < a.size; ++j) {
    if (transposed) {
      std::int64_t s = 0;
      for (auto r : a.rows[j]) s += d[r];
      out[j] = a.sign[j] * s;
    } else {
      const std::int64_t v = a.sign[j] * static_cast<std::int64_t>(d[j]);
      for (auto r : a.rows[j]) out[r] += v;
    }
  }
}

// n / q = a (mod m) with |n| <= bound and 0 < q <= bound, by the half
// extended Euclidean algorithm.
bool reconstruct(const mpz_class& a, const mpz_class& m, const mpz_class& bound, mpz_class& n, mpz_class& q) {
  mpz_class r0 = m, r1 = a, t0 = 0, t1 = 1, quot, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(quot.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (sgn(t1) == 0 || abs(t1) > bound) return false;
  n = sgn(t1) < 0 ? mpz_class(-r1) : r1;
  q = abs(t1);
  return true;
}

// Symmetric residue of v mod m.
void symmetric(mpz_class& v, const mpz_class& m, const mpz_class& half) {
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (v > half) v -= m;
}

bool verify(const SignedColumns& a, bool transposed, const std::vector<std::int64_t>& rhs,
            const std::vector<mpz_class>& num, const mpz_class& den) {
  std::vector<mpz_class> lhs(a.size, mpz_class(0));
  for (std::size_t j = 0; j < a.size; ++j) {
    if (transposed) {
      for (auto r : a.rows[j]) lhs[j] += num[r];
      if (a.sign[j] < 0) lhs[j] = -lhs[j];
    } else {
      for (auto r : a.rows[j]) {
        if (a.sign[j] > 0) {
          lhs[r] += num[j];
        } else {
          lhs[r] -= num[j];
        }
      }
    }
  }
  mpz_class want;
  for (std::size_t i = 0; i < a.size; ++i) {
    want = den * static_cast<long>(rhs[i]);
    if (lhs[i] != want) return false;
  }
  return true;
}

// Dixon lifting: accumulates the p-adic expansion of the solution and tries
// a rational reconstruction whenever the number of digits doubles, up to
// the Hadamard bound.
bool lift(const ModularLu& lu, const SignedColumns& a, bool transposed, const std::vector<std::int64_t>& rhs,
          std::vector<mpz_class>& num, mpz_class& den) {
  const std::size_t n = a.size;
  double det_bits = 0;
  for (const auto& col : a.rows) det_bits += 0.5 * std::log2(static_cast<double>(col.size()));
  double rhs_norm = 0;
  for (auto v : rhs) rhs_norm += static_cast<double>(v) * static_cast<double>(v);
  const double bits = 2 * (det_bits + 0.5 * std::log2(rhs_norm + 1) + 2) + 64;
  const auto max_steps = static_cast<std::size_t>(bits / 31) + 2;

  std::vector<std::int64_t> r = rhs;
  std::vector<std::uint32_t> rp(n);
  std::vector<std::uint32_t> digit;
  std::vector<std::int64_t> ad;
  std::vector<mpz_class> acc(n, mpz_class(0));
  mpz_class pk = 1;
  std::size_t next_try = 4;
  mpz_class bound, half, v, nn, q;
  for (std::size_t step = 1; step <= max_steps; ++step) {
    for (std::size_t i = 0; i < n; ++i) rp[i] = residue(r[i]);
    if (transposed) {
      lu.solve_transposed(rp, digit);
    } else {
      lu.solve(rp, digit);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (digit[i] != 0) mpz_addmul_ui(acc[i].get_mpz_t(), pk.get_mpz_t(), digit[i]);
    }
    pk *= static_cast<unsigned long>(kPrime);
    multiply(a, transposed, digit, ad);
    for (std::size_t i = 0; i < n; ++i) r[i] = (r[i] - ad[i]) / static_cast<std::int64_t>(kPrime);
    if (step != next_try && step != max_steps) continue;
    next_try *= 2;

    half = pk / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    den = 1;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      v = acc[i] * den;
      symmetric(v, pk, half);
      if (abs(v) <= bound) continue;
      if (sgn(v) < 0) v += pk;
      if (!reconstruct(v, pk, bound, nn, q)) {
        ok = false;
        break;
      }
      den *= q;
      if (den > bound) ok = false;
    }
    if (!ok) continue;
    num.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      num[i] = acc[i] * den;
      symmetric(num[i], pk, half);
    }
    if (verify(a, transposed, rhs, num, den)) return true;
  }
  return false;
}

}  // namespace

std::optional<BasisSolution> solve_basis(const SignedColumns& basis, const std::vector<std::int64_t>& b,
                                         const std::vector<std::int64_t>& c) {
  ModularLu lu;
  if (!lu.factor(basis)) return std::nullopt;
  BasisSolution out;
  if (!lift(lu, basis, false, b, out.x_num, out.x_den)) return std::nullopt;
  if (!lift(lu, basis, true, c, out.y_num, out.y_den)) return std::nullopt;
  return out;
}

}  // namespace fbp::lp::detail
