#pragma once

#include <stdexcept>

#include "rectcount/bigint.hpp"

namespace rectcount {

// Binomial coefficient with the zero convention: C(n,k) = 0 whenever
// k < 0, n < 0 or k > n. The summation of the counting recursion relies on
// out-of-range binomials vanishing (e.g. C(-1,0) = 0), so the convention is
// part of the contract, not an implementation detail.
inline BigNat binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return BigNat(0);
  BigNat result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

// Number of subsets of {1,...,r_bar+1} with exactly c maximal runs of
// consecutive elements and total size ell: C(ell-1, c-1) * C(r_bar+2-ell, c).
inline BigNat component_subset_count(long r_bar, long ell, long c) {
  return binomial(ell - 1, c - 1) * binomial(r_bar + 2 - ell, c);
}

// Number of nonnegative integer solutions of x_1 + ... + x_n = m,
// i.e. C(m+n-1, n-1). Requires n >= 1.
inline BigNat composition_count(long m, long n) {
  if (n < 1) throw std::invalid_argument("composition_count: n must be >= 1");
  return binomial(m + n - 1, n - 1);
}

}  // namespace rectcount
