#pragma once

#include <gmpxx.h>

#include <string>

namespace rectcount {

// Exact arbitrary-precision integers. Counts routinely exceed 64 bits
// (the 28-tile total is ~7.07e24), so all arithmetic on them goes through
// GMP. BigNat is a BigInt that is nonnegative by convention; call sites
// that must guarantee the sign check it explicitly.
using BigInt = mpz_class;
using BigNat = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline BigInt from_decimal(const std::string& s) {
  return BigInt(s, 10);
}

}  // namespace rectcount
