#pragma once

#include <stdexcept>
#include <string>

#include "rectcount/bigint.hpp"
#include "rectcount/count_table.hpp"

namespace rectcount {

// The space T_n of tilings of the square by at most n rectangles is a cell
// complex with one open cell per rectangulation; a class with m tiles and s
// singular vertices contributes a cell of dimension m-s-1. The invariants
// below are the Euler characteristic of T_n and the number k_n of
// (n-1)-sphere summands in its wedge decomposition, both exact.

inline int cell_dimension(int m, int s) {
  if (m < 1) throw std::domain_error("cell_dimension: m must be >= 1");
  if (s < 0 || s > m - 1)
    throw std::domain_error("cell_dimension: no cell with s=" +
                            std::to_string(s) + " at m=" + std::to_string(m));
  return m - s - 1;
}

// chi(T_n) = sum_{m=1..n} sum_{s=0..m-1} (-1)^{m-s-1} t_{m,s}
inline BigInt euler_characteristic(int n, const CountTable& table) {
  if (n < 1) throw std::domain_error("euler_characteristic: n must be >= 1");
  BigInt chi(0);
  for (int m = 1; m <= n; ++m)
    for (int s = 0; s < m; ++s) {
      if ((m - s - 1) % 2 == 0)
        chi += t_of_ms(m, s, table);
      else
        chi -= t_of_ms(m, s, table);
    }
  return chi;
}

// k_n = (-1)^{n-1} (chi(T_n) - 1); a wedge of k spheres S^{n-1} has
// chi = 1 + (-1)^{n-1} k, so the count is forced by the Euler characteristic.
inline BigNat wedge_count(int n, const CountTable& table) {
  BigInt k = euler_characteristic(n, table) - 1;
  if (n % 2 == 0) k = -k;
  if (k < 0)
    throw std::logic_error(
        "wedge_count: signed cell sum is not a sphere count at n=" +
        std::to_string(n));
  return k;
}

struct WedgeReport {
  int n;
  BigInt euler;
  BigNat k;
};

inline WedgeReport wedge_report(int n, const CountTable& table) {
  WedgeReport report;
  report.n = n;
  report.euler = euler_characteristic(n, table);
  report.k = wedge_count(n, table);
  return report;
}

}  // namespace rectcount
