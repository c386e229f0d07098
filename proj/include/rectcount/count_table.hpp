#pragma once

#include <atomic>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rectcount/bigint.hpp"
#include "rectcount/combinatorics.hpp"

namespace rectcount {

namespace detail {

// Dense Pascal triangle so the fill's inner loop does lookups instead of
// recomputing binomials. Out-of-range arguments resolve to 0, matching
// binomial().
class PascalTable {
 public:
  explicit PascalTable(long max_n) : rows_(static_cast<size_t>(max_n) + 1) {
    for (long n = 0; n <= max_n; ++n) {
      auto& row = rows_[static_cast<size_t>(n)];
      row.resize(static_cast<size_t>(n) + 1);
      row.front() = 1;
      row.back() = 1;
      for (long k = 1; k < n; ++k) {
        const auto& prev = rows_[static_cast<size_t>(n) - 1];
        row[static_cast<size_t>(k)] = prev[static_cast<size_t>(k) - 1] +
                                      prev[static_cast<size_t>(k)];
      }
    }
  }

  const BigNat& operator()(long n, long k) const {
    if (n < 0 || k < 0 || k > n) return zero_;
    assert(static_cast<size_t>(n) < rows_.size());
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }

 private:
  std::vector<std::vector<BigNat>> rows_;
  BigNat zero_{0};
};

}  // namespace detail

// Memoized table of t_{m,r,s}: the number of combinatorial equivalence
// classes of square tilings with m rectangles, r edges meeting the interior
// of the right side, and s singular vertices (interior points where four
// rectangles meet).
//
// Layer m holds entries for 0 <= r <= m-1, 0 <= s <= m-1. The base family
// t_{m,m-1,0} = 1 (the m stacked horizontal strips); every other entry is
// computed by inclusion-exclusion over a simpler tiling with m_bar < m tiles
// and r_bar right edges, into which c vertical edges of total length
// ell = (m - m_bar) - (r - r_bar) are pushed from the right:
//
//   t_{m,r,s} = sum over (m_bar, r_bar, s_bar, c) of
//       (-1)^{c+1} * C(ell-1, c-1) * C(r_bar+2-ell, c)
//                  * C(ell-c, ds) * C(dm-c-ds+ell-1, ell-1) * t_{m_bar,r_bar,s_bar}
//
// with dm = m-m_bar, ds = s-s_bar, 1 <= m_bar <= m-1, 0 <= r_bar <= m_bar-1,
// 0 <= s_bar <= s, 1 <= c <= ceil((r_bar+1)/2). All binomials use the zero
// convention, so terms with ell <= 0, ell < c, or ds > ell-c vanish on their
// own. Layers only ever read strictly smaller layers, which makes the fill
// order (and any within-layer parallelism) safe.
class CountTable {
 public:
  CountTable() = default;

  int max_m() const { return static_cast<int>(layers_.size()); }

  // Stored value; requires 1 <= m <= max_m(), 0 <= r < m, 0 <= s < m.
  const BigNat& at(int m, int r, int s) const {
    if (m < 1 || m > max_m())
      throw std::out_of_range("CountTable::at: layer " + std::to_string(m) +
                              " not filled (max_m=" + std::to_string(max_m()) +
                              ")");
    if (r < 0 || r >= m || s < 0 || s >= m)
      throw std::out_of_range("CountTable::at: index out of range");
    return layers_[static_cast<size_t>(m) - 1]
                  [static_cast<size_t>(r) * static_cast<size_t>(m) +
                   static_cast<size_t>(s)];
  }

  // Fills layers up to new_max_m. threads > 1 splits the cells of each layer
  // across workers; the result is identical for any thread count because
  // every cell is a pure function of lower layers.
  void extend(int new_max_m, int threads = 1) {
    if (new_max_m < 1)
      throw std::invalid_argument("CountTable::extend: max_m must be >= 1");
    if (new_max_m <= max_m()) return;
    detail::PascalTable pascal(3L * new_max_m + 2);
    for (int m = max_m() + 1; m <= new_max_m; ++m) {
      std::vector<BigNat> layer(static_cast<size_t>(m) *
                                static_cast<size_t>(m));
      auto compute_cell = [&](int cell) {
        const int r = cell / m;
        const int s = cell % m;
        layer[static_cast<size_t>(cell)] = compute_entry(m, r, s, pascal);
      };
      const int cells = m * m;
      if (threads <= 1 || cells < 4) {
        for (int cell = 0; cell < cells; ++cell) compute_cell(cell);
      } else {
        std::atomic<int> next{0};
        auto worker = [&] {
          for (int cell = next.fetch_add(1); cell < cells;
               cell = next.fetch_add(1))
            compute_cell(cell);
        };
        std::vector<std::thread> pool;
        const int nworkers = std::min(threads, cells);
        pool.reserve(static_cast<size_t>(nworkers));
        for (int i = 0; i < nworkers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
      layers_.push_back(std::move(layer));
    }
  }

  // ----- cache file (line oriented text) -----
  //
  //   rectcount-table v1
  //   m r s t
  //   ...
  //
  // one record per entry, t in decimal, complete layers only.

  static constexpr const char* kCacheMagic = "rectcount-table v1";

  void save(std::ostream& out) const {
    out << kCacheMagic << '\n';
    for (int m = 1; m <= max_m(); ++m)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
          out << m << ' ' << r << ' ' << s << ' ' << to_decimal(at(m, r, s))
              << '\n';
  }

  static CountTable load(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header != kCacheMagic)
      throw std::runtime_error("cache: unknown version or not a cache file");
    CountTable table;
    std::string line;
    int expect_m = 1, expect_r = 0, expect_s = 0;
    std::vector<BigNat> layer;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      int m, r, s;
      std::string value;
      if (!(ls >> m >> r >> s >> value))
        throw std::runtime_error("cache: malformed record: " + line);
      if (m != expect_m || r != expect_r || s != expect_s)
        throw std::runtime_error("cache: records out of order or missing");
      layer.push_back(from_decimal(value));
      if (++expect_s == expect_m) {
        expect_s = 0;
        if (++expect_r == expect_m) {
          table.layers_.push_back(std::move(layer));
          layer.clear();
          expect_r = 0;
          ++expect_m;
        }
      }
    }
    if (expect_r != 0 || expect_s != 0)
      throw std::runtime_error("cache: truncated layer");
    return table;
  }

 private:
  BigInt compute_entry(int m, int r, int s,
                       const detail::PascalTable& pascal) const {
    if (r == m - 1 && s == 0) return BigInt(1);
    BigInt acc(0);
    BigInt term;
    for (int m_bar = 1; m_bar <= m - 1; ++m_bar) {
      const int dm = m - m_bar;
      const auto& lower = layers_[static_cast<size_t>(m_bar) - 1];
      for (int r_bar = 0; r_bar <= m_bar - 1; ++r_bar) {
        const int ell = dm - (r - r_bar);
        if (ell <= 0) continue;  // every binomial C(ell-1, c-1) vanishes
        const int c_max = (r_bar + 2) / 2;  // ceil((r_bar+1)/2)
        const int s_bar_max = std::min(s, m_bar - 1);
        for (int s_bar = 0; s_bar <= s_bar_max; ++s_bar) {
          const BigNat& t_bar =
              lower[static_cast<size_t>(r_bar) * static_cast<size_t>(m_bar) +
                    static_cast<size_t>(s_bar)];
          if (t_bar == 0) continue;
          const int ds = s - s_bar;
          for (int c = 1; c <= c_max; ++c) {
            const BigNat& f1 = pascal(ell - 1, c - 1);
            if (f1 == 0) continue;
            const BigNat& f2 = pascal(r_bar + 2 - ell, c);
            if (f2 == 0) continue;
            const BigNat& f3 = pascal(ell - c, ds);
            if (f3 == 0) continue;
            const BigNat& f4 = pascal(dm - c - ds + ell - 1, ell - 1);
            if (f4 == 0) continue;
            term = f1;
            term *= f2;
            term *= f3;
            term *= f4;
            term *= t_bar;
            if (c % 2 == 1)
              acc += term;
            else
              acc -= term;
          }
        }
      }
    }
    if (acc < 0)
      throw std::logic_error("recursion produced a negative count at (" +
                             std::to_string(m) + "," + std::to_string(r) +
                             "," + std::to_string(s) + ")");
    return acc;
  }

  std::vector<std::vector<BigNat>> layers_;
};

inline CountTable fill_table(int max_m, int threads = 1) {
  CountTable table;
  table.extend(max_m, threads);
  return table;
}

// t_{m,r,s} from a filled table. Rejects arguments outside the domain of the
// statistic; s beyond m-1 is a valid query and is identically 0 (a class
// with m tiles and s singular vertices spans a cell of dimension m-s-1 >= 0).
inline const BigNat& t_of_mrs(int m, int r, int s, const CountTable& table) {
  static const BigNat zero(0);
  if (m < 1) throw std::domain_error("t_of_mrs: m must be >= 1");
  if (r < 0 || r >= m) throw std::domain_error("t_of_mrs: need 0 <= r <= m-1");
  if (s < 0) throw std::domain_error("t_of_mrs: s must be >= 0");
  if (s >= m) return zero;
  return table.at(m, r, s);
}

// t_{m,s} = sum_r t_{m,r,s}
inline BigNat t_of_ms(int m, int s, const CountTable& table) {
  if (m < 1) throw std::domain_error("t_of_ms: m must be >= 1");
  if (s < 0) throw std::domain_error("t_of_ms: s must be >= 0");
  BigNat sum(0);
  if (s >= m) return sum;
  for (int r = 0; r < m; ++r) sum += table.at(m, r, s);
  return sum;
}

// t_m = sum_s t_{m,s}
inline BigNat t_total(int m, const CountTable& table) {
  if (m < 1) throw std::domain_error("t_total: m must be >= 1");
  BigNat sum(0);
  for (int s = 0; s < m; ++s) sum += t_of_ms(m, s, table);
  return sum;
}

// Parity of t_n against the conjectured period-8 pattern
// (t_n odd iff n = 8k+1 or n = 8k+4).
struct ParityReport {
  struct Row {
    int n;
    int parity;          // t_n mod 2
    bool expected_odd;   // n % 8 == 1 || n % 8 == 4
    bool agrees;
  };
  std::vector<Row> rows;
  bool all_agree = true;
};

inline ParityReport parity_report(int max_m, const CountTable& table) {
  ParityReport report;
  report.rows.reserve(static_cast<size_t>(max_m));
  for (int n = 1; n <= max_m; ++n) {
    const int parity = mpz_odd_p(t_total(n, table).get_mpz_t()) ? 1 : 0;
    const bool expected_odd = (n % 8 == 1) || (n % 8 == 4);
    const bool agrees = (parity == 1) == expected_odd;
    report.rows.push_back({n, parity, expected_odd, agrees});
    report.all_agree = report.all_agree && agrees;
  }
  return report;
}

}  // namespace rectcount
