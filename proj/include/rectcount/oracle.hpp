#pragma once

#include <atomic>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "rectcount/bigint.hpp"
#include "rectcount/count_table.hpp"
#include "rectcount/grid_tiling.hpp"
#include "rectcount/skeleton.hpp"
#include "rectcount/topology.hpp"

namespace rectcount {

// Brute-force ground truth, independent of the counting recursion: realize
// every rectangulation with m tiles on some integer grid, canonicalize, and
// census the equivalence classes. A class with m tiles has at most m-1
// walls, so every class is realized on a grid with p, q <= m; sweeping all
// such grids and deduplicating by canonical encoding is therefore complete.
// Exhaustive search only: keep m small.

inline constexpr int kDefaultOracleBound = 6;
inline constexpr int kMaxOracleBound = 7;  // 5014 classes, minutes of runtime

using ClassMap = std::map<SkeletonEncoding, ClassStats>;
using Census = std::map<std::tuple<int, int, int>, BigNat>;

namespace detail {

inline bool is_d8_symmetric(const GridTiling& t, const SkeletonEncoding& enc) {
  for (const GridTiling& image : d8_images(t))
    if (canonical_encoding(image) != enc) return false;
  return true;
}

inline void collect_classes(int p, int q, int m, ClassMap& classes) {
  enumerate_grid_tilings(p, q, m, [&](const GridTiling& t) {
    SkeletonEncoding enc = canonical_encoding(t);
    auto [it, inserted] = classes.try_emplace(std::move(enc));
    if (inserted) {
      it->second = class_stats(t);
      it->second.symmetric = is_d8_symmetric(t, it->first);
    }
  });
}

}  // namespace detail

inline ClassMap enumerate_rectangulations(int m,
                                          int bound = kDefaultOracleBound,
                                          int threads = 1) {
  if (bound > kMaxOracleBound)
    throw std::invalid_argument("oracle: bound above hard limit " +
                                std::to_string(kMaxOracleBound));
  if (m < 1 || m > bound)
    throw std::invalid_argument("oracle: m=" + std::to_string(m) +
                                " outside small-scale bound " +
                                std::to_string(bound));
  if (threads <= 1) {
    ClassMap classes;
    for (int p = 1; p <= m; ++p)
      for (int q = 1; q <= m; ++q) detail::collect_classes(p, q, m, classes);
    return classes;
  }
  // one (p,q) task per worker grab; per-worker maps merged at the end
  std::vector<std::pair<int, int>> grids;
  for (int p = 1; p <= m; ++p)
    for (int q = 1; q <= m; ++q) grids.emplace_back(p, q);
  std::atomic<size_t> next{0};
  std::vector<ClassMap> partial(static_cast<size_t>(threads));
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (size_t i = next.fetch_add(1); i < grids.size();
           i = next.fetch_add(1))
        detail::collect_classes(grids[i].first, grids[i].second, m,
                                partial[static_cast<size_t>(w)]);
    });
  for (auto& t : pool) t.join();
  ClassMap classes = std::move(partial[0]);
  for (size_t w = 1; w < partial.size(); ++w)
    classes.merge(partial[w]);  // duplicates carry identical stats
  return classes;
}

inline Census census(const ClassMap& classes) {
  Census counts;
  for (const auto& [enc, st] : classes) counts[{st.m, st.r, st.s}] += 1;
  return counts;
}

inline BigNat d8_symmetric_count(int n, int bound = kDefaultOracleBound,
                                 int threads = 1) {
  BigNat count(0);
  for (const auto& [enc, st] : enumerate_rectangulations(n, bound, threads))
    if (st.symmetric) count += 1;
  return count;
}

// One line per class, `m r s k e symmetric encoding-hex`, sorted by
// encoding; stable across implementations for diffing.
inline void dump_classes(std::ostream& out, const ClassMap& classes) {
  for (const auto& [enc, st] : classes)
    out << st.m << ' ' << st.r << ' ' << st.s << ' ' << st.k << ' ' << st.e
        << ' ' << (st.symmetric ? 1 : 0) << ' ' << to_hex(enc) << '\n';
}

struct VerificationReport {
  int max_m = 0;
  unsigned long long classes_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Compares the brute-force census against the recursion for every (m, r, s)
// with m <= max_m, checks the structural invariants on every class, and
// cross-checks the Euler characteristic against the alternating cell census.
// Mismatches are collected, not thrown.
inline VerificationReport cross_check(int max_m, const CountTable& table,
                                      int bound = kDefaultOracleBound,
                                      int threads = 1) {
  VerificationReport report;
  report.max_m = max_m;
  BigInt chi_census(0);
  for (int m = 1; m <= max_m; ++m) {
    const ClassMap classes = enumerate_rectangulations(m, bound, threads);
    for (const auto& [enc, st] : classes) {
      ++report.classes_checked;
      std::ostringstream why;
      if (st.k != 2 * st.m + 2 - st.s)
        why << "k=" << st.k << " != 2m+2-s=" << 2 * st.m + 2 - st.s;
      else if (st.k - st.e + st.m != 1)
        why << "k-e+m=" << st.k - st.e + st.m << " != 1";
      else if (st.r < 0 || st.r > st.m - 1 || st.s < 0 || st.s > st.m - 1)
        why << "(r,s)=(" << st.r << ',' << st.s << ") out of range";
      if (!why.str().empty()) {
        report.mismatches.push_back("class invariant (m=" +
                                    std::to_string(st.m) + "): " + why.str());
      }
      if ((st.m - st.s - 1) % 2 == 0)
        chi_census += 1;
      else
        chi_census -= 1;
    }
    const Census counts = census(classes);
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) {
        auto it = counts.find({m, r, s});
        const BigNat& observed =
            (it != counts.end()) ? it->second : BigNat(0);
        const BigNat& expected = t_of_mrs(m, r, s, table);
        if (observed != expected)
          report.mismatches.push_back(
              "t_{" + std::to_string(m) + "," + std::to_string(r) + "," +
              std::to_string(s) + "}: census " + to_decimal(observed) +
              " vs recursion " + to_decimal(expected));
      }
    const BigInt chi_table = euler_characteristic(m, table);
    if (chi_census != chi_table)
      report.mismatches.push_back("euler(" + std::to_string(m) +
                                  "): census " + to_decimal(chi_census) +
                                  " vs table " + to_decimal(chi_table));
  }
  return report;
}

}  // namespace rectcount
