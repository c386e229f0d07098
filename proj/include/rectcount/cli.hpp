#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "rectcount/count_table.hpp"
#include "rectcount/oracle.hpp"
#include "rectcount/topology.hpp"

// Command-line front end. Everything is emitted in exact decimal; JSON
// carries counts as strings so downstream 64-bit parsers cannot truncate
// them. Exit codes: 0 success/verified, 1 usage error, 2 verification
// mismatch.

namespace rectcount::cli {

namespace detail {

using ordered_json = nlohmann::ordered_json;

struct Options {
  int max_m = 0;
  int m = 0, r = 0, s = 0;  // trs
  std::string format = "csv";
  std::string cache;
  bool sparse = false;
  int threads = 1;
  bool force = false;
};

// Loads the memo table from the cache when possible, extends it to the
// requested size, and writes the extension back so later runs reuse it.
inline CountTable load_or_fill(int needed_m, const Options& opt) {
  CountTable table;
  if (!opt.cache.empty()) {
    std::ifstream in(opt.cache);
    if (in) {
      try {
        table = CountTable::load(in);
      } catch (const std::exception& e) {
        std::cerr << "warning: ignoring cache " << opt.cache << ": "
                  << e.what() << '\n';
        table = CountTable();
      }
    }
  }
  if (table.max_m() < needed_m) {
    table.extend(needed_m, std::max(1, opt.threads));
    if (!opt.cache.empty()) {
      std::ofstream out(opt.cache, std::ios::trunc);
      if (out)
        table.save(out);
      else
        std::cerr << "warning: cannot write cache " << opt.cache << '\n';
    }
  }
  return table;
}

inline void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

inline int cmd_table(const Options& opt) {
  const CountTable table = load_or_fill(opt.max_m, opt);
  if (opt.format == "json") {
    ordered_json rows = ordered_json::array();
    for (int m = 1; m <= opt.max_m; ++m)
      for (int s = 0; s < m; ++s) {
        const BigNat t = t_of_ms(m, s, table);
        if (opt.sparse && t == 0) continue;
        rows.push_back({{"m", m}, {"s", s}, {"t", to_decimal(t)}});
      }
    emit(rows);
  } else {
    std::cout << "m,s,t\n";
    for (int m = 1; m <= opt.max_m; ++m)
      for (int s = 0; s < m; ++s) {
        const BigNat t = t_of_ms(m, s, table);
        if (opt.sparse && t == 0) continue;
        std::cout << m << ',' << s << ',' << to_decimal(t) << '\n';
      }
  }
  return 0;
}

inline int cmd_sequence(const Options& opt) {
  const CountTable table = load_or_fill(opt.max_m, opt);
  if (opt.format == "json") {
    ordered_json rows = ordered_json::array();
    for (int m = 1; m <= opt.max_m; ++m)
      rows.push_back({{"m", m}, {"t", to_decimal(t_total(m, table))}});
    emit(rows);
  } else {
    std::cout << "m,t\n";
    for (int m = 1; m <= opt.max_m; ++m)
      std::cout << m << ',' << to_decimal(t_total(m, table)) << '\n';
  }
  return 0;
}

inline int cmd_kn(const Options& opt) {
  const CountTable table = load_or_fill(opt.max_m, opt);
  if (opt.format == "json") {
    ordered_json rows = ordered_json::array();
    for (int n = 1; n <= opt.max_m; ++n) {
      const WedgeReport rep = wedge_report(n, table);
      rows.push_back({{"n", n},
                      {"euler", to_decimal(rep.euler)},
                      {"k", to_decimal(rep.k)}});
    }
    emit(rows);
  } else {
    std::cout << "n,euler,k\n";
    for (int n = 1; n <= opt.max_m; ++n) {
      const WedgeReport rep = wedge_report(n, table);
      std::cout << n << ',' << to_decimal(rep.euler) << ','
                << to_decimal(rep.k) << '\n';
    }
  }
  return 0;
}

inline int cmd_parity(const Options& opt) {
  const CountTable table = load_or_fill(opt.max_m, opt);
  const ParityReport report = parity_report(opt.max_m, table);
  if (opt.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows)
      rows.push_back({{"n", row.n},
                      {"t_mod2", row.parity},
                      {"conjectured_odd", row.expected_odd},
                      {"agree", row.agrees}});
    emit({{"rows", rows}, {"all_agree", report.all_agree}});
  } else {
    std::cout << "n,t_mod2,conjectured_odd,agree\n";
    for (const auto& row : report.rows)
      std::cout << row.n << ',' << row.parity << ','
                << (row.expected_odd ? 1 : 0) << ',' << (row.agrees ? 1 : 0)
                << '\n';
  }
  if (!report.all_agree) {
    std::cerr << "parity: computed t_n parities deviate from the conjectured "
                 "period-8 pattern\n";
    return 2;
  }
  return 0;
}

inline int check_oracle_bound(int n, const Options& opt) {
  const int bound = opt.force ? kMaxOracleBound : kDefaultOracleBound;
  if (n < 1 || n > bound) {
    std::cerr << "error: max " << n << " outside oracle bound " << bound
              << (opt.force ? "" : " (pass --force to allow up to 7)") << '\n';
    return 1;
  }
  return 0;
}

inline int cmd_verify(const Options& opt) {
  if (int rc = check_oracle_bound(opt.max_m, opt)) return rc;
  const CountTable table = load_or_fill(opt.max_m, opt);
  const int bound = opt.force ? kMaxOracleBound : kDefaultOracleBound;
  const VerificationReport report =
      cross_check(opt.max_m, table, bound, std::max(1, opt.threads));
  std::cout << "verify: m <= " << report.max_m << ", "
            << report.classes_checked << " classes checked, "
            << report.mismatches.size() << " mismatches\n";
  for (const std::string& line : report.mismatches)
    std::cout << "mismatch: " << line << '\n';
  return report.ok() ? 0 : 2;
}

inline int cmd_symmetric(const Options& opt) {
  if (int rc = check_oracle_bound(opt.max_m, opt)) return rc;
  const CountTable table = load_or_fill(opt.max_m, opt);
  const int bound = opt.force ? kMaxOracleBound : kDefaultOracleBound;
  std::vector<BigNat> s_n(static_cast<size_t>(opt.max_m) + 1);
  std::vector<int> t_mod2(static_cast<size_t>(opt.max_m) + 1);
  for (int n = 1; n <= opt.max_m; ++n) {
    s_n[static_cast<size_t>(n)] =
        d8_symmetric_count(n, bound, std::max(1, opt.threads));
    t_mod2[static_cast<size_t>(n)] =
        mpz_odd_p(t_total(n, table).get_mpz_t()) ? 1 : 0;
  }

  std::vector<std::string> violations;
  for (int n = 1; n <= opt.max_m; ++n) {
    const BigNat& sn = s_n[static_cast<size_t>(n)];
    const int s_mod2 = mpz_odd_p(sn.get_mpz_t()) ? 1 : 0;
    if (s_mod2 != t_mod2[static_cast<size_t>(n)])
      violations.push_back("s_" + std::to_string(n) + " parity " +
                           std::to_string(s_mod2) + " != t_" +
                           std::to_string(n) + " parity " +
                           std::to_string(t_mod2[static_cast<size_t>(n)]));
    if (n % 4 != 0 && n % 4 != 1 && sn != 0)
      violations.push_back("s_" + std::to_string(n) + " = " + to_decimal(sn) +
                           " but n is neither 4k nor 4k+1");
    if (n % 4 == 1 && n + 3 <= opt.max_m &&
        sn != s_n[static_cast<size_t>(n) + 3])
      violations.push_back("s_" + std::to_string(n) +
                           " != s_" + std::to_string(n + 3));
  }

  if (opt.format == "json") {
    detail::ordered_json rows = detail::ordered_json::array();
    for (int n = 1; n <= opt.max_m; ++n) {
      const BigNat& sn = s_n[static_cast<size_t>(n)];
      rows.push_back({{"n", n},
                      {"s_n", to_decimal(sn)},
                      {"t_mod2", t_mod2[static_cast<size_t>(n)]},
                      {"s_mod2", mpz_odd_p(sn.get_mpz_t()) ? 1 : 0}});
    }
    emit({{"rows", rows}, {"all_checks", violations.empty()}});
  } else {
    std::cout << "n,s_n\n";
    for (int n = 1; n <= opt.max_m; ++n)
      std::cout << n << ',' << to_decimal(s_n[static_cast<size_t>(n)]) << '\n';
  }
  for (const std::string& v : violations) std::cerr << "violation: " << v << '\n';
  return violations.empty() ? 0 : 2;
}

inline int cmd_trs(const Options& opt) {
  if (opt.m < 1 || opt.r < 0 || opt.r >= opt.m || opt.s < 0) {
    std::cerr << "error: need m >= 1, 0 <= r <= m-1, s >= 0\n";
    return 1;
  }
  const CountTable table = load_or_fill(opt.m, opt);
  const BigNat& t = t_of_mrs(opt.m, opt.r, opt.s, table);
  if (opt.format == "json") {
    emit({{"m", opt.m}, {"r", opt.r}, {"s", opt.s}, {"t", to_decimal(t)}});
  } else {
    std::cout << "m,r,s,t\n";
    std::cout << opt.m << ',' << opt.r << ',' << opt.s << ','
              << to_decimal(t) << '\n';
  }
  return 0;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact rectangulation counts, tiling-space invariants, and "
               "brute-force verification"};
  app.require_subcommand(1);

  detail::Options opt;

  auto add_common = [&](CLI::App* cmd, bool uses_n) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--cache", opt.cache, "memo table cache file");
    cmd->add_option("--threads", opt.threads,
                    "worker threads (results are independent of this)")
        ->check(CLI::PositiveNumber);
    if (uses_n)
      cmd->add_option("--max-n", opt.max_m, "largest n")->required();
    else
      cmd->add_option("--max-m", opt.max_m, "largest tile count")->required();
  };

  CLI::App* table = app.add_subcommand(
      "table", "t_{m,s} rows (tiles, singular vertices, count)");
  add_common(table, false);
  table->add_flag("--sparse", opt.sparse, "omit zero rows above the support");

  CLI::App* sequence =
      app.add_subcommand("sequence", "total counts t_m per tile number");
  add_common(sequence, false);

  CLI::App* kn = app.add_subcommand(
      "kn", "Euler characteristic and wedge sphere count of the tiling space");
  add_common(kn, true);

  CLI::App* parity = app.add_subcommand(
      "parity", "t_n mod 2 against the conjectured period-8 pattern");
  add_common(parity, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check the recursion against brute-force enumeration");
  add_common(verify, false);
  verify->add_flag("--force", opt.force, "allow the slow oracle bound (7)");

  CLI::App* symmetric = app.add_subcommand(
      "symmetric", "counts of totally symmetric rectangulations");
  add_common(symmetric, true);
  symmetric->add_flag("--force", opt.force, "allow the slow oracle bound (7)");

  CLI::App* trs = app.add_subcommand("trs", "a single t_{m,r,s} value");
  trs->add_option("--m", opt.m, "tiles")->required();
  trs->add_option("--r", opt.r, "right-side edges")->required();
  trs->add_option("--s", opt.s, "singular vertices")->required();
  trs->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  trs->add_option("--cache", opt.cache, "memo table cache file");
  trs->add_option("--threads", opt.threads, "worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (table->parsed()) return detail::cmd_table(opt);
    if (sequence->parsed()) return detail::cmd_sequence(opt);
    if (kn->parsed()) return detail::cmd_kn(opt);
    if (parity->parsed()) return detail::cmd_parity(opt);
    if (verify->parsed()) return detail::cmd_verify(opt);
    if (symmetric->parsed()) return detail::cmd_symmetric(opt);
    if (trs->parsed()) return detail::cmd_trs(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace rectcount::cli
