#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "subprocess.hpp"

using testutil::parse_csv;
using testutil::run_command;

namespace {

const std::string kCli = RECTCOUNT_CLI_PATH;

std::string cli(const std::string& args, bool merge_stderr = false) {
  return kCli + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() /
             (name + "." + std::to_string(::getpid()))) {}
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("table csv output") {
  const auto res = run_command(cli("table --max-m 4"));
  REQUIRE(res.exit_code == 0);
  const std::string expected =
      "m,s,t\n"
      "1,0,1\n"
      "2,0,2\n"
      "2,1,0\n"
      "3,0,6\n"
      "3,1,0\n"
      "3,2,0\n"
      "4,0,24\n"
      "4,1,1\n"
      "4,2,0\n"
      "4,3,0\n";
  CHECK(res.out == expected);
}

TEST_CASE("table with a single row") {
  const auto res = run_command(cli("table --max-m 1"));
  REQUIRE(res.exit_code == 0);
  CHECK(res.out == "m,s,t\n1,0,1\n");
}

TEST_CASE("sparse table omits zero rows") {
  const auto res = run_command(cli("table --max-m 4 --sparse"));
  REQUIRE(res.exit_code == 0);
  CHECK(res.out == "m,s,t\n1,0,1\n2,0,2\n3,0,6\n4,0,24\n4,1,1\n");
}

TEST_CASE("sequence rows") {
  const auto res = run_command(cli("sequence --max-m 9"));
  REQUIRE(res.exit_code == 0);
  const auto rows = parse_csv(res.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == std::vector<std::string>{"m", "t"});
  CHECK(rows[1] == std::vector<std::string>{"1", "1"});
  CHECK(rows[9] == std::vector<std::string>{"9", "280433"});
}

TEST_CASE("kn rows") {
  const auto res = run_command(cli("kn --max-n 10"));
  REQUIRE(res.exit_code == 0);
  const auto rows = parse_csv(res.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == std::vector<std::string>{"n", "euler", "k"});
  CHECK(rows[1] == std::vector<std::string>{"1", "1", "0"});
  CHECK(rows[2] == std::vector<std::string>{"2", "-1", "2"});
  CHECK(rows[10] == std::vector<std::string>{"10", "-653289", "653290"});
}

TEST_CASE("parity agrees with the conjectured pattern") {
  const auto res = run_command(cli("parity --max-m 8"));
  REQUIRE(res.exit_code == 0);
  const auto rows = parse_csv(res.out);
  REQUIRE(rows.size() == 9);
  const int expected[8] = {1, 0, 0, 1, 0, 0, 0, 0};
  for (int n = 1; n <= 8; ++n) {
    CHECK(rows[n][1] == std::to_string(expected[n - 1]));
    CHECK(rows[n][3] == "1");
  }
}

TEST_CASE("verify exits cleanly at small scale") {
  const auto res = run_command(cli("verify --max-m 3", true));
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("9 classes checked") != std::string::npos);
  CHECK(res.out.find("0 mismatches") != std::string::npos);
}

TEST_CASE("symmetric counts and checks") {
  const auto res = run_command(cli("symmetric --max-n 5"));
  REQUIRE(res.exit_code == 0);
  const auto rows = parse_csv(res.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"n", "s_n"});
  const char* expected[5] = {"1", "0", "0", "1", "0"};
  for (int n = 1; n <= 5; ++n) CHECK(rows[n][1] == expected[n - 1]);
}

TEST_CASE("oracle commands refuse m above the bound without --force") {
  CHECK(run_command(cli("symmetric --max-n 8")).exit_code == 1);
  CHECK(run_command(cli("verify --max-m 7")).exit_code == 1);
  CHECK(run_command(cli("verify --max-m 8 --force")).exit_code == 1);
}

TEST_CASE("single t_{m,r,s} lookup") {
  const auto res = run_command(cli("trs --m 3 --r 1 --s 0"));
  REQUIRE(res.exit_code == 0);
  CHECK(res.out == "m,r,s,t\n3,1,0,3\n");
  CHECK(run_command(cli("trs --m 3 --r 3 --s 0")).exit_code == 1);
}

TEST_CASE("json output carries counts as decimal strings") {
  const auto res = run_command(cli("sequence --max-m 4 --format json"));
  REQUIRE(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 4);
  CHECK(doc[3]["m"] == 4);
  CHECK(doc[3]["t"].is_string());
  CHECK(doc[3]["t"] == "25");

  const auto trs = run_command(cli("trs --m 2 --r 0 --s 0 --format json"));
  REQUIRE(trs.exit_code == 0);
  const auto tdoc = nlohmann::json::parse(trs.out);
  CHECK(tdoc["t"] == "1");

  const auto par = run_command(cli("parity --max-m 4 --format json"));
  REQUIRE(par.exit_code == 0);
  const auto pdoc = nlohmann::json::parse(par.out);
  CHECK(pdoc["all_agree"] == true);
  CHECK(pdoc["rows"][0]["t_mod2"] == 1);

  const auto sym = run_command(cli("symmetric --max-n 4 --format json"));
  REQUIRE(sym.exit_code == 0);
  const auto sdoc = nlohmann::json::parse(sym.out);
  CHECK(sdoc["rows"][3]["s_n"] == "1");
  CHECK(sdoc["rows"][3]["t_mod2"] == 1);
  CHECK(sdoc["rows"][3]["s_mod2"] == 1);
  CHECK(sdoc["all_checks"] == true);
}

TEST_CASE("cache file round-trip") {
  TempFile cache("rectcount_cache");
  const std::string flags = "sequence --max-m 6 --cache " + cache.path.string();
  const auto first = run_command(cli(flags));
  REQUIRE(first.exit_code == 0);

  std::ifstream in(cache.path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "rectcount-table v1");

  const auto second = run_command(cli(flags));
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);

  // extending through the same cache must agree with a fresh run
  const auto extended =
      run_command(cli("table --max-m 8 --cache " + cache.path.string()));
  const auto fresh = run_command(cli("table --max-m 8"));
  REQUIRE(extended.exit_code == 0);
  CHECK(extended.out == fresh.out);
}

TEST_CASE("corrupt cache is ignored with a recompute") {
  TempFile cache("rectcount_bad_cache");
  {
    std::ofstream out(cache.path);
    out << "rectcount-table v9000\n1 0 0 1\n";
  }
  const auto res =
      run_command(cli("sequence --max-m 4 --cache " + cache.path.string()));
  REQUIRE(res.exit_code == 0);
  const auto rows = parse_csv(res.out);
  CHECK(rows[4] == std::vector<std::string>{"4", "25"});
}

TEST_CASE("output is byte-identical across thread counts") {
  const auto one = run_command(cli("table --max-m 10 --threads 1"));
  const auto four = run_command(cli("table --max-m 10 --threads 4"));
  REQUIRE(one.exit_code == 0);
  REQUIRE(four.exit_code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_command(cli("nonsense")).exit_code == 1);
  CHECK(run_command(cli("table")).exit_code == 1);            // missing --max-m
  CHECK(run_command(cli("table --max-m 3 --format xml")).exit_code == 1);
  CHECK(run_command(cli("")).exit_code == 1);                 // no subcommand
}
