#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "json.hpp"

#include "mpt/cli.hpp"
#include "mpt/families.hpp"
#include "mpt/io.hpp"
#include "oracles.hpp"

using namespace mpt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(MPT_FIXTURES) + "/" + name; }

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
  const auto p = std::filesystem::temp_directory_path() / ("mpt_cli_" + name);
  write_file(p, contents);
  return p;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"nonsense"}).code == kExitInput);
  CHECK(run({"analyze"}).code == kExitInput);
  CHECK(run({"analyze", "--matrix", fixture("malformed.tmx")}).code == kExitInput);
  CHECK(run({"analyze", "--matrix", fixture("does-not-exist.tmx")}).code == kExitInput);
  const auto reducible = run({"analyze", "--matrix", fixture("reducible.tmx")});
  CHECK(reducible.code == kExitPrecondition);
  CHECK(reducible.err.find("reducible") != std::string::npos);
  CHECK(run({"analyze", "--matrix", fixture("h32.tmx"), "--vector", fixture("vector5.tvec")}).code == kExitInput);
  CHECK(run({"reversal", "--graph", fixture("antiparallel.dg")}).code == kExitInput);
  CHECK(run({"reversal", "--graph", fixture("chain.dg"), "--mode", "scheduling"}).code == kExitPrecondition);
  CHECK(run({"reversal", "--graph", fixture("chain.dg"), "--mode", "sideways"}).code == kExitInput);
  CHECK(run({"generate", "ek", "--k", "1"}).code == kExitInput);
  CHECK(run({"generate", "tree"}).code == kExitInput);
  CHECK(run({"sync", "--matrix", fixture("reducible.tmx")}).code == kExitInput);
  CHECK(run({"schedule", "--uniform", fixture("example7.ug"), "--steps", "-1"}).code == kExitInput);
}

TEST_CASE("parse errors carry line and column") {
  const auto r = run({"analyze", "--matrix", fixture("malformed.tmx")});
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(r.err.find("column 3") != std::string::npos);
}

TEST_CASE("analyze reports the cherry bounds") {
  const auto r = run({"analyze", "--matrix", fixture("h32.tmx"), "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["system_bounds"]["repetitive"] == "792");
  CHECK(j["critical_analysis"]["lambda"] == "19/3");
  CHECK(j["system_transient"].is_null());
  CHECK(j.contains("provenance"));
}

TEST_CASE("analyze with oracle on E_3") {
  const auto r = run({"analyze", "--matrix", fixture("ek3.tmx"), "--oracle", "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["critical_analysis"]["ep_G"] == 10);
  CHECK(j["system_transient"]["transient"] == 0);
  // Boolean pattern of E_3's powers, by naive iteration on unit vectors.
  const auto a = generate_ek(3);
  std::int64_t expected = 0;
  for (std::size_t col = 0; col < 6; ++col) {
    MaxPlusVector e(6);
    e[col] = 0L;
    expected = std::max(expected, oracle::transient_on_window(oracle::trajectory(a, e, 60), 1, Rational(0)));
  }
  CHECK(j["matrix_transient"]["transient"] == expected);
}

TEST_CASE("JSON output is deterministic") {
  const std::vector<std::string> args{"analyze", "--matrix", fixture("h32.tmx"), "--oracle", "--json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> sched{"schedule", "--uniform", fixture("example7.ug"), "--steps", "6", "--json"};
  CHECK(run(sched).out == run(sched).out);
}

TEST_CASE("generate writes parseable matrices") {
  const auto ek = run({"generate", "ek", "--k", "4"});
  REQUIRE(ek.code == kExitOk);
  CHECK(parse_matrix(ek.out) == generate_ek(4));
  const auto cherry = run({"generate", "cherry", "--l", "3", "--c", "2"});
  CHECK(parse_matrix(cherry.out) == generate_cherry(3, 2));
  const std::vector<std::string> random{"generate", "random", "--n", "5", "--seed", "11", "--den", "3"};
  const auto a = run(random);
  CHECK(a.out == run(random).out);
  CHECK(a.out != run({"generate", "random", "--n", "5", "--seed", "12", "--den", "3"}).out);
  CHECK(is_irreducible(parse_matrix(a.out)));
  const auto path = std::filesystem::temp_directory_path() / "mpt_cli_generated.tmx";
  CHECK(run({"generate", "cherry", "--l", "2", "--c", "1", "--out", path.string()}).code == kExitOk);
  CHECK(parse_matrix(read_file(path)) == generate_cherry(2, 1));
}

TEST_CASE("schedule, sync and reversal") {
  const auto s = run({"schedule", "--uniform", fixture("example7.ug"), "--steps", "4"});
  REQUIRE(s.code == kExitOk);
  CHECK(s.out.find("v = (0, 1, 4, 6, 11, 0, 3)") != std::string::npos);
  const auto y = run({"sync", "--matrix", fixture("h32.tmx")});
  REQUIRE(y.code == kExitOk);
  CHECK(y.out.find("B_ER = 5711") != std::string::npos);
  const auto r = run({"reversal", "--graph", fixture("chain.dg"), "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["termination_time"] == 3);
  CHECK(j["within_bound"] == true);
}

TEST_CASE("vector input") {
  const auto a = scratch("a.tmx", "2\n0 1\n1 0\n");
  const auto v = scratch("v.tvec", "2\n1\n-1/2\n");
  CHECK(run({"analyze", "--matrix", a.string(), "--vector", v.string(), "--oracle"}).code == kExitOk);
  // Finite-vector bounds need a finite norm.
  const auto w = scratch("w.tvec", "2\n1 -inf\n");
  CHECK(run({"analyze", "--matrix", a.string(), "--vector", w.string()}).code == kExitInput);
}

TEST_CASE("selftest passes its fixtures") {
  const auto r = run({"selftest", "--random", "50", "--jobs", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
