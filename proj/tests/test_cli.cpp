#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "badseq/construct.hpp"
#include "badseq/json_io.hpp"
#include "badseq/verify.hpp"
#include "test_util.hpp"

using namespace badseq;
using testutil::ord;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string cli_path() {
  const char* env = std::getenv("BADSEQ_CLI");
  REQUIRE_MESSAGE(env != nullptr, "BADSEQ_CLI must point at the binary");
  return env;
}

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("badseq_cli_" + name);
}

}  // namespace

TEST_CASE("seq emits the canonical base sequence") {
  const RunResult r = run("seq --family maclagan --alpha 0 --l 1 --d 0");
  CHECK(r.code == 0);
  CHECK(r.out == write_sequence(seq_maclagan(ord("0"), 1, 0)));
  CHECK(r.out.find("[[[1,0]],[[0,2]],[[0,1]],[[0,0]]]") != std::string::npos);
}

TEST_CASE("seq then verify round-trips the in-process verdict bit-for-bit") {
  const auto path = temp_file("roundtrip.json");
  const RunResult made =
      run("seq --family maclagan --alpha w --l 1 --d 1 -o " + path.string());
  REQUIRE(made.code == 0);

  const RunResult verified = run("verify --in " + path.string() + " --mode plus-h");
  CHECK(verified.code == 0);
  const IdealSequence s = seq_maclagan(ord("w"), 1, 1);
  CHECK(verified.out == write_verify_report(run_verify(s, DegreeMode::PlusH)));
}

TEST_CASE("verify flags violations with exit 1") {
  const auto path = temp_file("tampered.json");
  std::ofstream(path) << "{\"d\":0,\"l\":9,\"param\":{\"kind\":\"const\",\"c\":0},"
                         "\"ideals\":[[[0,1]],[[0,2]]]}\n";
  const RunResult r = run("verify --in " + path.string() + " --mode param");
  CHECK(r.code == 1);
  CHECK(r.out.find("\"verdict\":\"violation\"") != std::string::npos);
  CHECK(r.out.find("\"witness\":[0,1]") != std::string::npos);
}

TEST_CASE("verify honors --target-fgh") {
  const auto path = temp_file("target.json");
  REQUIRE(run("seq --family maclagan --alpha 2 --l 1 --d 0 -o " + path.string()).code == 0);
  CHECK(run("verify --in " + path.string() + " --target-fgh 2").code == 0);
  // F_3(1) = 2 <= length-1, still fine; F_w(1)=2 as well.
  CHECK(run("verify --in " + path.string() + " --target-fgh 0").code == 0);
}

TEST_CASE("truncated certificates carry their target through the CLI") {
  const auto path = temp_file("f32.json");
  REQUIRE(run("seq --family maclagan --alpha 3 --l 2 --d 0 --cap 5000 -o " +
              path.string())
              .code == 0);
  // 2049 ideals: F_3(2) + 1, flagged as truncated.
  CHECK(run("verify --in " + path.string() + " --mode plus-h").code == 0);
  CHECK(run("verify --in " + path.string() + " --target-fgh 3 --cap 5000").code == 0);
}

TEST_CASE("search respects --include-zero") {
  const RunResult with = run("search --d 0 --l 1 --param const:0 --include-zero true");
  const RunResult without = run("search --d 0 --l 1 --param const:0 --include-zero false");
  CHECK(with.out.find("\"value\":5") != std::string::npos);
  CHECK(without.out.find("\"value\":4") != std::string::npos);
}

TEST_CASE("the convention flag threads through construction and verification") {
  const auto path = temp_file("variant.json");
  REQUIRE(run("--fund-seq times-i-plus-1 seq --family maclagan --alpha w --l 1 --d 1 -o " +
              path.string())
              .code == 0);
  CHECK(run("verify --in " + path.string() + " --mode plus-h").code == 0);
  // Variant target F_w(1) = F_2(1) = 2; the sequence still certifies it.
  CHECK(run("--fund-seq times-i-plus-1 verify --in " + path.string() +
            " --target-fgh w")
            .code == 0);
}

TEST_CASE("rootlog family and param verification") {
  const auto path = temp_file("rootlog.json");
  REQUIRE(run("seq --family rootlog --c 1 --d 0 --prefix 60 -o " + path.string()).code ==
          0);
  CHECK(run("verify --in " + path.string() + " --mode param").code == 0);
}

TEST_CASE("ramsey reduce and check") {
  const auto seq_path = temp_file("for_reduce.json");
  const auto col_path = temp_file("coloring.json");
  REQUIRE(run("seq --family exp --j 3 -o " + seq_path.string()).code == 0);
  CHECK(run("ramsey reduce --in " + seq_path.string() + " -o " + col_path.string()).code ==
        0);
  const RunResult check = run("ramsey check --in " + col_path.string());
  CHECK(check.code == 0);
  CHECK(check.out == "{\"verdict\":\"ok\"}\n");

  // A non-bad sequence is rejected with the witness pair.
  const auto bad_path = temp_file("notbad.json");
  std::ofstream(bad_path) << "{\"d\":0,\"l\":9,\"param\":{\"kind\":\"const\",\"c\":0},"
                             "\"ideals\":[[[0,1]],[[0,2]]]}\n";
  const RunResult reduced = run("ramsey reduce --in " + bad_path.string());
  CHECK(reduced.code == 1);
  CHECK(reduced.out.find("\"witness\":[0,1]") != std::string::npos);
}

TEST_CASE("ramsey number prints 3 for the tiny instance") {
  const RunResult r = run("ramsey number --l 0 --r 1 --rmax 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"number\":3") != std::string::npos);
  const RunResult none = run("ramsey number --l 0 --r 1 --rmax 2");
  CHECK(none.code == 1);
  CHECK(none.out.find("\"number\":null") != std::string::npos);
}

TEST_CASE("search oracle via the CLI") {
  const RunResult r = run("search --d 0 --l 1 --param const:0");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"value\":5") != std::string::npos);
  CHECK(r.out.find("\"exhausted\":true") != std::string::npos);
}

TEST_CASE("fgh values, inverses and bounds") {
  const RunResult v = run("fgh --alpha 2 --i 3 --cap 1000000");
  CHECK(v.code == 0);
  CHECK(v.out == "{\"value\":24}\n");
  const RunResult overflow = run("fgh --alpha 3 --i 3 --cap 1000000");
  CHECK(overflow.code == 3);
  CHECK(overflow.out.find("\"overflow\":true") != std::string::npos);
  const RunResult inv = run("fgh inverse --alpha 2 --i 7");
  CHECK(inv.code == 0);
  CHECK(inv.out == "{\"value\":1}\n");
  const RunResult pig = run("bounds pigeonhole --d 0 --l 1 --c 0 --cap 1000000000");
  CHECK(pig.code == 0);
  CHECK(pig.out == "{\"value\":17}\n");
  const RunResult slow = run("bounds slow --d 0 --l 0 --b pow2:3 --cap 1000000");
  CHECK(slow.code == 3);
}

TEST_CASE("convention flag changes limit unfoldings") {
  const RunResult variant = run("--fund-seq times-i-plus-1 fgh --alpha w --i 2 --cap 10000");
  CHECK(variant.code == 0);
  CHECK(variant.out == "{\"value\":2048}\n");
  const RunResult standard = run("fgh --alpha w --i 2 --cap 10000");
  CHECK(standard.out == "{\"value\":8}\n");
}

TEST_CASE("usage and cap errors map to exit codes 2 and 3") {
  CHECK(run("frobnicate").code == 2);
  CHECK(run("seq --family maclagan --l 1 --d 0").code == 2);      // missing alpha
  CHECK(run("seq --family maclagan --alpha w --l 1 --d 0").code == 2);  // bad dimension
  CHECK(run("verify --in /nonexistent.json").code == 2);
  CHECK(run("seq --family maclagan --alpha w+1 --l 2 --d 1 --cap 5000").code == 3);
  CHECK(run("ramsey number --l 0 --r 3 --rmax 9 --budget 1000").code == 3);
}
