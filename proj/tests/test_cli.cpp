// Copyright 2026 The portraitmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Contract tests for the `portrait` executable: golden outputs on fixed
// seeds, the exit-code table and byte-for-byte determinism.
//
// Set PORTRAIT_UPDATE_GOLDEN=1 to rewrite the golden files instead of
// comparing against them.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "cli_runner.hpp"

namespace fs = std::filesystem;

namespace {

using portrait::testing::one_line_diagnostic;
using portrait::testing::scratch_dir;
using portrait::testing::slurp;
using Run = portrait::testing::CliRun;

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }
std::string golden_path(const std::string& name) { return std::string(GOLDEN_DIR) + "/" + name; }

Run run(const std::string& args, const std::string& env = "") {
  return portrait::testing::run_cli(PORTRAIT_CLI, args, env);
}

bool updating() {
  const char* v = std::getenv("PORTRAIT_UPDATE_GOLDEN");
  return v != nullptr && std::string(v) == "1";
}

void match_golden(const std::string& name, const std::string& actual) {
  const std::string path = golden_path(name);
  if (updating()) {
    std::ofstream(path, std::ios::binary | std::ios::trunc) << actual;
    return;
  }
  REQUIRE_MESSAGE(fs::exists(path), "missing golden file " << path);
  CHECK_MESSAGE(slurp(path) == actual, "output differs from " << path);
}

void golden_stdout(const std::string& name, const std::string& args, int expected_exit = 0) {
  const Run r = run(args);
  INFO("args: " << args << "\nstderr: " << r.err);
  CHECK(r.exit_code == expected_exit);
  CHECK(r.err.empty());
  match_golden(name, r.out);
}

}  // namespace

TEST_CASE("gen golden outputs") {
  golden_stdout("gen_pure_1.json", "gen --kind pure --dim 1 --seed 0");
  golden_stdout("gen_mixed_4.json", "gen --kind mixed --dim 4 --seed 7 --stream 3");
  golden_stdout("gen_mixed_8.json", "gen --kind mixed --dim 8 --seed 7 --stream 4");
  golden_stdout("gen_hermitian_3.json", "gen --kind hermitian --dim 3 --seed 11 --scale 2");
  golden_stdout("gen_separable_6.json", "gen --kind separable --n 2 --m 3 --terms 3 --seed 5");
  golden_stdout("gen_unitary_3.json", "gen --kind unitary --dim 3 --seed 13 --stream 1");
}

TEST_CASE("gen writes --out files identical to stdout") {
  const fs::path file = scratch_dir() / "gen_out.json";
  const Run r = run("gen --kind mixed --dim 4 --seed 7 --stream 3 --out '" + file.string() + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  match_golden("gen_mixed_4.json", slurp(file));
}

TEST_CASE("portrait golden outputs") {
  golden_stdout("portrait_bell.json", "portrait '" + data("bell.json") + "' --n 2 --m 2");
  golden_stdout("portrait_mixed_4.json",
                "portrait '" + golden_path("gen_mixed_4.json") + "' --n 2 --m 2 --verify-oracle");

  const fs::path prefix = scratch_dir() / "padded";
  const Run r = run("portrait '" + data("bell.json") + "' --n 2 --m 3 --pad-to 6 --offset 1 --out '" +
                    prefix.string() + "'");
  CHECK(r.exit_code == 0);
  match_golden("portrait_bell_padded.a1.json", slurp(prefix.string() + ".a1.json"));
  match_golden("portrait_bell_padded.a2.json", slurp(prefix.string() + ".a2.json"));
}

TEST_CASE("check golden outputs") {
  golden_stdout("check_subadd_bell.json",
                "check '" + data("bell.json") + "' --kind subadd --n 2 --m 2");
  golden_stdout("check_subadd_padded.json",
                "check '" + golden_path("gen_mixed_4.json") +
                    "' --kind subadd --n 3 --m 2 --pad-to 6 --offset 1 --verify-oracle");
  golden_stdout("check_scaled_separable.json",
                "check '" + golden_path("gen_separable_6.json") + "' --kind scaled --n 3 --m 2");
  golden_stdout("check_shifted_diag.json",
                "check '" + data("diag_pm1.json") + "' --kind shifted --pad-to 4 --n 2 --m 2 --x 1");
  golden_stdout("check_shifted_hermitian.json",
                "check '" + golden_path("gen_hermitian_3.json") +
                    "' --kind shifted --pad-to 4 --offset 1 --n 2 --m 2 --verify-oracle");
  golden_stdout("check_ssa_bits.json",
                "check '" + golden_path("gen_mixed_8.json") +
                    "' --kind ssa --radices 2,2,2 --bits --verify-oracle");
}

TEST_CASE("mutinfo golden outputs") {
  golden_stdout("mutinfo_bell.json", "mutinfo '" + data("bell.json") + "' --n 2 --m 2");
  golden_stdout("mutinfo_mixed_8.json",
                "mutinfo '" + golden_path("gen_mixed_8.json") + "' --n 2 --m 4 --verify-oracle");
}

TEST_CASE("batch golden outputs") {
  golden_stdout("batch_subadd.json", "batch --kind subadd --dims 4,6 --trials 5 --seed 2");
  golden_stdout("batch_shifted.json", "batch --kind shifted --dims 3 --trials 4 --seed 2 --stream 9");
  golden_stdout("batch_ssa.json", "batch --kind ssa --dims 8 --trials 3 --seed 2 --verify-oracle");
  golden_stdout("batch_empty.json", "batch --kind subadd --dims 4 --trials 0 --seed 2");
}

TEST_CASE("exit code 0 on satisfied, 1 on violated") {
  const std::string bell = "'" + data("bell.json") + "'";
  CHECK(run("check " + bell + " --kind subadd --n 2 --m 2").exit_code == 0);
  // A negative tolerance asks for a margin larger than the Bell slack (2 ln 2).
  const Run violated = run("check " + bell + " --kind subadd --n 2 --m 2 --tol -1.5");
  CHECK(violated.exit_code == 1);
  CHECK(violated.out.find("\"satisfied\": false") != std::string::npos);
  CHECK(run("check " + bell + " --kind subadd --n 2 --m 2 --tol -1.3").exit_code == 0);
  CHECK(run("batch --kind subadd --dims 4 --trials 3 --tol -100").exit_code == 1);
}

TEST_CASE("exit code 2 on input errors with a one-line diagnostic") {
  const std::string bell = "'" + data("bell.json") + "'";
  const char* cases[] = {
      "",
      "frobnicate",
      "check '/nonexistent/matrix.json' --kind subadd --n 2 --m 2",
      "check MALFORMED --kind subadd --n 1 --m 2",
      "check TRUNCATED --kind subadd --n 1 --m 2",
      "check BELL --kind subadd --n 3 --m 2",
      "check BELL --kind subadd",
      "check BELL --kind bogus --n 2 --m 2",
      "check DIAG --kind subadd --n 1 --m 2",
      "check DIAG --kind shifted --pad-to 4 --n 2 --m 2 --x 0.5",
      "check BELL --kind ssa --radices 2,2",
      "check BELL --kind subadd --n 2 --m 2 --tol nan",
      "portrait BELL --n 2 --m 3",
      "portrait BELL --n 2 --m 2 --pad-to 3",
      "mutinfo DIAG --n 1 --m 2",
      "gen --kind mixed",
      "gen --kind hermitian --dim 3 --scale 0",
      "gen --kind separable --n 2",
      "batch --kind subadd --dims 5 --trials 2",
      "batch --kind ssa --dims 12,8 --trials 1 --radices 2,2,2",
      "batch --kind subadd --dims 4 --trials 2 --n 3 --m 2",
  };
  for (std::string args : cases) {
    auto replace = [&](const std::string& key, const std::string& value) {
      for (auto pos = args.find(key); pos != std::string::npos; pos = args.find(key))
        args.replace(pos, key.size(), value);
    };
    replace("MALFORMED", "'" + data("malformed.json") + "'");
    replace("TRUNCATED", "'" + data("truncated.json") + "'");
    replace("DIAG", "'" + data("diag_pm1.json") + "'");
    replace("BELL", bell);
    const Run r = run(args);
    INFO("args: " << args << "\nstderr: " << r.err);
    CHECK(r.exit_code == 2);
    CHECK(one_line_diagnostic(r));
  }
}

TEST_CASE("help exits 0") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("check --help").exit_code == 0);
}

TEST_CASE("exit code 3 on oracle disagreement") {
  // With a zero allowance any roundoff-level difference counts as disagreement.
  const std::string mixed = "'" + golden_path("gen_mixed_8.json") + "'";
  const Run r = run("check " + mixed + " --kind subadd --n 2 --m 4 --verify-oracle --oracle-tol 0");
  CHECK(r.exit_code == 3);
  CHECK(one_line_diagnostic(r));
  CHECK(run("batch --kind subadd --dims 12 --trials 2 --verify-oracle --oracle-tol 0").exit_code == 3);
  CHECK(run("check " + mixed + " --kind subadd --n 2 --m 4 --verify-oracle").exit_code == 0);
}

TEST_CASE("outputs are byte-identical per seed and stream") {
  const std::string gen = "gen --kind mixed --dim 6 --seed 99 --stream 4";
  const Run first = run(gen);
  CHECK(first.exit_code == 0);
  CHECK(run(gen).out == first.out);
  CHECK(run("gen --kind mixed --dim 6 --seed 99 --stream 5").out != first.out);
  CHECK(run("gen --kind mixed --dim 6 --seed 98 --stream 4").out != first.out);
  CHECK(run("gen --kind mixed --dim 6 --stream 4", "PORTRAIT_SEED=99").out == first.out);
  CHECK(run("gen --kind mixed --dim 6 --seed 99 --stream 4", "PORTRAIT_SEED=1").out == first.out);
  CHECK(run("gen --kind mixed --dim 6", "PORTRAIT_SEED=x1").exit_code == 2);

  const std::string batch = "batch --kind scaled --dims 4,6,8 --trials 20 --seed 3";
  const Run b1 = run(batch);
  CHECK(b1.exit_code == 0);
  CHECK(run(batch).out == b1.out);
  CHECK(run(batch, "PORTRAIT_SEED=3").out == b1.out);
}

TEST_CASE("report slack is rhs minus lhs as printed") {
  const Run r = run("check '" + golden_path("gen_mixed_8.json") + "' --kind subadd --n 4 --m 2");
  REQUIRE(r.exit_code == 0);
  auto field = [&](const std::string& key) {
    const auto pos = r.out.find("\"" + key + "\": ");
    REQUIRE(pos != std::string::npos);
    return std::stod(r.out.substr(pos + key.size() + 4));
  };
  CHECK(field("slack") == field("rhs") - field("lhs"));
}
