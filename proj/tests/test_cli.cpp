/*
 * Copyright 2026 The Degen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// End-to-end tests of the `degen` binary: output text, JSON shape, exit
// codes, and the reduce -> witness pipeline.  The binary path comes in via
// the DEGEN_CLI_PATH compile definition.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

struct CliResult {
  int exitCode;
  std::string output;  // stdout and stderr interleaved
};

// Runs the CLI through the shell so environment prefixes work; captures both
// output streams.
CliResult runCli(const std::string& args, const std::string& envPrefix = "") {
  std::string command = envPrefix + DEGEN_CLI_PATH " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

// A per-test scratch directory under the system temp root.
class TempDir {
 public:
  TempDir() {
    std::string pattern =
        (std::filesystem::temp_directory_path() / "degen_cli_XXXXXX").string();
    REQUIRE(mkdtemp(pattern.data()) != nullptr);
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }

  std::string file(const std::string& name, const std::string& content) const {
    std::string path = (std::filesystem::path(path_) / name).string();
    std::ofstream out(path, std::ios::binary);
    out << content;
    REQUIRE(out.good());
    return path;
  }
  std::string name(const std::string& leaf) const {
    return (std::filesystem::path(path_) / leaf).string();
  }

 private:
  std::string path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const char* kDegenerateGame =
    "degen-game 1\nrows 2 cols 2\nA\n1 1\n0 1\nB\n1 0\n0 1\n";
const char* kNondegenerateGame =
    "degen-game 1\nrows 2 cols 2\nA\n1 2\n0 1\nB\n1 0\n0 1\n";
const char* kSingleClause = "p cnf 3 1\n1 2 3 0\n";

std::string zeroGame(int rows, int cols) {
  std::string text = "degen-game 1\nrows " + std::to_string(rows) + " cols " +
                     std::to_string(cols) + "\nA\n";
  std::string row;
  for (int c = 0; c < cols; ++c) row += c ? " 0" : "0";
  row += '\n';
  for (int r = 0; r < rows; ++r) text += row;
  text += "B\n";
  for (int r = 0; r < rows; ++r) text += row;
  return text;
}

}  // namespace

TEST_CASE("check reports per-side verdicts with a witness", "[cli]") {
  TempDir dir;
  std::string game = dir.file("g.game", kDegenerateGame);

  CliResult r = runCli("check " + game);
  REQUIRE(r.exitCode == 0);
  REQUIRE(r.output.find("row side: DEGENERATE") != std::string::npos);
  REQUIRE(r.output.find("column side: NONDEGENERATE") != std::string::npos);
  REQUIRE(r.output.find("overall: DEGENERATE") != std::string::npos);
  REQUIRE(r.output.find("support size 1, best responses 2, u = 1") !=
          std::string::npos);
  REQUIRE(r.output.find("degen-witness 1\nside row\ndim 2\n0 1\n") !=
          std::string::npos);

  CliResult n = runCli("check " + dir.file("n.game", kNondegenerateGame));
  REQUIRE(n.exitCode == 0);
  REQUIRE(n.output.find("row side: NONDEGENERATE") != std::string::npos);
  REQUIRE(n.output.find("overall: NONDEGENERATE") != std::string::npos);

  CliResult rowOnly = runCli("check --side row " + game);
  REQUIRE(rowOnly.exitCode == 0);
  REQUIRE(rowOnly.output.find("row side: DEGENERATE") != std::string::npos);
  REQUIRE(rowOnly.output.find("column side:") == std::string::npos);
}

TEST_CASE("check --json emits machine-readable verdicts", "[cli]") {
  TempDir dir;
  CliResult r = runCli("check --json " + dir.file("g.game", kDegenerateGame));
  REQUIRE(r.exitCode == 0);
  json out = json::parse(r.output);
  REQUIRE(out["command"] == "check");
  REQUIRE(out["row"]["verdict"] == "degenerate");
  REQUIRE(out["column"]["verdict"] == "nondegenerate");
  REQUIRE(out["overall"]["verdict"] == "degenerate");
  REQUIRE(out["row"]["witness"]["side"] == "row");
  REQUIRE(out["row"]["witness"]["strategy"] == json::array({"0", "1"}));
  REQUIRE(out["row"]["witness"]["supportSize"] == 1);
  REQUIRE(out["row"]["witness"]["bestResponses"] == json::array({0, 1}));
  REQUIRE(out["row"]["witness"]["u"] == "1");
}

TEST_CASE("check writes witness files and honors the method flag", "[cli]") {
  TempDir dir;
  std::string game = dir.file("g.game", kDegenerateGame);
  std::string witnessPath = dir.name("w.wit");

  CliResult r = runCli("check --witness-out " + witnessPath + " " + game);
  REQUIRE(r.exitCode == 0);
  REQUIRE(slurp(witnessPath) == "degen-witness 1\nside row\ndim 2\n0 1\n");

  CliResult e = runCli("check --method elimination " + game);
  REQUIRE(e.exitCode == 0);
  REQUIRE(e.output.find("row side: DEGENERATE") != std::string::npos);
}

TEST_CASE("witness accepts valid certificates and rejects others", "[cli]") {
  TempDir dir;
  std::string game = dir.file("g.game", kDegenerateGame);
  std::string good =
      dir.file("good.wit", "degen-witness 1\nside row\ndim 2\n0 1\n");
  std::string bad = dir.file("bad.wit", "degen-witness 1\nside row\ndim 2\n1 0\n");

  CliResult accept = runCli("witness " + game + " " + good);
  REQUIRE(accept.exitCode == 0);
  REQUIRE(accept.output.find("ACCEPT") != std::string::npos);
  REQUIRE(accept.output.find("support size: 1") != std::string::npos);
  REQUIRE(accept.output.find("best responses: 2") != std::string::npos);

  CliResult reject = runCli("witness " + game + " " + bad);
  REQUIRE(reject.exitCode == 0);
  REQUIRE(reject.output.find("REJECT") != std::string::npos);

  CliResult js = runCli("witness --json " + game + " " + good);
  REQUIRE(js.exitCode == 0);
  json out = json::parse(js.output);
  REQUIRE(out["accepted"] == true);
  REQUIRE(out["u"] == "1");
}

TEST_CASE("reduce builds the game and the pipeline verifies its witness", "[cli]") {
  TempDir dir;
  std::string cnf = dir.file("one.cnf", kSingleClause);
  std::string gamePath = dir.name("one.game");
  std::string witnessPath = dir.name("one.wit");

  CliResult r = runCli("reduce " + cnf + " -o " + gamePath + " --witness-out " +
                       witnessPath + " --meta");
  REQUIRE(r.exitCode == 0);
  REQUIRE(r.output.find("game written to " + gamePath + " (29x7)") !=
          std::string::npos);
  REQUIRE(r.output.find("clauses 1\n") != std::string::npos);
  REQUIRE(r.output.find("conflicts 21\n") != std::string::npos);
  // epsilon = 1/(6*3^42)
  REQUIRE(r.output.find("epsilon 1/656513934789074155254") != std::string::npos);
  REQUIRE(r.output.find("conflict 0 c1^1,c1^2") != std::string::npos);
  REQUIRE(r.output.find("conflict 20 c1^6,c1^7") != std::string::npos);
  REQUIRE(r.output.find("formula SAT") != std::string::npos);
  REQUIRE(r.output.find("witness written to " + witnessPath) != std::string::npos);

  // The lexicographically least model is (0,0,1): pattern 1, column 0.
  REQUIRE(slurp(witnessPath) ==
          "degen-witness 1\nside row\ndim 7\n1 0 0 0 0 0 0\n");

  CliResult v = runCli("witness " + gamePath + " " + witnessPath);
  REQUIRE(v.exitCode == 0);
  REQUIRE(v.output.find("ACCEPT") != std::string::npos);

  // Reducing an unsatisfiable formula still writes the game but no witness.
  std::string unsat;
  unsat += "p cnf 3 8\n";
  for (int bits = 0; bits < 8; ++bits) {
    unsat += std::to_string((bits & 4) ? -1 : 1) + " " +
             std::to_string((bits & 2) ? -2 : 2) + " " +
             std::to_string((bits & 1) ? -3 : 3) + " 0\n";
  }
  std::string unsatPath = dir.file("unsat.cnf", unsat);
  std::string unsatGame = dir.name("unsat.game");
  CliResult u = runCli("reduce " + unsatPath + " -o " + unsatGame +
                       " --witness-out " + dir.name("unsat.wit"));
  REQUIRE(u.exitCode == 0);
  REQUIRE(u.output.find("game written to " + unsatGame + " (1429x56)") !=
          std::string::npos);
  REQUIRE(u.output.find("formula UNSAT") != std::string::npos);
  REQUIRE(u.output.find("no witness: formula unsatisfiable") != std::string::npos);
  REQUIRE_FALSE(std::filesystem::exists(dir.name("unsat.wit")));
}

TEST_CASE("sat prints the lexicographically least model", "[cli]") {
  TempDir dir;
  CliResult r = runCli("sat " + dir.file("one.cnf", kSingleClause));
  REQUIRE(r.exitCode == 0);
  REQUIRE(r.output == "SAT\nassignment 0 0 1\n");

  CliResult u = runCli("sat " + dir.file("pair.cnf",
                                         "p cnf 1 2\nc impossible\n"));
  // A malformed body (clauses must have three literals) is an input error.
  REQUIRE(u.exitCode == 2);
}

TEST_CASE("verify-reduction reports a consistent machine check", "[cli]") {
  TempDir dir;
  CliResult r = runCli("verify-reduction " + dir.file("one.cnf", kSingleClause));
  REQUIRE(r.exitCode == 0);
  REQUIRE(r.output.find("satisfiable: SAT") != std::string::npos);
  REQUIRE(r.output.find("witness: VERIFIED (support 1, best responses 2 = n+1)") !=
          std::string::npos);
  REQUIRE(r.output.find("shape: PASS") != std::string::npos);
  REQUIRE(r.output.find("ladder: PASS") != std::string::npos);
  REQUIRE(r.output.find("chain audit: PASS") != std::string::npos);
  REQUIRE(r.output.find("mass audit: PASS") != std::string::npos);
  REQUIRE(r.output.find("column side: PASS") != std::string::npos);
  REQUIRE(r.output.find("oracle: SKIPPED (") != std::string::npos);
  REQUIRE(r.output.find("verdict: CONSISTENT") != std::string::npos);
}

TEST_CASE("lp prints a checkable basis certificate", "[cli]") {
  TempDir dir;
  std::string degenerate = dir.file(
      "d.lp", "degen-lp 1\nrows 2 cols 2\nA\n1 2\n0 1\nb\n2 1\n");
  CliResult r = runCli("lp " + degenerate);
  REQUIRE(r.exitCode == 0);
  REQUIRE(r.output ==
          "LP DEGENERATE\nbasis 0 1\nsolution 0 1\nzero positions 0\n");

  std::string clean = dir.file(
      "n.lp", "degen-lp 1\nrows 2 cols 2\nA\n1 1\n0 1\nb\n2 1\n");
  CliResult n = runCli("lp " + clean);
  REQUIRE(n.exitCode == 0);
  REQUIRE(n.output == "LP NONDEGENERATE\n");
}

TEST_CASE("winlose exposes the predicate discrepancy", "[cli]") {
  TempDir dir;
  // A has an all-zero column: the literal condition calls it nondegenerate,
  // the corrected one does not.
  std::string game = dir.file(
      "z.game", "degen-game 1\nrows 2 cols 2\nA\n1 0\n0 0\nB\n1 0\n0 1\n");

  CliResult both = runCli("winlose --paper --corrected " + game);
  REQUIRE(both.exitCode == 0);
  REQUIRE(both.output.find("paper: NONDEGENERATE") != std::string::npos);
  REQUIRE(both.output.find("corrected: DEGENERATE") != std::string::npos);
  REQUIRE(both.output.find("note: predicates disagree") != std::string::npos);

  // Exhaustive search agrees with the corrected predicate.
  CliResult exact = runCli("check " + game);
  REQUIRE(exact.exitCode == 0);
  REQUIRE(exact.output.find("overall: DEGENERATE") != std::string::npos);

  // Default is the corrected predicate.
  CliResult dflt = runCli("winlose " + game);
  REQUIRE(dflt.exitCode == 0);
  REQUIRE(dflt.output.find("corrected: DEGENERATE") != std::string::npos);
  REQUIRE(dflt.output.find("paper:") == std::string::npos);

  // Non-binary payoffs are an input error.
  CliResult bad = runCli("winlose " + dir.file("g.game", kNondegenerateGame));
  REQUIRE(bad.exitCode == 2);
}

TEST_CASE("input problems exit with code 2", "[cli]") {
  TempDir dir;
  REQUIRE(runCli("check " + dir.name("missing.game")).exitCode == 2);
  REQUIRE(runCli("check " + dir.file("trunc.game", "degen-game 1\nrows 2"))
              .exitCode == 2);
  REQUIRE(runCli("sat " + dir.file("dup.cnf", "p cnf 2 1\n1 -1 2 0\n")).exitCode ==
          2);
  REQUIRE(runCli("check").exitCode == 2);          // missing required argument
  REQUIRE(runCli("frobnicate").exitCode == 2);     // unknown subcommand
  REQUIRE(runCli("--help").exitCode == 0);         // help is a clean exit
}

TEST_CASE("resource refusals exit with code 3", "[cli]") {
  TempDir dir;
  std::string big = dir.file("big.game", zeroGame(13, 13));
  CliResult r = runCli("check " + big);
  REQUIRE(r.exitCode == 3);
  REQUIRE(r.output.find("UNKNOWN") != std::string::npos);
  REQUIRE(r.output.find("reason:") != std::string::npos);
  REQUIRE(r.output.find("maxTotalDim") != std::string::npos);

  // Raising the dimension cap turns the refusal into a verdict (the zero
  // matrix ties everything, so the very first candidate is feasible).
  CliResult raised = runCli("check --max-dim 26 " + big);
  REQUIRE(raised.exitCode == 0);
  REQUIRE(raised.output.find("overall: DEGENERATE") != std::string::npos);

  std::string game = dir.file("g.game", kDegenerateGame);
  REQUIRE(runCli("check --budget 1 " + game).exitCode == 3);
  REQUIRE(runCli("check " + game, "DEGEN_BUDGET=1 ").exitCode == 3);
  // An explicit flag beats the environment override.
  REQUIRE(runCli("check --budget 1000 " + game, "DEGEN_BUDGET=1 ").exitCode == 0);
  // A malformed override is an input error.
  REQUIRE(runCli("check " + game, "DEGEN_BUDGET=zero ").exitCode == 2);

  // The LP side uses its own column cap.
  std::string wide = dir.file("wide.lp", [] {
    std::string text = "degen-lp 1\nrows 1 cols 21\nA\n";
    for (int c = 0; c < 21; ++c) text += c ? " 1" : "1";
    text += "\nb\n1\n";
    return text;
  }());
  REQUIRE(runCli("lp " + wide).exitCode == 3);
  REQUIRE(runCli("lp --max-cols 21 " + wide).exitCode == 0);
}
