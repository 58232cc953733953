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

// degen: exact degeneracy checks for bimatrix games and linear systems, the
// 3-CNF-to-game construction, and its end-to-end verifier.
//
// Exit codes encode execution status, never the mathematical verdict:
//   0  ran to completion (whatever the verdict),
//   2  input error (unreadable/malformed files, precondition violations),
//   3  resource limit (budget refusals, including Unknown check verdicts).
// Verdicts are printed, so pipelines can distinguish "tool failed" from
// "game is degenerate".  --json replaces the human report with one JSON line
// carrying every number the report shows.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degen/cnf.hpp"
#include "degen/degeneracy.hpp"
#include "degen/game.hpp"
#include "degen/gameio.hpp"
#include "degen/lpcheck.hpp"
#include "degen/reduction.hpp"
#include "degen/types.hpp"

namespace {

using nlohmann::json;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw degen::ParseError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

std::string kindWord(degen::Verdict::Kind kind) {
  switch (kind) {
    case degen::Verdict::Kind::Degenerate: return "DEGENERATE";
    case degen::Verdict::Kind::Nondegenerate: return "NONDEGENERATE";
    case degen::Verdict::Kind::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string kindKey(degen::Verdict::Kind kind) {
  switch (kind) {
    case degen::Verdict::Kind::Degenerate: return "degenerate";
    case degen::Verdict::Kind::Nondegenerate: return "nondegenerate";
    case degen::Verdict::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

json witnessJson(const degen::DegeneracyWitness& witness) {
  json strategy = json::array();
  for (degen::Index i = 0; i < witness.strategy.dim(); ++i)
    strategy.push_back(degen::toString(witness.strategy(i)));
  json responses = json::array();
  for (degen::Index i : witness.bestResponses.indices) responses.push_back(i);
  json support = json::array();
  for (degen::Index i : degen::supportOf(witness.strategy).indices) support.push_back(i);
  return json{{"side", witness.side == degen::Side::Row ? "row" : "col"},
              {"strategy", strategy},
              {"support", support},
              {"supportSize", support.size()},
              {"bestResponses", responses},
              {"bestResponseCount", responses.size()},
              {"u", degen::toString(witness.bestResponses.value)}};
}

json verdictJson(const degen::Verdict& verdict) {
  json out{{"verdict", kindKey(verdict.kind)}, {"reason", verdict.reason}};
  out["witness"] = verdict.witness ? witnessJson(*verdict.witness) : json(nullptr);
  return out;
}

void printVerdictHuman(const std::string& name, const degen::Verdict& verdict) {
  std::cout << name << ": " << kindWord(verdict.kind) << '\n';
  if (verdict.witness) {
    const degen::DegeneracyWitness& w = *verdict.witness;
    std::cout << "  support size " << degen::supportOf(w.strategy).size()
              << ", best responses " << w.bestResponses.size() << ", u = "
              << degen::toString(w.bestResponses.value) << '\n';
  }
  if (verdict.kind == degen::Verdict::Kind::Unknown)
    std::cout << "  reason: " << verdict.reason << '\n';
}

// Shared flags for the `check` subcommand.
struct CheckOptions {
  std::string gamePath;
  std::string side = "both";
  int maxDim = 24;
  std::uint64_t budget = 10'000'000;
  std::optional<int> maxSupport;
  int workers = 1;
  std::string method = "simplex";
  std::string witnessOut;
  bool jsonOut = false;
};

degen::SearchBudget toBudget(const CheckOptions& options) {
  degen::SearchBudget budget;
  budget.maxTotalDim = options.maxDim;
  budget.maxPairs = options.budget;
  budget.maxSupport = options.maxSupport;
  budget.workers = options.workers;
  budget.method = options.method == "elimination" ? degen::FeasMethod::Elimination
                                                  : degen::FeasMethod::Simplex;
  return budget;
}

int runCheck(const CheckOptions& options) {
  degen::BimatrixGame game = degen::parseGame(readFile(options.gamePath));
  degen::SearchBudget budget = toBudget(options);

  std::optional<degen::Verdict> row;
  std::optional<degen::Verdict> column;
  std::optional<degen::Verdict> overall;
  if (options.side == "both") {
    degen::GameVerdict verdict = degen::checkGame(game, budget);
    row = verdict.row;
    column = verdict.column;
    overall = verdict.overall;
  } else if (options.side == "row") {
    row = degen::checkOneSided(game.A, budget);
  } else {
    degen::RationalMatrix bT = game.B.transpose();
    column = degen::checkOneSided(bT, budget);
    if (column->witness) column->witness->side = degen::Side::Column;
  }

  // The witness reported is the first Degenerate side in row, column order.
  const degen::DegeneracyWitness* witness = nullptr;
  if (row && row->witness) witness = &*row->witness;
  if (!witness && column && column->witness) witness = &*column->witness;

  std::string witnessPath;
  std::string witnessText;
  if (witness) {
    witnessText = degen::serializeWitness(degen::WitnessDocument{witness->side,
                                                                 witness->strategy});
    if (!options.witnessOut.empty()) {
      writeFile(options.witnessOut, witnessText);
      witnessPath = options.witnessOut;
    }
  }

  bool unknownSeen = false;
  for (const auto* verdict : {&row, &column, &overall})
    if (*verdict && (*verdict)->kind == degen::Verdict::Kind::Unknown)
      unknownSeen = true;

  if (options.jsonOut) {
    json out{{"command", "check"}, {"file", options.gamePath}};
    out["row"] = row ? verdictJson(*row) : json(nullptr);
    out["column"] = column ? verdictJson(*column) : json(nullptr);
    out["overall"] = overall ? verdictJson(*overall) : json(nullptr);
    out["witnessPath"] = witnessPath.empty() ? json(nullptr) : json(witnessPath);
    std::cout << out.dump() << '\n';
  } else {
    if (row) printVerdictHuman("row side", *row);
    if (column) printVerdictHuman("column side", *column);
    if (overall) printVerdictHuman("overall", *overall);
    if (witness && witnessPath.empty()) std::cout << '\n' << witnessText;
    if (!witnessPath.empty()) std::cout << "witness written to " << witnessPath << '\n';
  }
  return unknownSeen ? 3 : 0;
}

int runWitness(const std::string& gamePath, const std::string& witnessPath,
               bool jsonOut) {
  degen::BimatrixGame game = degen::parseGame(readFile(gamePath));
  degen::WitnessDocument doc = degen::parseWitness(readFile(witnessPath));

  degen::RationalMatrix matrix =
      doc.side == degen::Side::Row ? game.A : degen::RationalMatrix(game.B.transpose());
  if (doc.strategy.dim() != matrix.cols())
    throw std::invalid_argument("witness dimension " + std::to_string(doc.strategy.dim()) +
                                " does not match the checked side's strategy space " +
                                std::to_string(matrix.cols()));
  bool accepted = degen::verifyWitness(matrix, doc.strategy);
  degen::BestResponseSet responses = degen::bestResponseSet(matrix, doc.strategy);
  std::size_t support = degen::supportOf(doc.strategy).size();

  if (jsonOut) {
    json out{{"command", "witness"},
             {"side", doc.side == degen::Side::Row ? "row" : "col"},
             {"supportSize", support},
             {"bestResponseCount", responses.size()},
             {"u", degen::toString(responses.value)},
             {"accepted", accepted}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "side: " << (doc.side == degen::Side::Row ? "row" : "col") << '\n'
              << "support size: " << support << '\n'
              << "best responses: " << responses.size() << '\n'
              << "u = " << degen::toString(responses.value) << '\n'
              << (accepted ? "ACCEPT" : "REJECT") << '\n';
  }
  return 0;
}

int runReduce(const std::string& cnfPath, const std::string& outPath,
              const std::string& witnessOut, bool meta, int workers, int maxVars,
              bool jsonOut) {
  degen::CnfFormula formula = degen::parseDimacs(readFile(cnfPath));
  degen::ReductionGame rg = degen::buildGame(formula, workers);
  writeFile(outPath, degen::serializeGame(rg.game));

  std::optional<bool> satisfiable;
  std::string witnessPath;
  if (!witnessOut.empty()) {
    std::optional<degen::Assignment> assignment = degen::bruteForceSat(formula, maxVars);
    satisfiable = assignment.has_value();
    if (assignment) {
      degen::DegeneracyWitness witness = degen::witnessFromAssignment(rg, *assignment);
      writeFile(witnessOut, degen::serializeWitness(degen::WitnessDocument{
                                witness.side, witness.strategy}));
      witnessPath = witnessOut;
    }
  }

  if (jsonOut) {
    json out{{"command", "reduce"},
             {"clauses", rg.clauseCount},
             {"conflicts", rg.conflictCount()},
             {"epsilon", degen::toString(rg.epsilon)},
             {"rows", rg.game.A.rows()},
             {"cols", rg.game.A.cols()},
             {"gamePath", outPath}};
    out["satisfiable"] = satisfiable ? json(*satisfiable) : json(nullptr);
    out["witnessPath"] = witnessPath.empty() ? json(nullptr) : json(witnessPath);
    if (meta) {
      json conflicts = json::array();
      for (degen::Index d = 0; d < rg.conflictCount(); ++d)
        conflicts.push_back(
            rg.game.rowLabels[static_cast<std::size_t>(7 * rg.clauseCount + 1 + d)]);
      out["conflictOrdering"] = conflicts;
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "game written to " << outPath << " (" << rg.game.A.rows() << "x"
              << rg.game.A.cols() << ")\n";
    if (meta) {
      std::cout << "clauses " << rg.clauseCount << '\n'
                << "conflicts " << rg.conflictCount() << '\n'
                << "epsilon " << degen::toString(rg.epsilon) << '\n';
      for (degen::Index d = 0; d < rg.conflictCount(); ++d)
        std::cout << "conflict " << d << " "
                  << rg.game.rowLabels[static_cast<std::size_t>(7 * rg.clauseCount + 1 + d)]
                  << '\n';
    }
    if (satisfiable)
      std::cout << "formula " << (*satisfiable ? "SAT" : "UNSAT") << '\n';
    if (!witnessPath.empty())
      std::cout << "witness written to " << witnessPath << '\n';
    else if (satisfiable && !*satisfiable && !witnessOut.empty())
      std::cout << "no witness: formula unsatisfiable\n";
  }
  return 0;
}

int runSat(const std::string& cnfPath, int maxVars, bool jsonOut) {
  degen::CnfFormula formula = degen::parseDimacs(readFile(cnfPath));
  std::optional<degen::Assignment> assignment = degen::bruteForceSat(formula, maxVars);
  if (jsonOut) {
    json out{{"command", "sat"}, {"satisfiable", assignment.has_value()}};
    if (assignment) {
      json values = json::array();
      for (bool v : *assignment) values.push_back(v);
      out["assignment"] = values;
    } else {
      out["assignment"] = json(nullptr);
    }
    std::cout << out.dump() << '\n';
  } else {
    if (assignment) {
      std::cout << "SAT\nassignment";
      for (bool v : *assignment) std::cout << ' ' << (v ? 1 : 0);
      std::cout << '\n';
    } else {
      std::cout << "UNSAT\n";
    }
  }
  return 0;
}

int runVerifyReduction(const std::string& cnfPath, int maxVars, bool jsonOut) {
  degen::CnfFormula formula = degen::parseDimacs(readFile(cnfPath));
  degen::ReductionReport report = degen::verifyReduction(formula, maxVars);
  const char* pass = "PASS";
  const char* fail = "FAIL";

  if (jsonOut) {
    json out{{"command", "verify-reduction"},
             {"satisfiable", report.satisfiable},
             {"witnessVerified", report.witnessVerified},
             {"witnessSupportSize", report.witnessSupportSize},
             {"witnessResponseCount", report.witnessResponseCount},
             {"shapeOk", report.shapeOk},
             {"ladderOk", report.ladderOk},
             {"chainAuditOk", report.chainAuditOk},
             {"massAuditOk", report.massAuditOk},
             {"columnSideOk", report.columnSideOk},
             {"oracleNote", report.oracleNote},
             {"consistent", report.consistent}};
    out["witness"] = report.witness ? witnessJson(*report.witness) : json(nullptr);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "satisfiable: " << (report.satisfiable ? "SAT" : "UNSAT") << '\n';
    if (report.satisfiable) {
      std::cout << "witness: " << (report.witnessVerified ? "VERIFIED" : "REJECTED")
                << " (support " << report.witnessSupportSize << ", best responses "
                << report.witnessResponseCount << " = n+1)" << '\n';
    } else {
      std::cout << "witness: none (formula unsatisfiable)\n";
    }
    std::cout << "shape: " << (report.shapeOk ? pass : fail) << '\n'
              << "ladder: " << (report.ladderOk ? pass : fail) << '\n'
              << "chain audit: " << (report.chainAuditOk ? pass : fail) << '\n'
              << "mass audit: " << (report.massAuditOk ? pass : fail) << '\n'
              << "column side: " << (report.columnSideOk ? pass : fail) << '\n'
              << "oracle: SKIPPED (" << report.oracleNote << ")\n"
              << "verdict: " << (report.consistent ? "CONSISTENT" : "INCONSISTENT")
              << '\n';
  }
  return 0;
}

int runLp(const std::string& lpPath, degen::Index maxCols, bool jsonOut) {
  degen::LinearSystem system = degen::parseLpSystem(readFile(lpPath));
  std::optional<degen::BasisCertificate> certificate =
      degen::isLpDegenerate(system, maxCols);

  if (jsonOut) {
    json out{{"command", "lp"}, {"degenerate", certificate.has_value()}};
    if (certificate) {
      json columns = json::array();
      for (degen::Index c : certificate->columns) columns.push_back(c);
      json solution = json::array();
      for (degen::Index i = 0; i < certificate->solution.size(); ++i)
        solution.push_back(degen::toString(certificate->solution(i)));
      json zeros = json::array();
      for (degen::Index z : certificate->zeroPositions) zeros.push_back(z);
      out["basis"] = columns;
      out["solution"] = solution;
      out["zeroPositions"] = zeros;
    } else {
      out["basis"] = json(nullptr);
      out["solution"] = json(nullptr);
      out["zeroPositions"] = json(nullptr);
    }
    std::cout << out.dump() << '\n';
  } else {
    if (certificate) {
      std::cout << "LP DEGENERATE\nbasis";
      for (degen::Index c : certificate->columns) std::cout << ' ' << c;
      std::cout << "\nsolution";
      for (degen::Index i = 0; i < certificate->solution.size(); ++i)
        std::cout << ' ' << degen::toString(certificate->solution(i));
      std::cout << "\nzero positions";
      for (degen::Index z : certificate->zeroPositions) std::cout << ' ' << z;
      std::cout << '\n';
    } else {
      std::cout << "LP NONDEGENERATE\n";
    }
  }
  return 0;
}

int runWinLose(const std::string& gamePath, bool usePaper, bool useCorrected,
               bool jsonOut) {
  degen::BimatrixGame game = degen::parseGame(readFile(gamePath));
  if (!degen::isWinLose(game))
    throw std::invalid_argument("winlose requires a game whose entries are all 0 or 1");
  if (!usePaper && !useCorrected) useCorrected = true;  // corrected is the default

  std::optional<bool> paper;
  std::optional<bool> corrected;
  if (usePaper) paper = degen::winLosePaperPredicate(game);
  if (useCorrected) corrected = degen::winLoseCorrectedPredicate(game);
  bool discrepancy = paper && corrected && *paper != *corrected;

  auto word = [](bool nondegenerate) {
    return nondegenerate ? "NONDEGENERATE" : "DEGENERATE";
  };
  if (jsonOut) {
    json out{{"command", "winlose"}, {"discrepancy", discrepancy}};
    out["paper"] = paper ? json(kindKey(*paper ? degen::Verdict::Kind::Nondegenerate
                                               : degen::Verdict::Kind::Degenerate))
                         : json(nullptr);
    out["corrected"] =
        corrected ? json(kindKey(*corrected ? degen::Verdict::Kind::Nondegenerate
                                            : degen::Verdict::Kind::Degenerate))
                  : json(nullptr);
    std::cout << out.dump() << '\n';
  } else {
    if (paper) std::cout << "paper: " << word(*paper) << '\n';
    if (corrected) std::cout << "corrected: " << word(*corrected) << '\n';
    if (discrepancy)
      std::cout << "note: predicates disagree (the literal condition misses "
                   "all-zero columns/rows); trust the corrected verdict\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact degeneracy checks for bimatrix games and linear systems"};
  app.require_subcommand(1);

  // DEGEN_BUDGET overrides the default candidate-pair budget; an explicit
  // --budget flag still wins.
  std::uint64_t defaultBudget = 10'000'000;
  if (const char* env = std::getenv("DEGEN_BUDGET")) {
    std::istringstream in(env);
    std::uint64_t value = 0;
    if (!(in >> value) || !in.eof() || value == 0) {
      std::cerr << "error: DEGEN_BUDGET must be a positive integer\n";
      return 2;
    }
    defaultBudget = value;
  }

  CheckOptions check;
  check.budget = defaultBudget;
  CLI::App* checkCmd = app.add_subcommand("check", "Decide degeneracy of a game");
  checkCmd->add_option("gamefile", check.gamePath, "game file")->required();
  checkCmd->add_option("--side", check.side, "side to check: row, col, or both")
      ->check(CLI::IsMember({"row", "col", "both"}))
      ->capture_default_str();
  checkCmd->add_option("--max-dim", check.maxDim, "refuse games with rows+cols above this")
      ->capture_default_str();
  checkCmd->add_option("--budget", check.budget,
                       "max candidate (support, response) pairs per side")
      ->capture_default_str();
  int maxSupportFlag = 0;
  CLI::Option* maxSupportOpt = checkCmd->add_option(
      "--max-support", maxSupportFlag,
      "cap support sizes (partial search: Unknown instead of Nondegenerate)");
  checkCmd->add_option("--workers", check.workers, "worker threads")
      ->capture_default_str();
  checkCmd->add_option("--method", check.method, "feasibility method")
      ->check(CLI::IsMember({"simplex", "elimination"}))
      ->capture_default_str();
  checkCmd->add_option("--witness-out", check.witnessOut, "write the witness here");
  checkCmd->add_flag("--json", check.jsonOut, "one-line JSON output");

  std::string witnessGamePath, witnessFilePath;
  bool witnessJsonOut = false;
  CLI::App* witnessCmd =
      app.add_subcommand("witness", "Verify a degeneracy witness against a game");
  witnessCmd->add_option("gamefile", witnessGamePath, "game file")->required();
  witnessCmd->add_option("witnessfile", witnessFilePath, "witness file")->required();
  witnessCmd->add_flag("--json", witnessJsonOut, "one-line JSON output");

  std::string reduceCnfPath, reduceOutPath, reduceWitnessOut;
  bool reduceMeta = false, reduceJsonOut = false;
  int reduceWorkers = 1, reduceMaxVars = 26;
  CLI::App* reduceCmd =
      app.add_subcommand("reduce", "Build the game for a 3-CNF formula");
  reduceCmd->add_option("cnffile", reduceCnfPath, "DIMACS CNF file")->required();
  reduceCmd->add_option("-o,--output", reduceOutPath, "output game file")->required();
  reduceCmd->add_option("--witness-out", reduceWitnessOut,
                        "extract a witness here when the formula is satisfiable");
  reduceCmd->add_flag("--meta", reduceMeta, "print n, D, epsilon, conflict ordering");
  reduceCmd->add_option("--workers", reduceWorkers, "worker threads")
      ->capture_default_str();
  reduceCmd->add_option("--max-vars", reduceMaxVars, "brute-force SAT variable cap")
      ->capture_default_str();
  reduceCmd->add_flag("--json", reduceJsonOut, "one-line JSON output");

  std::string satCnfPath;
  int satMaxVars = 26;
  bool satJsonOut = false;
  CLI::App* satCmd = app.add_subcommand("sat", "Brute-force satisfiability");
  satCmd->add_option("cnffile", satCnfPath, "DIMACS CNF file")->required();
  satCmd->add_option("--max-vars", satMaxVars, "variable cap")->capture_default_str();
  satCmd->add_flag("--json", satJsonOut, "one-line JSON output");

  std::string vrCnfPath;
  int vrMaxVars = 26;
  bool vrJsonOut = false;
  CLI::App* vrCmd = app.add_subcommand(
      "verify-reduction", "Machine-check the construction on one formula");
  vrCmd->add_option("cnffile", vrCnfPath, "DIMACS CNF file")->required();
  vrCmd->add_option("--max-vars", vrMaxVars, "brute-force SAT variable cap")
      ->capture_default_str();
  vrCmd->add_flag("--json", vrJsonOut, "one-line JSON output");

  std::string lpPath;
  degen::Index lpMaxCols = 20;
  bool lpJsonOut = false;
  CLI::App* lpCmd = app.add_subcommand("lp", "Decide LP degeneracy of Ax=b, x>=0");
  lpCmd->add_option("lpfile", lpPath, "linear system file")->required();
  lpCmd->add_option("--max-cols", lpMaxCols, "refuse systems with more columns")
      ->capture_default_str();
  lpCmd->add_flag("--json", lpJsonOut, "one-line JSON output");

  std::string wlGamePath;
  bool wlPaper = false, wlCorrected = false, wlJsonOut = false;
  CLI::App* wlCmd = app.add_subcommand(
      "winlose", "Structural nondegeneracy predicates for win-lose games");
  wlCmd->add_option("gamefile", wlGamePath, "game file")->required();
  wlCmd->add_flag("--paper", wlPaper, "the literal predicate");
  wlCmd->add_flag("--corrected", wlCorrected, "the corrected predicate (default)");
  wlCmd->add_flag("--json", wlJsonOut, "one-line JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is an input error
  } catch (const degen::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*checkCmd) {
      if (*maxSupportOpt) check.maxSupport = maxSupportFlag;
      return runCheck(check);
    }
    if (*witnessCmd) return runWitness(witnessGamePath, witnessFilePath, witnessJsonOut);
    if (*reduceCmd)
      return runReduce(reduceCnfPath, reduceOutPath, reduceWitnessOut, reduceMeta,
                       reduceWorkers, reduceMaxVars, reduceJsonOut);
    if (*satCmd) return runSat(satCnfPath, satMaxVars, satJsonOut);
    if (*vrCmd) return runVerifyReduction(vrCnfPath, vrMaxVars, vrJsonOut);
    if (*lpCmd) return runLp(lpPath, lpMaxCols, lpJsonOut);
    if (*wlCmd) return runWinLose(wlGamePath, wlPaper, wlCorrected, wlJsonOut);
  } catch (const degen::BudgetError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const degen::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
