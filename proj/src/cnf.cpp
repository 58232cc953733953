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

#include "degen/cnf.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace degen {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.size() != 3)
    throw ParseError("clause must have exactly 3 literals, got " +
                     std::to_string(literals_.size()));
  for (const Literal& lit : literals_)
    if (lit.variable < 1)
      throw ParseError("literal variable index must be >= 1");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (literals_[static_cast<std::size_t>(i)].variable ==
          literals_[static_cast<std::size_t>(j)].variable)
        throw ParseError("clause repeats variable x" +
                         std::to_string(literals_[static_cast<std::size_t>(i)].variable));
}

const Literal& Clause::literal(int position) const {
  if (position < 0 || position > 2)
    throw std::invalid_argument("Clause::literal: position must be in [0..2]");
  return literals_[static_cast<std::size_t>(position)];
}

void validateFormula(const CnfFormula& f) {
  if (f.numVars < 1) throw ParseError("formula must have at least one variable");
  if (f.clauses.empty()) throw ParseError("formula must have at least one clause");
  for (const Clause& clause : f.clauses)
    for (const Literal& lit : clause.literals())
      if (lit.variable > f.numVars)
        throw ParseError("literal " + toString(lit) + " exceeds declared variable count " +
                         std::to_string(f.numVars));
}

CnfFormula parseDimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool sawHeader = false;
  int declaredVars = 0;
  int declaredClauses = 0;
  std::vector<Literal> pending;
  std::vector<Clause> clauses;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;       // blank line
    if (first == "c" || first[0] == 'c') {  // comment
      continue;
    }
    if (first == "p") {
      if (sawHeader) throw ParseError("duplicate DIMACS header");
      std::string kind;
      if (!(tokens >> kind) || kind != "cnf")
        throw ParseError("malformed DIMACS header: expected 'p cnf <vars> <clauses>'");
      if (!(tokens >> declaredVars >> declaredClauses))
        throw ParseError("malformed DIMACS header: expected 'p cnf <vars> <clauses>'");
      std::string extra;
      if (tokens >> extra) throw ParseError("malformed DIMACS header: trailing tokens");
      if (declaredVars < 1 || declaredClauses < 1)
        throw ParseError("DIMACS header must declare at least one variable and one clause");
      sawHeader = true;
      continue;
    }
    if (!sawHeader) throw ParseError("clause data before DIMACS header");
    // Clause tokens; a clause ends at 0 and may span lines.
    tokens.clear();
    tokens.str(line);
    long value = 0;
    while (tokens >> value) {
      if (value == 0) {
        clauses.emplace_back(std::move(pending));
        pending.clear();
      } else {
        long var = value < 0 ? -value : value;
        if (var > declaredVars)
          throw ParseError("literal " + std::to_string(value) +
                           " exceeds declared variable count " +
                           std::to_string(declaredVars));
        pending.push_back(Literal{static_cast<int>(var), value < 0});
      }
    }
    if (!tokens.eof()) throw ParseError("malformed clause token in line: " + line);
  }

  if (!sawHeader) throw ParseError("missing DIMACS header");
  if (!pending.empty()) throw ParseError("unterminated clause (missing trailing 0)");
  if (static_cast<int>(clauses.size()) != declaredClauses)
    throw ParseError("header declares " + std::to_string(declaredClauses) +
                     " clauses but " + std::to_string(clauses.size()) + " were given");

  CnfFormula formula{declaredVars, std::move(clauses)};
  validateFormula(formula);
  return formula;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.numVars)
    throw std::invalid_argument("satisfies: assignment length must equal variable count");
  for (const Clause& clause : f.clauses) {
    bool satisfied = false;
    for (const Literal& lit : clause.literals()) {
      bool value = a[static_cast<std::size_t>(lit.variable - 1)];
      if (lit.negated ? !value : value) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

std::optional<Assignment> bruteForceSat(const CnfFormula& f, int maxVars) {
  validateFormula(f);
  if (f.numVars > maxVars) {
    std::ostringstream reason;
    reason << "formula has " << f.numVars << " variables > cap " << maxVars
           << "; raise the cap to search anyway";
    throw BudgetError(reason.str());
  }
  const int v = f.numVars;
  const std::uint64_t limit = std::uint64_t{1} << v;
  Assignment a(static_cast<std::size_t>(v));
  for (std::uint64_t counter = 0; counter < limit; ++counter) {
    // Variable 1 is the most significant bit, so counter order is
    // lexicographic order on assignments with false < true.
    for (int i = 0; i < v; ++i)
      a[static_cast<std::size_t>(i)] = (counter >> (v - 1 - i)) & 1;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

std::string toString(const Literal& lit) {
  return (lit.negated ? "-x" : "x") + std::to_string(lit.variable);
}

}  // namespace degen
