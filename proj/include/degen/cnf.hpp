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

#ifndef DEGEN_CNF_HPP_
#define DEGEN_CNF_HPP_

// 3-CNF formulas: DIMACS parsing, evaluation, and brute-force satisfiability.
//
// Clauses are normalized to exactly three literals on pairwise distinct
// variables; inputs violating this are rejected at parse time.  Literal order
// within a clause is preserved because downstream consumers assign meaning to
// literal positions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degen/types.hpp"

namespace degen {

// One literal: a 1-based variable index, possibly negated.
struct Literal {
  int variable;  // >= 1
  bool negated;

  bool operator==(const Literal&) const = default;
};

// Exactly three literals on pairwise distinct variables; order preserved.
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  const Literal& literal(int position) const;  // position in [0..2]

 private:
  std::vector<Literal> literals_;
};

// A 3-CNF formula with at least one clause.
struct CnfFormula {
  int numVars = 0;
  std::vector<Clause> clauses;
};

// Total truth assignment; entry v-1 is the value of variable v.
using Assignment = std::vector<bool>;

// Validates clause count >= 1, variable indices within numVars.
void validateFormula(const CnfFormula& f);

// Parses DIMACS CNF text: a `p cnf <vars> <clauses>` header, `c` comment
// lines, and zero-terminated clauses (which may span lines).  Rejects clauses
// without exactly three literals, repeated variables within a clause,
// malformed headers, and clause-count mismatches.
CnfFormula parseDimacs(std::string_view text);

bool satisfies(const CnfFormula& f, const Assignment& a);

// First satisfying assignment in lexicographic order (all-false least,
// variable 1 most significant), or nullopt when unsatisfiable.  Formulas
// with more than maxVars variables are refused with a BudgetError.
std::optional<Assignment> bruteForceSat(const CnfFormula& f, int maxVars = 26);

// "x3" / "-x3" rendering, mainly for error messages and reports.
std::string toString(const Literal& lit);

}  // namespace degen

#endif  // DEGEN_CNF_HPP_
