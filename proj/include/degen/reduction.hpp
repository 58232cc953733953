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

#ifndef DEGEN_REDUCTION_HPP_
#define DEGEN_REDUCTION_HPP_

// From 3-CNF satisfiability to game degeneracy.
//
// A formula with n clauses becomes a bimatrix game whose columns are the
// seven satisfying bit patterns of each clause (7n columns) and whose rows
// are those columns again, one aggregate row, and one row per conflicting
// pair of clause assignments.  The row player's payoffs are built so a
// satisfying assignment induces a column mixture with n + 1 tied best
// responses on support n — a degeneracy witness — while any degeneracy
// forces a satisfying assignment.  Satisfiability of the formula is thereby
// equivalent to degeneracy of the game.
//
// The number D of conflicting pairs is quadratic in n and the tie-breaking
// constant epsilon = 1/(6*3^(2D)) is correspondingly tiny, which is why the
// whole pipeline works in exact rational arithmetic.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degen/cnf.hpp"
#include "degen/degeneracy.hpp"
#include "degen/game.hpp"
#include "degen/types.hpp"

namespace degen {

// One of the seven ways to satisfy one clause: clause index (0-based) plus a
// bit pattern in [1..7] giving each literal's truth value, most significant
// bit first.
struct ClauseAssignment {
  Index clause;
  int pattern;

  bool operator==(const ClauseAssignment&) const = default;
  friend bool operator<(const ClauseAssignment& a, const ClauseAssignment& b) {
    return a.clause != b.clause ? a.clause < b.clause : a.pattern < b.pattern;
  }
};

// An unordered conflicting pair stored in canonical order (first < second).
// Its position d in the enumeration fixes the payoff 1/2 + 3^d * epsilon on
// the corresponding row of the constructed game.
struct ConflictPair {
  ClauseAssignment first;
  ClauseAssignment second;

  bool operator==(const ConflictPair&) const = default;
};

// The constructed game together with everything needed to interpret it.
struct ReductionGame {
  CnfFormula formula;
  BimatrixGame game;
  Index clauseCount = 0;                // n
  std::vector<ConflictPair> conflicts;  // ordering g; d = position, D = size
  Rational epsilon;                     // 1/(6*3^(2D))

  Index conflictCount() const { return static_cast<Index>(conflicts.size()); }
};

// Everything verify_reduction checked, and how it came out.
struct ReductionReport {
  bool satisfiable = false;
  std::optional<Assignment> assignment;       // lexicographically least, if any
  std::optional<DegeneracyWitness> witness;   // built iff satisfiable
  Index witnessSupportSize = 0;
  Index witnessResponseCount = 0;
  bool witnessVerified = false;  // support exceeded with exactly n+1 responses
  bool shapeOk = false;          // dimensions, identity block, aggregate row, pair rows
  bool ladderOk = false;         // pair-row values strictly increasing within (1/2, 1)
  bool chainAuditOk = false;     // (1 + 6*3^d*eps)(1 - 2*3^d*eps) > 1 + 2*3^d*eps, all d
  bool massAuditOk = false;      // 7n * 4*3^D*eps < 1 - 2*3^D*eps
  bool columnSideOk = false;     // every row of B has exactly one nonzero (a 1)
  std::string oracleNote;        // why the exhaustive oracle did not run
  bool consistent = false;       // all performed checks passed
};

// The partial assignment induced by taking pattern k on a clause: for each
// literal position w (0..2), the literal's truth value is bit 2-w of k and
// the underlying variable is set accordingly.  Entries are (variable, value)
// in literal order.
std::array<std::pair<int, bool>, 3> inducedPartialAssignment(const Clause& clause,
                                                             int pattern);

// True iff the two clause assignments set some shared variable to different
// values.  Assignments on the same clause always conflict when the patterns
// differ (some bit flips on a distinct variable).
bool conflicts(const CnfFormula& f, const ClauseAssignment& a,
               const ClauseAssignment& b);

// All conflicting pairs in canonical lexicographic order; position = d.
// Workers split the pair space into contiguous chunks whose results are
// concatenated in order, so the output never depends on the worker count.
std::vector<ConflictPair> enumerateConflictPairs(const CnfFormula& f,
                                                 int workers = 1);

// The tie-breaking constant for D conflicting pairs: 1/(6*3^(2D)) exactly.
Rational reductionEpsilon(Index conflictCount);

// Builds the full game: A per the three payoff rules, B with exactly one 1
// per row (which provably keeps the column side nondegenerate), and labels
// c<i>^<k>, f, and c<i>^<p>,c<j>^<q> naming rows and columns.
ReductionGame buildGame(const CnfFormula& f, int workers = 1);

// The degeneracy witness induced by a satisfying assignment: weight 1/n on
// each clause's active column.  Throws std::invalid_argument when the
// assignment does not satisfy the formula.
DegeneracyWitness witnessFromAssignment(const ReductionGame& rg, const Assignment& a);

// End-to-end machine check of the construction on one formula: decides
// satisfiability by brute force (cap propagates as BudgetError), extracts and
// verifies the witness when satisfiable, audits the structural and
// proof-side inequalities, and reports why the exhaustive game oracle was
// skipped (the smallest constructible game already exceeds its budget).
ReductionReport verifyReduction(const CnfFormula& f, int satCap = 26);

}  // namespace degen

#endif  // DEGEN_REDUCTION_HPP_
