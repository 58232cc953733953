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

#ifndef DEGEN_DEGENERACY_HPP_
#define DEGEN_DEGENERACY_HPP_

// Exact degeneracy decision for bimatrix games.
//
// A game is degenerate when some mixed strategy of one player has more pure
// best responses than the size of its support.  The decision procedure
// enumerates candidate (support, best-response) index pairs (S, T) with
// |T| = |S| + 1 and asks, exactly, whether some mixed strategy with support
// inside S makes every row of T a best response.  Each candidate reduces to a
// linear feasibility problem over the rationals, so the answer carries no
// rounding error in either direction.
//
// The search space is exponential in the smaller dimension, which is the
// expected price: the decision problem is NP-complete.  A SearchBudget caps
// the instance size; when the cap trips, the verdict is Unknown rather than
// a guess.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degen/feasibility.hpp"
#include "degen/game.hpp"
#include "degen/types.hpp"

namespace degen {

// Which player's mixed strategy exhibits the degeneracy.  A Row witness is a
// *column* player's strategy y with too many row best responses against A; a
// Column witness is a row player's strategy x with too many column best
// responses against B.
enum class Side { Row, Column };

// A checkable certificate of degeneracy: a mixed strategy together with the
// best-response set that exceeds its support.
struct DegeneracyWitness {
  Side side;
  MixedStrategy strategy;
  BestResponseSet bestResponses;
};

// Outcome of a degeneracy check.  Unknown is reserved for budget refusals;
// within budget the procedure is a decision procedure, not a heuristic.
struct Verdict {
  enum class Kind { Degenerate, Nondegenerate, Unknown };

  Kind kind;
  std::optional<DegeneracyWitness> witness;  // present iff kind == Degenerate
  std::string reason;                        // human-readable, set for Unknown
};

// Limits on the exhaustive search.  maxTotalDim bounds m + n of the payoff
// matrix handed to one side's check; maxPairs bounds the exact count of
// (S, T) candidates; maxSupport restricts the support sizes tried (leaving
// the search incomplete, hence Unknown when nothing is found under it).
struct SearchBudget {
  int maxTotalDim = 24;
  std::uint64_t maxPairs = 10'000'000;
  std::optional<int> maxSupport;
  int workers = 1;
  FeasMethod method = FeasMethod::Simplex;
};

// True when strategy y certifies degeneracy of payoff matrix m, i.e. the
// best-response set of m against y is strictly larger than y's support.
bool verifyWitness(const RationalMatrix& m, const MixedStrategy& y);

// The feasibility problem for candidate (S, T): a full-dimensional vector y
// with y >= 0, y_j = 0 outside S, sum y = 1, all rows of T tied, and the tied
// value at least every row outside T.  Exposed for cross-validation tests.
FeasibilityProblem tieSystem(const RationalMatrix& m,
                             const std::vector<Index>& support,
                             const std::vector<Index>& responses);

// Decides whether payoff matrix m admits a degenerate mixed strategy of the
// column player (more row best responses than support).  Deterministic: the
// witness reported is the first feasible candidate in the fixed enumeration
// order (support size ascending, then support set lexicographic, then
// response set lexicographic), independent of budget.workers.
Verdict checkOneSided(const RationalMatrix& m, const SearchBudget& budget = {});

// Per-side and combined verdicts for a bimatrix game.  The row side checks A
// against column strategies; the column side checks B transposed against row
// strategies.  The overall verdict is Degenerate if either side is (with that
// side's witness), Unknown if neither side is Degenerate and at least one is
// Unknown, and Nondegenerate otherwise.
struct GameVerdict {
  Verdict row;
  Verdict column;
  Verdict overall;
};

GameVerdict checkGame(const BimatrixGame& game, const SearchBudget& budget = {});

// True when every payoff of both matrices is 0 or 1.
bool isWinLose(const BimatrixGame& game);

// Structural nondegeneracy tests for win-lose games.  The "paper" form of the
// one-sided predicate asks that every column of m have at most one nonzero
// entry; it is stated in the literature but fails on all-zero columns (a zero
// column admits strategies with arbitrarily many tied best responses as soon
// as m has two or more rows).  The corrected form requires every column to
// have exactly one nonzero entry, or m to have a single row; under it the
// implication "predicate => nondegenerate" holds.  Both are exposed so the
// discrepancy can be exhibited.
bool winLosePaperOneSided(const RationalMatrix& m);
bool winLoseCorrectedOneSided(const RationalMatrix& m);

// Game-level forms: the row side inspects columns of A, the column side rows
// of B (equivalently columns of B transposed).
bool winLosePaperPredicate(const BimatrixGame& game);
bool winLoseCorrectedPredicate(const BimatrixGame& game);

}  // namespace degen

#endif  // DEGEN_DEGENERACY_HPP_
