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

#include "degen/degeneracy.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace degen {

namespace {

constexpr std::uint64_t kNotFound = UINT64_MAX;

// Candidates handed to one worker per synchronization round.  The value only
// affects scheduling, never the result: every round is resolved by taking the
// minimum feasible index over the whole contiguous span it covers.
constexpr std::uint64_t kRoundChunk = 256;

Integer binomial(Index n, Index k) {
  if (k < 0 || k > n) return Integer(0);
  Integer result(1);
  for (Index i = 0; i < k; ++i) {
    result *= Integer(n - i);
    result /= Integer(i + 1);  // exact: the partial product is C(n, i + 1)
  }
  return result;
}

// The rank-th k-subset of {0, ..., n-1} in lexicographic order.
std::vector<Index> unrankCombination(Index n, Index k, Integer rank) {
  std::vector<Index> combo;
  combo.reserve(static_cast<std::size_t>(k));
  Index next = 0;
  for (Index slot = 0; slot < k; ++slot) {
    for (;; ++next) {
      Integer withThis = binomial(n - next - 1, k - slot - 1);
      if (rank < withThis) break;
      rank -= withThis;
    }
    combo.push_back(next);
    ++next;
  }
  return combo;
}

// One support size's slice of the global candidate ordering.
struct Block {
  Index supportSize;
  std::uint64_t numSupports;   // C(n, k)
  std::uint64_t numResponses;  // C(m, k + 1)
  std::uint64_t start;         // global index of the block's first candidate
};

struct Candidate {
  std::vector<Index> support;
  std::vector<Index> responses;
};

Candidate decodeCandidate(const std::vector<Block>& blocks, Index n, Index rows,
                          std::uint64_t global) {
  for (const Block& block : blocks) {
    std::uint64_t span = block.numSupports * block.numResponses;
    if (global < block.start || global >= block.start + span) continue;
    std::uint64_t offset = global - block.start;
    Integer supportRank(offset / block.numResponses);
    Integer responseRank(offset % block.numResponses);
    return Candidate{
        unrankCombination(n, block.supportSize, supportRank),
        unrankCombination(rows, block.supportSize + 1, responseRank)};
  }
  throw std::logic_error("degeneracy search: candidate index out of range");
}

std::string dimensions(const RationalMatrix& m) {
  std::ostringstream out;
  out << m.rows() << "x" << m.cols();
  return out.str();
}

}  // namespace

bool verifyWitness(const RationalMatrix& m, const MixedStrategy& y) {
  if (m.cols() != y.dim())
    throw std::invalid_argument("verifyWitness: strategy dimension mismatch");
  return bestResponseSet(m, y).size() > supportOf(y).size();
}

FeasibilityProblem tieSystem(const RationalMatrix& m,
                             const std::vector<Index>& support,
                             const std::vector<Index>& responses) {
  const Index n = m.cols();
  const Index rows = m.rows();
  if (n == 0 || rows == 0)
    throw std::invalid_argument("tieSystem: empty payoff matrix");
  auto checkIndexSet = [](const std::vector<Index>& set, Index limit,
                          const char* what) {
    if (set.empty()) throw std::invalid_argument(std::string("tieSystem: empty ") + what);
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 0 || set[i] >= limit)
        throw std::invalid_argument(std::string("tieSystem: ") + what + " index out of range");
      if (i > 0 && set[i] <= set[i - 1])
        throw std::invalid_argument(std::string("tieSystem: ") + what + " not strictly increasing");
    }
  };
  checkIndexSet(support, n, "support");
  checkIndexSet(responses, rows, "response set");

  std::vector<char> inSupport(static_cast<std::size_t>(n), 0);
  for (Index j : support) inSupport[static_cast<std::size_t>(j)] = 1;
  std::vector<char> inResponses(static_cast<std::size_t>(rows), 0);
  for (Index t : responses) inResponses[static_cast<std::size_t>(t)] = 1;

  FeasibilityProblem problem;
  problem.numVars = n;

  // Nonnegative inside the support, pinned to zero outside it.
  for (Index j = 0; j < n; ++j) {
    LinearConstraint c;
    c.coeffs = RationalVector::Zero(n);
    c.coeffs(j) = 1;
    c.rel = inSupport[static_cast<std::size_t>(j)] ? Relation::Ge : Relation::Eq;
    c.rhs = 0;
    problem.constraints.push_back(std::move(c));
  }

  // Probabilities sum to one.
  {
    LinearConstraint c;
    c.coeffs = RationalVector::Constant(n, Rational(1));
    c.rel = Relation::Eq;
    c.rhs = 1;
    problem.constraints.push_back(std::move(c));
  }

  // All designated responses tie with the first one...
  const Index top = responses.front();
  for (std::size_t i = 1; i < responses.size(); ++i) {
    LinearConstraint c;
    c.coeffs = (m.row(top) - m.row(responses[i])).transpose();
    c.rel = Relation::Eq;
    c.rhs = 0;
    problem.constraints.push_back(std::move(c));
  }

  // ...and the tied value weakly dominates every other row.
  for (Index r = 0; r < rows; ++r) {
    if (inResponses[static_cast<std::size_t>(r)]) continue;
    LinearConstraint c;
    c.coeffs = (m.row(top) - m.row(r)).transpose();
    c.rel = Relation::Ge;
    c.rhs = 0;
    problem.constraints.push_back(std::move(c));
  }
  return problem;
}

Verdict checkOneSided(const RationalMatrix& m, const SearchBudget& budget) {
  const Index rows = m.rows();
  const Index n = m.cols();
  if (rows == 0 || n == 0)
    throw std::invalid_argument("checkOneSided: empty payoff matrix");
  if (budget.workers < 1)
    throw std::invalid_argument("checkOneSided: workers must be positive");
  if (budget.maxSupport && *budget.maxSupport < 1)
    throw std::invalid_argument("checkOneSided: maxSupport must be positive");

  if (rows + n > budget.maxTotalDim) {
    std::ostringstream reason;
    reason << "matrix is " << dimensions(m) << " and " << rows + n << " > maxTotalDim "
           << budget.maxTotalDim << "; raise the budget to search anyway";
    return Verdict{Verdict::Kind::Unknown, std::nullopt, reason.str()};
  }

  const Index fullMax = std::min<Index>(n, rows - 1);
  Index kMax = fullMax;
  if (budget.maxSupport) kMax = std::min<Index>(kMax, *budget.maxSupport);
  const bool complete = kMax >= fullMax;

  // Exact candidate count, then the per-size blocks of the global ordering.
  Integer total(0);
  for (Index k = 1; k <= kMax; ++k) total += binomial(n, k) * binomial(rows, k + 1);
  if (total > Integer(budget.maxPairs)) {
    std::ostringstream reason;
    reason << "search needs " << total.str() << " candidate support/response pairs"
           << " > maxPairs " << budget.maxPairs << "; raise the budget to search anyway";
    return Verdict{Verdict::Kind::Unknown, std::nullopt, reason.str()};
  }
  std::vector<Block> blocks;
  std::uint64_t start = 0;
  for (Index k = 1; k <= kMax; ++k) {
    Block block;
    block.supportSize = k;
    block.numSupports = binomial(n, k).convert_to<std::uint64_t>();
    block.numResponses = binomial(rows, k + 1).convert_to<std::uint64_t>();
    block.start = start;
    start += block.numSupports * block.numResponses;
    if (block.numSupports > 0 && block.numResponses > 0) blocks.push_back(block);
  }
  const std::uint64_t totalCandidates = start;

  auto incompleteVerdict = [&]() {
    std::ostringstream reason;
    reason << "no witness with support size <= " << kMax
           << "; sizes up to " << fullMax << " were not all searched";
    return Verdict{Verdict::Kind::Unknown, std::nullopt, reason.str()};
  };
  if (totalCandidates == 0)
    return complete ? Verdict{Verdict::Kind::Nondegenerate, std::nullopt, ""}
                    : incompleteVerdict();

  auto solveCandidate = [&](std::uint64_t global) -> std::optional<RationalVector> {
    Candidate candidate = decodeCandidate(blocks, n, rows, global);
    return feasiblePoint(tieSystem(m, candidate.support, candidate.responses),
                         budget.method);
  };

  std::uint64_t found = kNotFound;
  RationalVector point;
  if (budget.workers == 1) {
    for (std::uint64_t g = 0; g < totalCandidates; ++g) {
      if (auto y = solveCandidate(g)) {
        found = g;
        point = *y;
        break;
      }
    }
  } else {
    // Synchronized rounds over contiguous spans.  Workers take contiguous
    // chunks; the round's answer is the minimum feasible index across all of
    // them, so the reported witness matches the single-worker scan exactly.
    std::uint64_t base = 0;
    const auto workerCount = static_cast<std::uint64_t>(budget.workers);
    while (base < totalCandidates && found == kNotFound) {
      const std::uint64_t span =
          std::min<std::uint64_t>(totalCandidates - base, kRoundChunk * workerCount);
      std::vector<std::optional<std::pair<std::uint64_t, RationalVector>>> hits(
          budget.workers);
      std::vector<std::exception_ptr> errors(budget.workers);
      std::vector<std::thread> threads;
      for (int w = 0; w < budget.workers; ++w) {
        const std::uint64_t lo =
            base + std::min<std::uint64_t>(span, static_cast<std::uint64_t>(w) * kRoundChunk);
        const std::uint64_t hi =
            base + std::min<std::uint64_t>(span, static_cast<std::uint64_t>(w + 1) * kRoundChunk);
        if (lo >= hi) break;
        threads.emplace_back([&, lo, hi, w]() {
          try {
            for (std::uint64_t g = lo; g < hi; ++g) {
              if (auto y = solveCandidate(g)) {
                hits[static_cast<std::size_t>(w)] = std::make_pair(g, *y);
                break;
              }
            }
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
      }
      for (std::thread& t : threads) t.join();
      for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
      for (const auto& hit : hits) {
        if (hit && hit->first < found) {
          found = hit->first;
          point = hit->second;
        }
      }
      base += span;
    }
  }

  if (found == kNotFound)
    return complete ? Verdict{Verdict::Kind::Nondegenerate, std::nullopt, ""}
                    : incompleteVerdict();

  MixedStrategy strategy(point);
  DegeneracyWitness witness{Side::Row, strategy, bestResponseSet(m, strategy)};
  if (!verifyWitness(m, strategy))
    throw std::logic_error("checkOneSided: search produced an invalid witness");
  return Verdict{Verdict::Kind::Degenerate, std::move(witness), ""};
}

GameVerdict checkGame(const BimatrixGame& game, const SearchBudget& budget) {
  validateGame(game);
  GameVerdict verdict;
  verdict.row = checkOneSided(game.A, budget);
  RationalMatrix bT = game.B.transpose();
  verdict.column = checkOneSided(bT, budget);
  if (verdict.column.witness) verdict.column.witness->side = Side::Column;

  if (verdict.row.kind == Verdict::Kind::Degenerate) {
    verdict.overall = verdict.row;
  } else if (verdict.column.kind == Verdict::Kind::Degenerate) {
    verdict.overall = verdict.column;
  } else if (verdict.row.kind == Verdict::Kind::Unknown ||
             verdict.column.kind == Verdict::Kind::Unknown) {
    std::string reason;
    if (verdict.row.kind == Verdict::Kind::Unknown)
      reason += "row side: " + verdict.row.reason;
    if (verdict.column.kind == Verdict::Kind::Unknown) {
      if (!reason.empty()) reason += "; ";
      reason += "column side: " + verdict.column.reason;
    }
    verdict.overall = Verdict{Verdict::Kind::Unknown, std::nullopt, reason};
  } else {
    verdict.overall = Verdict{Verdict::Kind::Nondegenerate, std::nullopt, ""};
  }
  return verdict;
}

bool isWinLose(const BimatrixGame& game) {
  auto binary = [](const RationalMatrix& m) {
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0 && m(i, j) != 1) return false;
    return true;
  };
  return binary(game.A) && binary(game.B);
}

bool winLosePaperOneSided(const RationalMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    int nonzeros = 0;
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0 && ++nonzeros > 1) return false;
  }
  return true;
}

bool winLoseCorrectedOneSided(const RationalMatrix& m) {
  if (m.rows() == 1) return true;
  for (Index j = 0; j < m.cols(); ++j) {
    int nonzeros = 0;
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) ++nonzeros;
    if (nonzeros != 1) return false;
  }
  return true;
}

bool winLosePaperPredicate(const BimatrixGame& game) {
  return winLosePaperOneSided(game.A) &&
         winLosePaperOneSided(RationalMatrix(game.B.transpose()));
}

bool winLoseCorrectedPredicate(const BimatrixGame& game) {
  return winLoseCorrectedOneSided(game.A) &&
         winLoseCorrectedOneSided(RationalMatrix(game.B.transpose()));
}

}  // namespace degen
