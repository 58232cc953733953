// Copyright 2026 The degen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEGEN_GAME_HPP_
#define DEGEN_GAME_HPP_

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "degen/types.hpp"

namespace degen {

// A two-player normal-form game: A pays the row player, B the column player.
// Label vectors are optional (empty means unlabeled) and, when present, must
// match the dimensions and contain no duplicates.
struct BimatrixGame {
  RationalMatrix A;
  RationalMatrix B;
  std::vector<std::string> rowLabels;
  std::vector<std::string> colLabels;
};

inline void validateGame(const BimatrixGame& g) {
  if (g.A.rows() == 0 || g.A.cols() == 0)
    throw std::invalid_argument("game: payoff matrices must be nonempty");
  if (g.A.rows() != g.B.rows() || g.A.cols() != g.B.cols())
    throw std::invalid_argument("game: A and B must have identical dimensions");
  const auto checkLabels = [](const std::vector<std::string>& labels,
                              Index expected, const char* what) {
    if (labels.empty()) return;
    if (static_cast<Index>(labels.size()) != expected)
      throw std::invalid_argument(std::string("game: ") + what +
                                  " label count does not match dimension");
    std::unordered_set<std::string> seen;
    for (const auto& label : labels)
      if (!seen.insert(label).second)
        throw std::invalid_argument(std::string("game: duplicate ") + what +
                                    " label '" + label + "'");
  };
  checkLabels(g.rowLabels, g.A.rows(), "row");
  checkLabels(g.colLabels, g.A.cols(), "column");
}

// A probability distribution over pure strategies. The constructor enforces
// nonnegativity and an exact sum of 1, so a constructed value is always a
// valid distribution.
class MixedStrategy {
 public:
  explicit MixedStrategy(RationalVector probs) : probs_(std::move(probs)) {
    if (probs_.size() == 0)
      throw std::invalid_argument("mixed strategy: needs at least one entry");
    Rational total(0);
    for (Index i = 0; i < probs_.size(); ++i) {
      if (probs_(i) < 0)
        throw std::invalid_argument("mixed strategy: negative probability");
      total += probs_(i);
    }
    if (total != 1)
      throw std::invalid_argument(
          "mixed strategy: probabilities must sum to exactly 1 (got " +
          toString(total) + ")");
  }

  static MixedStrategy uniform(Index dim) {
    RationalVector p = RationalVector::Constant(dim, Rational(1, dim));
    return MixedStrategy(std::move(p));
  }

  static MixedStrategy pointMass(Index dim, Index index) {
    RationalVector p = RationalVector::Zero(dim);
    p(index) = 1;
    return MixedStrategy(std::move(p));
  }

  Index dim() const { return probs_.size(); }
  const RationalVector& probs() const { return probs_; }
  const Rational& operator()(Index i) const { return probs_(i); }

  friend bool operator==(const MixedStrategy& a, const MixedStrategy& b) {
    return a.probs_.size() == b.probs_.size() && a.probs_ == b.probs_;
  }

 private:
  RationalVector probs_;
};

// Strictly increasing pure-strategy indices; size() is the "size k" of a
// mixed strategy.
struct SupportSet {
  std::vector<Index> indices;
  Index size() const { return static_cast<Index>(indices.size()); }
};

// The exact argmax set of the responder together with the attained value u.
struct BestResponseSet {
  std::vector<Index> indices;
  Rational value;
  Index size() const { return static_cast<Index>(indices.size()); }
};

// Exact payoff to each responder pure strategy against the mixture y.
inline RationalVector payoffVector(const RationalMatrix& m,
                                   const MixedStrategy& y) {
  if (y.dim() != m.cols())
    throw std::invalid_argument("payoffVector: dimension mismatch");
  return m * y.probs();
}

inline BestResponseSet bestResponseSet(const RationalMatrix& m,
                                       const MixedStrategy& y) {
  RationalVector payoffs = payoffVector(m, y);
  BestResponseSet best;
  best.value = payoffs(0);
  for (Index i = 1; i < payoffs.size(); ++i)
    if (payoffs(i) > best.value) best.value = payoffs(i);
  for (Index i = 0; i < payoffs.size(); ++i)
    if (payoffs(i) == best.value) best.indices.push_back(i);
  return best;
}

inline SupportSet supportOf(const MixedStrategy& s) {
  SupportSet support;
  for (Index i = 0; i < s.dim(); ++i)
    if (s(i) > 0) support.indices.push_back(i);
  return support;
}

// Checks the equilibrium conditions against pure deviations only; by
// linearity of expected payoff that covers all mixed deviations.
inline bool isNashEquilibrium(const BimatrixGame& g, const MixedStrategy& x,
                              const MixedStrategy& y) {
  validateGame(g);
  if (x.dim() != g.A.rows() || y.dim() != g.A.cols())
    throw std::invalid_argument("isNashEquilibrium: dimension mismatch");
  const RationalVector rowPayoffs = g.A * y.probs();
  const Rational rowValue = x.probs().dot(rowPayoffs);
  for (Index i = 0; i < rowPayoffs.size(); ++i)
    if (rowPayoffs(i) > rowValue) return false;
  const RationalVector colPayoffs = g.B.transpose() * x.probs();
  const Rational colValue = colPayoffs.dot(y.probs());
  for (Index j = 0; j < colPayoffs.size(); ++j)
    if (colPayoffs(j) > colValue) return false;
  return true;
}

}  // namespace degen

#endif  // DEGEN_GAME_HPP_
