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

#include "degen/feasibility.hpp"

#include <algorithm>
#include <utility>

namespace degen {
namespace {

void validateProblem(const FeasibilityProblem& problem) {
  if (problem.numVars < 0)
    throw std::invalid_argument("feasibility: negative variable count");
  for (const auto& c : problem.constraints)
    if (c.coeffs.size() != problem.numVars)
      throw std::invalid_argument(
          "feasibility: constraint coefficient count does not match variable "
          "count");
}

// ---------------------------------------------------------------------------
// Phase-1 simplex with Bland's rule.
//
// Free variables are split as x = u - v with u, v >= 0; every row gets an
// artificial variable and we minimize their sum. Bland's pivoting rule
// (smallest eligible index enters, smallest basic index leaves among ratio
// ties) rules out cycling, so termination is unconditional.
// ---------------------------------------------------------------------------

std::optional<RationalVector> simplexFeasible(
    const FeasibilityProblem& problem) {
  const Index n = problem.numVars;
  const Index rows = static_cast<Index>(problem.constraints.size());
  if (rows == 0) return RationalVector::Zero(n);

  Index slacks = 0;
  for (const auto& c : problem.constraints)
    if (c.rel != Relation::Eq) ++slacks;

  // Columns: u (n), v (n), slacks, artificials (rows), rhs.
  const Index cols = 2 * n + slacks + rows;
  RationalMatrix tableau = RationalMatrix::Zero(rows, cols + 1);
  Index nextSlack = 2 * n;
  for (Index r = 0; r < rows; ++r) {
    const auto& c = problem.constraints[r];
    for (Index j = 0; j < n; ++j) {
      tableau(r, j) = c.coeffs(j);
      tableau(r, n + j) = -c.coeffs(j);
    }
    if (c.rel == Relation::Le)
      tableau(r, nextSlack++) = 1;
    else if (c.rel == Relation::Ge)
      tableau(r, nextSlack++) = -1;
    tableau(r, cols) = c.rhs;
    if (tableau(r, cols) < 0) tableau.row(r) = -tableau.row(r);
    tableau(r, 2 * n + slacks + r) = 1;
  }

  std::vector<Index> basis(rows);
  for (Index r = 0; r < rows; ++r) basis[r] = 2 * n + slacks + r;

  // Reduced-cost row for minimizing the artificial sum, kept in sync with
  // the tableau. Artificial columns start in the basis, so the initial cost
  // row is minus the sum of all constraint rows (restricted to non-artificial
  // columns) and the artificial columns themselves reduce to zero.
  RationalVector cost = RationalVector::Zero(cols + 1);
  for (Index r = 0; r < rows; ++r) cost -= tableau.row(r).transpose();
  for (Index r = 0; r < rows; ++r) cost(2 * n + slacks + r) = 0;

  while (true) {
    Index entering = -1;
    for (Index j = 0; j < cols; ++j) {
      if (cost(j) < 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;

    Index leaving = -1;
    Rational bestRatio;
    for (Index r = 0; r < rows; ++r) {
      if (tableau(r, entering) > 0) {
        Rational ratio = tableau(r, cols) / tableau(r, entering);
        if (leaving < 0 || ratio < bestRatio ||
            (ratio == bestRatio && basis[r] < basis[leaving])) {
          leaving = r;
          bestRatio = ratio;
        }
      }
    }
    if (leaving < 0)
      throw std::logic_error("simplex: phase-1 objective unbounded");

    Rational pivot = tableau(leaving, entering);
    tableau.row(leaving) /= pivot;
    for (Index r = 0; r < rows; ++r) {
      if (r != leaving && tableau(r, entering) != 0) {
        Rational factor = tableau(r, entering);  // copy before the row changes
        tableau.row(r) -= factor * tableau.row(leaving);
      }
    }
    if (cost(entering) != 0) {
      Rational factor = cost(entering);
      cost -= factor * tableau.row(leaving).transpose();
    }
    basis[leaving] = entering;
  }

  if (-cost(cols) != 0) return std::nullopt;  // artificial mass left over

  RationalVector x = RationalVector::Zero(n);
  for (Index r = 0; r < rows; ++r) {
    if (basis[r] < n)
      x(basis[r]) += tableau(r, cols);
    else if (basis[r] < 2 * n)
      x(basis[r] - n) -= tableau(r, cols);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Gaussian substitution of equalities, then Fourier-Motzkin elimination.
// ---------------------------------------------------------------------------

struct Row {  // coeffs . x <= rhs
  RationalVector coeffs;
  Rational rhs;
};

// x[var] = (rhs - coeffs . x) / divisor, with coeffs(var) == 0.
struct Substitution {
  Index var;
  RationalVector coeffs;
  Rational rhs;
  Rational divisor;
};

std::optional<RationalVector> eliminationFeasible(
    const FeasibilityProblem& problem) {
  const Index n = problem.numVars;
  std::vector<Row> inequalities;
  std::vector<Row> equalities;
  for (const auto& c : problem.constraints) {
    switch (c.rel) {
      case Relation::Le:
        inequalities.push_back({c.coeffs, c.rhs});
        break;
      case Relation::Ge:
        inequalities.push_back({-c.coeffs, -c.rhs});
        break;
      case Relation::Eq:
        equalities.push_back({c.coeffs, c.rhs});
        break;
    }
  }

  std::vector<bool> eliminated(static_cast<std::size_t>(n), false);
  std::vector<Substitution> substitutions;

  while (!equalities.empty()) {
    Row eq = std::move(equalities.back());
    equalities.pop_back();
    Index var = -1;
    for (Index j = 0; j < n; ++j) {
      if (eq.coeffs(j) != 0) {
        var = j;
        break;
      }
    }
    if (var < 0) {
      if (eq.rhs != 0) return std::nullopt;  // 0 = c with c != 0
      continue;
    }
    Substitution sub;
    sub.var = var;
    sub.divisor = eq.coeffs(var);
    sub.coeffs = eq.coeffs;
    sub.coeffs(var) = 0;
    sub.rhs = eq.rhs;
    const auto apply = [&](Row& row) {
      if (row.coeffs(var) == 0) return;
      Rational scale = row.coeffs(var) / sub.divisor;
      row.coeffs -= scale * eq.coeffs;
      row.coeffs(var) = 0;
      row.rhs -= scale * eq.rhs;
    };
    for (auto& row : equalities) apply(row);
    for (auto& row : inequalities) apply(row);
    eliminated[static_cast<std::size_t>(var)] = true;
    substitutions.push_back(std::move(sub));
  }

  // Fourier-Motzkin on the remaining variables, ascending. For each
  // eliminated variable keep its bounding rows for back-substitution.
  struct BoundSet {
    Index var;
    std::vector<Row> uppers;  // coeffs(var) > 0
    std::vector<Row> lowers;  // coeffs(var) < 0
  };
  std::vector<BoundSet> boundSets;

  for (Index var = 0; var < n; ++var) {
    if (eliminated[static_cast<std::size_t>(var)]) continue;
    BoundSet bounds;
    bounds.var = var;
    std::vector<Row> rest;
    for (auto& row : inequalities) {
      if (row.coeffs(var) > 0)
        bounds.uppers.push_back(std::move(row));
      else if (row.coeffs(var) < 0)
        bounds.lowers.push_back(std::move(row));
      else
        rest.push_back(std::move(row));
    }
    for (const auto& lo : bounds.lowers) {
      for (const auto& up : bounds.uppers) {
        // lower-bound expr <= x[var] <= upper-bound expr
        Rational lc = -lo.coeffs(var);
        Rational uc = up.coeffs(var);
        Row combined;
        combined.coeffs = lo.coeffs * uc + up.coeffs * lc;
        combined.coeffs(var) = 0;
        combined.rhs = lo.rhs * uc + up.rhs * lc;
        rest.push_back(std::move(combined));
      }
    }
    inequalities = std::move(rest);
    boundSets.push_back(std::move(bounds));
  }

  for (const auto& row : inequalities)
    if (Rational(0) > row.rhs) return std::nullopt;

  // Assign the Fourier-Motzkin variables in reverse elimination order; each
  // bound is constant in the still-unassigned variables by construction.
  RationalVector x = RationalVector::Zero(n);
  const auto evalBound = [&](const Row& row, Index var) {
    Rational acc = row.rhs;
    for (Index j = 0; j < n; ++j)
      if (j != var && row.coeffs(j) != 0) acc -= row.coeffs(j) * x(j);
    return acc / row.coeffs(var);
  };
  for (auto it = boundSets.rbegin(); it != boundSets.rend(); ++it) {
    std::optional<Rational> lower, upper;
    for (const auto& row : it->lowers) {
      Rational bound = evalBound(row, it->var);
      if (!lower || bound > *lower) lower = bound;
    }
    for (const auto& row : it->uppers) {
      Rational bound = evalBound(row, it->var);
      if (!upper || bound < *upper) upper = bound;
    }
    if (lower && upper && *lower > *upper)
      throw std::logic_error("fourier-motzkin: inconsistent back-substitution");
    x(it->var) = lower ? *lower : (upper ? *upper : Rational(0));
  }
  for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it) {
    Rational acc = it->rhs;
    for (Index j = 0; j < n; ++j)
      if (it->coeffs(j) != 0) acc -= it->coeffs(j) * x(j);
    x(it->var) = acc / it->divisor;
  }
  return x;
}

}  // namespace

bool satisfies(const FeasibilityProblem& problem, const RationalVector& x) {
  validateProblem(problem);
  if (x.size() != problem.numVars)
    throw std::invalid_argument("satisfies: point has wrong dimension");
  for (const auto& c : problem.constraints) {
    Rational lhs(0);
    for (Index j = 0; j < problem.numVars; ++j)
      if (c.coeffs(j) != 0) lhs += c.coeffs(j) * x(j);
    switch (c.rel) {
      case Relation::Eq:
        if (lhs != c.rhs) return false;
        break;
      case Relation::Le:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Ge:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

std::optional<RationalVector> feasiblePoint(const FeasibilityProblem& problem,
                                            FeasMethod method) {
  validateProblem(problem);
  std::optional<RationalVector> point = method == FeasMethod::Simplex
                                            ? simplexFeasible(problem)
                                            : eliminationFeasible(problem);
  if (point && !satisfies(problem, *point))
    throw std::logic_error("feasiblePoint: solver returned an invalid point");
  return point;
}

}  // namespace degen
