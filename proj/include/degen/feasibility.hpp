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

#ifndef DEGEN_FEASIBILITY_HPP_
#define DEGEN_FEASIBILITY_HPP_

#include <optional>
#include <vector>

#include "degen/types.hpp"

namespace degen {

enum class Relation { Eq, Le, Ge };

// coeffs . x  (=|<=|>=)  rhs. Only closed relations exist; nothing in this
// project needs a strict inequality.
struct LinearConstraint {
  RationalVector coeffs;
  Relation rel = Relation::Eq;
  Rational rhs;
};

// Variables are unrestricted in sign; bounds such as x >= 0 are ordinary
// constraints.
struct FeasibilityProblem {
  Index numVars = 0;
  std::vector<LinearConstraint> constraints;
};

// Two independent exact decision procedures. Simplex is phase-1 with Bland's
// anti-cycling rule; Elimination is Gaussian substitution of equalities
// followed by Fourier-Motzkin. They must agree, and tests cross-validate
// them against each other.
enum class FeasMethod { Simplex, Elimination };

bool satisfies(const FeasibilityProblem& problem, const RationalVector& x);

// Returns an exact feasible point, or std::nullopt when the system is
// infeasible. Deterministic for a fixed method. Throws std::invalid_argument
// on malformed constraints.
std::optional<RationalVector> feasiblePoint(
    const FeasibilityProblem& problem, FeasMethod method = FeasMethod::Simplex);

}  // namespace degen

#endif  // DEGEN_FEASIBILITY_HPP_
