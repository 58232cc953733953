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

#ifndef DEGEN_LPCHECK_HPP_
#define DEGEN_LPCHECK_HPP_

// Degeneracy of linear systems in standard form.
//
// A system Ax = b, x >= 0 with A of full row rank is degenerate when some
// basis (set of m linearly independent columns) has a basic solution with a
// zero in a basic position.  The check enumerates all m-column subsets and
// solves each square system exactly, so the verdict is decisive; the number
// of subsets is capped by a budget since it grows binomially.
//
// This notion is unrelated to game degeneracy: the two properties can
// disagree in both directions on the same matrix data.

#include <optional>
#include <vector>

#include "degen/types.hpp"

namespace degen {

// A standard-form system Ax = b, x >= 0.  The constructor validates shape
// and full row rank exactly.
class LinearSystem {
 public:
  LinearSystem(RationalMatrix a, RationalVector b);

  const RationalMatrix& a() const { return a_; }
  const RationalVector& b() const { return b_; }
  Index numRows() const { return a_.rows(); }
  Index numCols() const { return a_.cols(); }

 private:
  RationalMatrix a_;
  RationalVector b_;
};

// Evidence of LP degeneracy: a basis whose basic solution has zeros.  The
// certificate is checkable by re-solving the basis columns against b.
struct BasisCertificate {
  std::vector<Index> columns;        // the basis, strictly increasing
  RationalVector solution;           // basic values, aligned with columns
  std::vector<Index> zeroPositions;  // positions into columns with value 0
};

// Decides LP degeneracy by exhausting bases in lexicographic column order;
// the first degenerate basis found is returned.  Systems with more than
// maxCols columns are refused with a BudgetError.
std::optional<BasisCertificate> isLpDegenerate(const LinearSystem& system,
                                               Index maxCols = 20);

}  // namespace degen

#endif  // DEGEN_LPCHECK_HPP_
