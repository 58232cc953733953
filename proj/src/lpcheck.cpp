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

#include "degen/lpcheck.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "degen/linalg.hpp"

namespace degen {

namespace {

// Advances a strictly increasing m-subset of {0, ..., n-1} to its
// lexicographic successor; false once the last subset has been seen.
bool nextSubset(std::vector<Index>& subset, Index n) {
  const auto m = static_cast<Index>(subset.size());
  Index i = m - 1;
  while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - m + i) --i;
  if (i < 0) return false;
  ++subset[static_cast<std::size_t>(i)];
  for (Index j = i + 1; j < m; ++j)
    subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

}  // namespace

LinearSystem::LinearSystem(RationalMatrix a, RationalVector b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() == 0 || a_.cols() == 0)
    throw std::invalid_argument("LinearSystem: matrix must be nonempty");
  if (b_.size() != a_.rows())
    throw std::invalid_argument("LinearSystem: right-hand side length must match rows");
  if (rankOf(a_) != a_.rows())
    throw std::invalid_argument("LinearSystem: matrix must have full row rank");
}

std::optional<BasisCertificate> isLpDegenerate(const LinearSystem& system,
                                               Index maxCols) {
  const Index m = system.numRows();
  const Index n = system.numCols();
  if (n > maxCols) {
    std::ostringstream reason;
    reason << "system has " << n << " columns > cap " << maxCols
           << "; raise the cap to enumerate its bases";
    throw BudgetError(reason.str());
  }
  if (m > n) return std::nullopt;  // full row rank forbids this, but be safe

  std::vector<Index> columns(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) columns[static_cast<std::size_t>(i)] = i;
  do {
    RationalMatrix basis(m, m);
    for (Index j = 0; j < m; ++j)
      basis.col(j) = system.a().col(columns[static_cast<std::size_t>(j)]);
    std::optional<RationalVector> solution = solveSquare(basis, system.b());
    if (!solution) continue;  // singular subset: not a basis
    std::vector<Index> zeros;
    for (Index i = 0; i < m; ++i)
      if ((*solution)(i) == 0) zeros.push_back(i);
    if (!zeros.empty())
      return BasisCertificate{columns, std::move(*solution), std::move(zeros)};
  } while (nextSubset(columns, n));
  return std::nullopt;
}

}  // namespace degen
