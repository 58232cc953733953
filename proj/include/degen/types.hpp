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

#ifndef DEGEN_TYPES_HPP_
#define DEGEN_TYPES_HPP_

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace degen {

// Exact arbitrary-precision scalars. Expression templates are off so these
// behave as plain value types, which is what Eigen expects of a scalar.
// GMP keeps rationals canonical (gcd-reduced, positive denominator) through
// every arithmetic operation; no rounding can occur anywhere.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

using Index = Eigen::Index;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Malformed input text: files, rational literals, CNF formulas.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource cap refused the computation (never a wrong answer).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "p" or "p/q" with an optional leading '-' on p and a positive
// integer q. Anything else, including "1/0", is a ParseError. The result is
// canonical regardless of the input spelling ("2/4" parses to 1/2).
//
// Do not feed raw strings to the Rational constructor instead: it skips
// canonicalization.
inline Rational parseRational(std::string_view token) {
  const auto bad = [&] {
    return ParseError("malformed rational '" + std::string(token) + "'");
  };
  if (token.empty()) throw bad();
  const std::size_t slash = token.find('/');
  std::string_view num = token.substr(0, slash);
  if (!num.empty() && num.front() == '-') num.remove_prefix(1);
  if (num.empty()) throw bad();
  for (char c : num)
    if (c < '0' || c > '9') throw bad();
  Integer numerator(std::string(token.substr(0, slash)));
  if (slash == std::string_view::npos) return Rational(numerator);
  std::string_view den = token.substr(slash + 1);
  if (den.empty()) throw bad();
  for (char c : den)
    if (c < '0' || c > '9') throw bad();
  Integer denominator{std::string(den)};
  if (denominator == 0)
    throw ParseError("zero denominator in '" + std::string(token) + "'");
  return Rational(numerator, denominator);
}

// Canonical text form: "p/q", or just "p" for integers.
inline std::string toString(const Rational& value) { return value.str(); }

}  // namespace degen

#endif  // DEGEN_TYPES_HPP_
