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

#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <string>

#include "degen/cnf.hpp"
#include "degen/types.hpp"

using degen::Assignment;
using degen::Clause;
using degen::CnfFormula;
using degen::Literal;
using degen::ParseError;

namespace {

// The formula containing every sign pattern on three variables; each clause
// excludes exactly one assignment, so the formula is unsatisfiable.
CnfFormula allSignPatterns() {
  CnfFormula f;
  f.numVars = 3;
  for (int bits = 0; bits < 8; ++bits)
    f.clauses.push_back(Clause({Literal{1, (bits & 4) != 0},
                                Literal{2, (bits & 2) != 0},
                                Literal{3, (bits & 1) != 0}}));
  return f;
}

}  // namespace

TEST_CASE("parseDimacs reads well-formed input", "[cnf]") {
  CnfFormula one = degen::parseDimacs("p cnf 3 1\n1 2 3 0\n");
  REQUIRE(one.numVars == 3);
  REQUIRE(one.clauses.size() == 1);
  REQUIRE(one.clauses[0].literals() ==
          std::vector<Literal>{{1, false}, {2, false}, {3, false}});

  CnfFormula two = degen::parseDimacs("p cnf 5 2\n1 -2 3 0\n2 4 5 0\n");
  REQUIRE(two.numVars == 5);
  REQUIRE(two.clauses.size() == 2);
  REQUIRE(two.clauses[0].literals() ==
          std::vector<Literal>{{1, false}, {2, true}, {3, false}});
  REQUIRE(two.clauses[1].literals() ==
          std::vector<Literal>{{2, false}, {4, false}, {5, false}});
}

TEST_CASE("parseDimacs tolerates comments, CRLF, and split clauses", "[cnf]") {
  CnfFormula f = degen::parseDimacs(
      "c a comment\r\np cnf 3 2\r\nc another\r\n1 2\r\n3 0 -1 -2\r\n-3 0\r\n");
  REQUIRE(f.clauses.size() == 2);
  REQUIRE(f.clauses[0].literals() ==
          std::vector<Literal>{{1, false}, {2, false}, {3, false}});
  REQUIRE(f.clauses[1].literals() ==
          std::vector<Literal>{{1, true}, {2, true}, {3, true}});
}

TEST_CASE("parseDimacs rejects malformed input", "[cnf]") {
  // Duplicate variable inside a clause (normalization rule).
  REQUIRE_THROWS_AS(degen::parseDimacs("p cnf 2 1\n1 -1 2 0\n"), ParseError);
  // Not exactly three literals.
  REQUIRE_THROWS_AS(degen::parseDimacs("p cnf 3 1\n1 2 0\n"), ParseError);
  REQUIRE_THROWS_AS(degen::parseDimacs("p cnf 4 1\n1 2 3 4 0\n"), ParseError);
  // Header problems.
  REQUIRE_THROWS_AS(degen::parseDimacs("1 2 3 0\n"), ParseError);
  REQUIRE_THROWS_AS(degen::parseDimacs("p cnf x 1\n1 2 3 0\n"), ParseError);
  REQUIRE_THROWS_AS(degen::parseDimacs("p sat 3 1\n1 2 3 0\n"), ParseError);
  REQUIRE_THROWS_AS(degen::parseDimacs("p cnf 3 1 9\n1 2 3 0\n"), ParseError);
  REQUIRE_THROWS_AS(degen::parseDimacs("p cnf 3 1\np cnf 3 1\n1 2 3 0\n"), ParseError);
  // Count mismatch / missing terminator / variable overflow.
  REQUIRE_THROWS_AS(degen::parseDimacs("p cnf 3 2\n1 2 3 0\n"), ParseError);
  REQUIRE_THROWS_AS(degen::parseDimacs("p cnf 3 1\n1 2 3\n"), ParseError);
  REQUIRE_THROWS_AS(degen::parseDimacs("p cnf 3 1\n1 2 4 0\n"), ParseError);
  REQUIRE_THROWS_AS(degen::parseDimacs(""), ParseError);
}

TEST_CASE("satisfies evaluates clauses against total assignments", "[cnf]") {
  CnfFormula f = degen::parseDimacs("p cnf 3 1\n1 -2 3 0\n");
  REQUIRE(degen::satisfies(f, Assignment{true, true, false}));
  REQUIRE(degen::satisfies(f, Assignment{false, false, false}));  // -2 true
  REQUIRE_FALSE(degen::satisfies(f, Assignment{false, true, false}));
  REQUIRE_THROWS_AS(degen::satisfies(f, Assignment{true}), std::invalid_argument);
}

TEST_CASE("bruteForceSat finds the lexicographically least model", "[cnf]") {
  CnfFormula positive = degen::parseDimacs("p cnf 3 1\n1 2 3 0\n");
  auto model = degen::bruteForceSat(positive);
  REQUIRE(model.has_value());
  // All-false fails; (0,0,1) is the next assignment in lexicographic order.
  REQUIRE(*model == Assignment{false, false, true});

  CnfFormula paper = degen::parseDimacs("p cnf 5 2\n1 -2 3 0\n2 4 5 0\n");
  auto paperModel = degen::bruteForceSat(paper);
  REQUIRE(paperModel.has_value());
  REQUIRE(*paperModel == Assignment{false, false, false, false, true});
  REQUIRE(degen::satisfies(paper, *paperModel));
  REQUIRE(degen::satisfies(paper, Assignment{true, true, true, true, true}));

  REQUIRE_FALSE(degen::bruteForceSat(allSignPatterns()).has_value());
}

TEST_CASE("bruteForceSat enforces its variable cap", "[cnf]") {
  CnfFormula wide;
  wide.numVars = 27;
  wide.clauses.push_back(Clause({Literal{25, false}, Literal{26, false},
                                 Literal{27, false}}));
  REQUIRE_THROWS_AS(degen::bruteForceSat(wide), degen::BudgetError);
  auto model = degen::bruteForceSat(wide, 27);
  REQUIRE(model.has_value());
}

TEST_CASE("clause construction validates its literals", "[cnf]") {
  REQUIRE_THROWS_AS(Clause({Literal{1, false}, Literal{2, false}}), ParseError);
  REQUIRE_THROWS_AS(Clause({Literal{1, false}, Literal{1, true}, Literal{2, false}}),
                    ParseError);
  REQUIRE_THROWS_AS(Clause({Literal{0, false}, Literal{1, false}, Literal{2, false}}),
                    ParseError);
  REQUIRE(degen::toString(Literal{3, true}) == "-x3");
  REQUIRE(degen::toString(Literal{3, false}) == "x3");
}
