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

#include "degen/gameio.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <sstream>
#include <utility>
#include <vector>

namespace degen {

namespace {

using TokenLine = std::vector<std::string>;

// Comment-stripped, tokenized, non-blank lines of the input.
std::vector<TokenLine> logicalLines(std::string_view text) {
  std::vector<TokenLine> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream tokens(raw);
    TokenLine line;
    std::string token;
    while (tokens >> token) line.push_back(token);
    if (!line.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class LineCursor {
 public:
  explicit LineCursor(std::vector<TokenLine> lines) : lines_(std::move(lines)) {}

  const TokenLine& next(const std::string& expected) {
    if (pos_ >= lines_.size())
      throw ParseError("unexpected end of input: expected " + expected);
    return lines_[pos_++];
  }

  const TokenLine* peek() const {
    return pos_ < lines_.size() ? &lines_[pos_] : nullptr;
  }

  void skip() { ++pos_; }

  void expectEnd(const std::string& format) const {
    if (pos_ < lines_.size())
      throw ParseError("trailing content after " + format + " document");
  }

 private:
  std::vector<TokenLine> lines_;
  std::size_t pos_ = 0;
};

void expectHeader(const TokenLine& line, const std::string& magic) {
  if (line.size() != 2 || line[0] != magic || line[1] != "1")
    throw ParseError("expected header '" + magic + " 1'");
}

Index parseCount(const std::string& token, const std::string& what) {
  if (token.empty()) throw ParseError(what + " must be a positive integer");
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(what + " must be a positive integer, got '" + token + "'");
  errno = 0;
  long long value = std::strtoll(token.c_str(), nullptr, 10);
  if (errno != 0 || value < 1)
    throw ParseError(what + " must be a positive integer, got '" + token + "'");
  return static_cast<Index>(value);
}

std::pair<Index, Index> parseDimensions(const TokenLine& line) {
  if (line.size() != 4 || line[0] != "rows" || line[2] != "cols")
    throw ParseError("expected 'rows M cols N'");
  return {parseCount(line[1], "row count"), parseCount(line[3], "column count")};
}

void expectKeyword(const TokenLine& line, const std::string& keyword) {
  if (line.size() != 1 || line[0] != keyword)
    throw ParseError("expected '" + keyword + "' line");
}

RationalMatrix parseBlock(LineCursor& cursor, Index rows, Index cols,
                          const std::string& what) {
  RationalMatrix block(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const TokenLine& line = cursor.next("row " + std::to_string(r + 1) + " of " + what);
    if (static_cast<Index>(line.size()) != cols)
      throw ParseError(what + " row " + std::to_string(r + 1) + " has " +
                       std::to_string(line.size()) + " entries, expected " +
                       std::to_string(cols));
    for (Index c = 0; c < cols; ++c)
      block(r, c) = parseRational(line[static_cast<std::size_t>(c)]);
  }
  return block;
}

std::vector<std::string> parseLabels(const TokenLine& line, Index expected,
                                     const std::string& what) {
  if (static_cast<Index>(line.size()) != expected + 1)
    throw ParseError(what + " line has " + std::to_string(line.size() - 1) +
                     " labels, expected " + std::to_string(expected));
  return {line.begin() + 1, line.end()};
}

void checkLabelToken(const std::string& label, const std::string& what) {
  if (label.empty())
    throw std::invalid_argument(what + " label may not be empty");
  for (char c : label)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
      throw std::invalid_argument(what + " label '" + label +
                                  "' contains whitespace or '#'");
}

void writeRow(std::ostringstream& out, const RationalMatrix& block, Index row) {
  for (Index c = 0; c < block.cols(); ++c) {
    if (c > 0) out << ' ';
    out << toString(block(row, c));
  }
  out << '\n';
}

}  // namespace

BimatrixGame parseGame(std::string_view text) {
  LineCursor cursor(logicalLines(text));
  expectHeader(cursor.next("'degen-game 1' header"), "degen-game");
  auto [rows, cols] = parseDimensions(cursor.next("'rows M cols N'"));

  BimatrixGame game;
  if (const TokenLine* line = cursor.peek(); line && !line->empty() && (*line)[0] == "rowlabels") {
    game.rowLabels = parseLabels(*line, rows, "rowlabels");
    cursor.skip();
  }
  if (const TokenLine* line = cursor.peek(); line && !line->empty() && (*line)[0] == "collabels") {
    game.colLabels = parseLabels(*line, cols, "collabels");
    cursor.skip();
  }
  expectKeyword(cursor.next("'A'"), "A");
  game.A = parseBlock(cursor, rows, cols, "A");
  expectKeyword(cursor.next("'B'"), "B");
  game.B = parseBlock(cursor, rows, cols, "B");
  cursor.expectEnd("game");
  validateGame(game);
  return game;
}

std::string serializeGame(const BimatrixGame& game) {
  validateGame(game);
  for (const std::string& label : game.rowLabels) checkLabelToken(label, "row");
  for (const std::string& label : game.colLabels) checkLabelToken(label, "column");
  std::ostringstream out;
  out << "degen-game 1\n";
  out << "rows " << game.A.rows() << " cols " << game.A.cols() << '\n';
  if (!game.rowLabels.empty()) {
    out << "rowlabels";
    for (const std::string& label : game.rowLabels) out << ' ' << label;
    out << '\n';
  }
  if (!game.colLabels.empty()) {
    out << "collabels";
    for (const std::string& label : game.colLabels) out << ' ' << label;
    out << '\n';
  }
  out << "A\n";
  for (Index r = 0; r < game.A.rows(); ++r) writeRow(out, game.A, r);
  out << "B\n";
  for (Index r = 0; r < game.B.rows(); ++r) writeRow(out, game.B, r);
  return out.str();
}

WitnessDocument parseWitness(std::string_view text) {
  LineCursor cursor(logicalLines(text));
  expectHeader(cursor.next("'degen-witness 1' header"), "degen-witness");

  const TokenLine& sideLine = cursor.next("'side row|col'");
  if (sideLine.size() != 2 || sideLine[0] != "side" ||
      (sideLine[1] != "row" && sideLine[1] != "col"))
    throw ParseError("expected 'side row' or 'side col'");
  Side side = sideLine[1] == "row" ? Side::Row : Side::Column;

  const TokenLine& dimLine = cursor.next("'dim N'");
  if (dimLine.size() != 2 || dimLine[0] != "dim")
    throw ParseError("expected 'dim N'");
  Index dim = parseCount(dimLine[1], "dimension");

  const TokenLine& probsLine = cursor.next("probability entries");
  if (static_cast<Index>(probsLine.size()) != dim)
    throw ParseError("witness has " + std::to_string(probsLine.size()) +
                     " entries, expected " + std::to_string(dim));
  RationalVector probs(dim);
  for (Index i = 0; i < dim; ++i)
    probs(i) = parseRational(probsLine[static_cast<std::size_t>(i)]);
  cursor.expectEnd("witness");
  return WitnessDocument{side, MixedStrategy(probs)};
}

std::string serializeWitness(const WitnessDocument& witness) {
  std::ostringstream out;
  out << "degen-witness 1\n";
  out << "side " << (witness.side == Side::Row ? "row" : "col") << '\n';
  out << "dim " << witness.strategy.dim() << '\n';
  for (Index i = 0; i < witness.strategy.dim(); ++i) {
    if (i > 0) out << ' ';
    out << toString(witness.strategy(i));
  }
  out << '\n';
  return out.str();
}

LinearSystem parseLpSystem(std::string_view text) {
  LineCursor cursor(logicalLines(text));
  expectHeader(cursor.next("'degen-lp 1' header"), "degen-lp");
  auto [rows, cols] = parseDimensions(cursor.next("'rows M cols N'"));
  expectKeyword(cursor.next("'A'"), "A");
  RationalMatrix a = parseBlock(cursor, rows, cols, "A");
  expectKeyword(cursor.next("'b'"), "b");
  const TokenLine& bLine = cursor.next("right-hand side entries");
  if (static_cast<Index>(bLine.size()) != rows)
    throw ParseError("right-hand side has " + std::to_string(bLine.size()) +
                     " entries, expected " + std::to_string(rows));
  RationalVector b(rows);
  for (Index i = 0; i < rows; ++i)
    b(i) = parseRational(bLine[static_cast<std::size_t>(i)]);
  cursor.expectEnd("linear system");
  return LinearSystem(std::move(a), std::move(b));
}

std::string serializeLpSystem(const LinearSystem& system) {
  std::ostringstream out;
  out << "degen-lp 1\n";
  out << "rows " << system.numRows() << " cols " << system.numCols() << '\n';
  out << "A\n";
  for (Index r = 0; r < system.numRows(); ++r) writeRow(out, system.a(), r);
  out << "b\n";
  for (Index i = 0; i < system.numRows(); ++i) {
    if (i > 0) out << ' ';
    out << toString(system.b()(i));
  }
  out << '\n';
  return out.str();
}

}  // namespace degen
