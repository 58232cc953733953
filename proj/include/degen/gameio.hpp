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

#ifndef DEGEN_GAMEIO_HPP_
#define DEGEN_GAMEIO_HPP_

// Bit-exact text formats for games, degeneracy witnesses, and linear
// systems.  All three formats are line oriented: '#' starts a comment, blank
// lines are skipped, CRLF input is tolerated, output is LF with entries in
// canonical lowest-terms form.  Existing game-file conventions assume
// fixed-precision payoffs; these formats carry unbounded exact rationals,
// which the constructed games require.
//
//   degen-game 1            degen-witness 1         degen-lp 1
//   rows M cols N           side row|col            rows M cols N
//   rowlabels T1 ... TM     dim N                   A
//   collabels T1 ... TN     P1 P2 ... PN            <M rows of N entries>
//   A                                               b
//   <M rows of N entries>                           <M entries>
//   B
//   <M rows of N entries>
//
// The label lines are optional.  parse(serialize(x)) = x exactly, and
// serialize(parse(text)) is the canonicalized form of text.

#include <string>
#include <string_view>

#include "degen/degeneracy.hpp"
#include "degen/game.hpp"
#include "degen/lpcheck.hpp"
#include "degen/types.hpp"

namespace degen {

// A mixed strategy tagged with the side it certifies.
struct WitnessDocument {
  Side side;
  MixedStrategy strategy;
};

BimatrixGame parseGame(std::string_view text);
std::string serializeGame(const BimatrixGame& game);

WitnessDocument parseWitness(std::string_view text);
std::string serializeWitness(const WitnessDocument& witness);

LinearSystem parseLpSystem(std::string_view text);
std::string serializeLpSystem(const LinearSystem& system);

}  // namespace degen

#endif  // DEGEN_GAMEIO_HPP_
