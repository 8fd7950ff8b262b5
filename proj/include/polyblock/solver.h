// Copyright 2026 The Polyblock Authors
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


#ifndef POLYBLOCK_SOLVER_H_
#define POLYBLOCK_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyblock/bigint.h"
#include "polyblock/game.h"

namespace polyblock {

struct SolverOptions {
  // Lifts the default size guard by one: (1:1) n = 8, (1:2) n = 7.
  bool allow_large = false;
  // Memo keys use the least rotated image of the position.
  bool canonicalize_rotations = false;
};

struct SolveResult {
  Player winner = Player::kMaker;
  // Turns the winner still needs under optimal play: the winner hurries,
  // the loser delays.
  int moves = 0;
  std::int64_t states_visited = 0;
  // Best move for the side to move; empty when the game is already over.
  std::vector<Diagonal> best_move;
};

// Throws Error when the board is too large for exhaustive search.
void CheckSolverFeasible(const GameConfig& config, bool allow_large);

// Exact minimax from the initial position.
SolveResult Solve(const GameConfig& config, const SolverOptions& options = {});
// Exact minimax from any reachable position.
SolveResult SolveFrom(const GameState& state, const SolverOptions& options = {});

// Beck's biased potential sum_T (b+1)^(-|T|/m) over all triangulations T,
// i.e. C(n-2) * (b+1)^(-(n-3)/m), against the threshold 1/(b+1).
struct SelfridgeResult {
  int n = 0;
  int maker_per_turn = 1;
  int breaker_per_turn = 1;
  BigInt triangulations;
  // Set when m divides n-3.
  std::optional<BigRational> exact;
  std::string decimal;  // 30 significant digits
  BigRational threshold;
  // potential < threshold, decided exactly in both cases.
  bool implies_breaker_win = false;

  std::string ToString() const;
};

SelfridgeResult ErdosSelfridgePotential(int n, int maker_per_turn, int breaker_per_turn);

}  // namespace polyblock

#endif  // POLYBLOCK_SOLVER_H_
