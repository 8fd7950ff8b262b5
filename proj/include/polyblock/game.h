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


#ifndef POLYBLOCK_GAME_H_
#define POLYBLOCK_GAME_H_

#include <optional>
#include <string>
#include <vector>

#include "polyblock/polygon.h"

namespace polyblock {

// Maker-Breaker game on the diagonals of a convex n-gon. Maker wins by
// owning a triangulation, Breaker by owning a blocking set.

enum class Player { kMaker, kBreaker };
enum class Status { kOngoing, kMakerWon, kBreakerWon };

Player Opponent(Player p);
std::string ToString(Player p);
std::string ToString(Status s);
// Accepts "maker" / "breaker"; throws Error otherwise.
Player ParsePlayer(std::string_view text);

struct GameConfig {
  int n = 4;
  int maker_per_turn = 1;
  int breaker_per_turn = 1;
  Player first_mover = Player::kMaker;
  // Breaker claims two diagonals on its first turn and one on every later
  // turn. Requires breaker_per_turn == 2.
  bool breaker_double_first_only = false;

  bool operator==(const GameConfig&) const = default;
};

// Throws Error on an invalid configuration.
void ValidateConfig(const GameConfig& config);

// (1:1) and the (1:2) double-first variant, the two biases with a known
// winning strategy.
GameConfig UnbiasedConfig(int n, Player first_mover = Player::kMaker);
GameConfig DoubleFirstConfig(int n, Player first_mover = Player::kMaker);

// "1:1", "1:2" (double-first variant), "1:2 standard", "m:b" otherwise.
std::string BiasLabel(const GameConfig& config);

struct Turn {
  Player player = Player::kMaker;
  std::vector<Diagonal> diagonals;

  bool operator==(const Turn&) const = default;
};

struct GameState {
  GameConfig config;
  DiagonalSet maker{4};
  DiagonalSet breaker{4};
  Player to_move = Player::kMaker;
  int move_index = 0;  // turns played so far
  std::vector<Turn> history;
  Status status = Status::kOngoing;

  DiagonalSet Unclaimed() const;
  int TurnsPlayed(Player p) const;
  bool Finished() const { return status != Status::kOngoing; }

  bool operator==(const GameState&) const = default;
};

enum class GameErrorCode {
  kWrongTurn,
  kOccupied,
  kMalformed,
  kWrongArity,
  kFinished,
  kUnsupported,
};

std::string ToString(GameErrorCode code);

class GameError : public Error {
 public:
  GameError(GameErrorCode code, const std::string& what)
      : Error(what), code_(code) {}
  GameErrorCode code() const { return code_; }

 private:
  GameErrorCode code_;
};

GameState NewGame(const GameConfig& config);

// Number of diagonals the mover must claim now: the bias quota, capped by
// what is left on the board.
int Quota(const GameState& state);

// Maker is checked first; breaker_won means Maker and the unclaimed
// diagonals together hold no triangulation.
Status EvaluateStatus(const DiagonalSet& maker, const DiagonalSet& breaker);

// Diagonals may be given in either endpoint order. Throws GameError.
GameState ApplyMove(const GameState& state, Player player,
                    const std::vector<Diagonal>& diagonals);

// A triangulation inside Maker's set, if any.
std::optional<DiagonalSet> MakerWitness(const GameState& state);

// Replays history through ApplyMove from a fresh game.
GameState Replay(const GameConfig& config, const std::vector<Turn>& history);

}  // namespace polyblock

#endif  // POLYBLOCK_GAME_H_
