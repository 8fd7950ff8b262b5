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


#include "polyblock/game.h"

#include <algorithm>

#include "polyblock/triangulation.h"

namespace polyblock {

Player Opponent(Player p) {
  return p == Player::kMaker ? Player::kBreaker : Player::kMaker;
}

std::string ToString(Player p) {
  return p == Player::kMaker ? "maker" : "breaker";
}

std::string ToString(Status s) {
  switch (s) {
    case Status::kOngoing:
      return "ongoing";
    case Status::kMakerWon:
      return "maker_won";
    case Status::kBreakerWon:
      return "breaker_won";
  }
  return "?";
}

Player ParsePlayer(std::string_view text) {
  if (text == "maker") return Player::kMaker;
  if (text == "breaker") return Player::kBreaker;
  throw Error("expected maker or breaker, got '" + std::string(text) + "'");
}

std::string ToString(GameErrorCode code) {
  switch (code) {
    case GameErrorCode::kWrongTurn:
      return "not_your_turn";
    case GameErrorCode::kOccupied:
      return "occupied";
    case GameErrorCode::kMalformed:
      return "malformed";
    case GameErrorCode::kWrongArity:
      return "wrong_arity";
    case GameErrorCode::kFinished:
      return "finished";
    case GameErrorCode::kUnsupported:
      return "unsupported";
  }
  return "?";
}

void ValidateConfig(const GameConfig& config) {
  CheckPolygonSize(config.n);
  if (config.maker_per_turn < 1 || config.breaker_per_turn < 1) {
    throw Error("per-turn quotas must be at least 1");
  }
  if (config.breaker_double_first_only && config.breaker_per_turn != 2) {
    throw Error("the double-first variant requires breaker_per_turn = 2");
  }
}

GameConfig UnbiasedConfig(int n, Player first_mover) {
  GameConfig config;
  config.n = n;
  config.first_mover = first_mover;
  ValidateConfig(config);
  return config;
}

GameConfig DoubleFirstConfig(int n, Player first_mover) {
  GameConfig config;
  config.n = n;
  config.breaker_per_turn = 2;
  config.breaker_double_first_only = true;
  config.first_mover = first_mover;
  ValidateConfig(config);
  return config;
}

std::string BiasLabel(const GameConfig& config) {
  std::string label = std::to_string(config.maker_per_turn) + ":" +
                      std::to_string(config.breaker_per_turn);
  if (config.maker_per_turn == 1 && config.breaker_per_turn == 2 &&
      !config.breaker_double_first_only) {
    label += " standard";
  }
  return label;
}

DiagonalSet GameState::Unclaimed() const {
  return (maker | breaker).Complement();
}

int GameState::TurnsPlayed(Player p) const {
  return static_cast<int>(std::count_if(
      history.begin(), history.end(), [p](const Turn& t) { return t.player == p; }));
}

GameState NewGame(const GameConfig& config) {
  ValidateConfig(config);
  GameState state;
  state.config = config;
  state.maker = DiagonalSet(config.n);
  state.breaker = DiagonalSet(config.n);
  state.to_move = config.first_mover;
  return state;
}

int Quota(const GameState& state) {
  const GameConfig& c = state.config;
  int quota = c.maker_per_turn;
  if (state.to_move == Player::kBreaker) {
    quota = c.breaker_per_turn;
    if (c.breaker_double_first_only && state.TurnsPlayed(Player::kBreaker) > 0) {
      quota = 1;
    }
  }
  return std::min(quota, state.Unclaimed().Size());
}

Status EvaluateStatus(const DiagonalSet& maker, const DiagonalSet& breaker) {
  const int n = maker.n();
  if (maker.Size() >= n - 3 && ContainsTriangulation(maker)) {
    return Status::kMakerWon;
  }
  if (breaker.Size() >= n - 2 && !ContainsTriangulation(breaker.Complement())) {
    return Status::kBreakerWon;
  }
  return Status::kOngoing;
}

GameState ApplyMove(const GameState& state, Player player,
                    const std::vector<Diagonal>& diagonals) {
  if (state.Finished()) {
    throw GameError(GameErrorCode::kFinished, "game is over: " + ToString(state.status));
  }
  if (player != state.to_move) {
    throw GameError(GameErrorCode::kWrongTurn, "it is " + ToString(state.to_move) + "'s turn");
  }
  const int n = state.config.n;
  const int quota = Quota(state);
  if (static_cast<int>(diagonals.size()) != quota) {
    throw GameError(GameErrorCode::kWrongArity,
                    "expected " + std::to_string(quota) + " diagonal(s), got " +
                        std::to_string(diagonals.size()));
  }
  std::vector<Diagonal> canonical;
  DiagonalSet claimed(n);
  for (const Diagonal& raw : diagonals) {
    if (!IsValidDiagonal(n, raw.i, raw.j)) {
      throw GameError(GameErrorCode::kMalformed,
                      std::to_string(raw.i) + "-" + std::to_string(raw.j) +
                          " is not a diagonal of the " + std::to_string(n) + "-gon");
    }
    const Diagonal d = Diagonal::Make(n, raw.i, raw.j);
    if (claimed.Contains(d)) {
      throw GameError(GameErrorCode::kMalformed, ToString(d) + " listed twice");
    }
    if (state.maker.Contains(d) || state.breaker.Contains(d)) {
      throw GameError(GameErrorCode::kOccupied, ToString(d) + " is already claimed");
    }
    claimed.Insert(d);
    canonical.push_back(d);
  }
  GameState next = state;
  DiagonalSet& own = player == Player::kMaker ? next.maker : next.breaker;
  own = own | claimed;
  next.history.push_back({player, canonical});
  ++next.move_index;
  next.to_move = Opponent(player);
  next.status = EvaluateStatus(next.maker, next.breaker);
  return next;
}

std::optional<DiagonalSet> MakerWitness(const GameState& state) {
  return ContainsTriangulation(state.maker);
}

GameState Replay(const GameConfig& config, const std::vector<Turn>& history) {
  GameState state = NewGame(config);
  for (const Turn& turn : history) state = ApplyMove(state, turn.player, turn.diagonals);
  return state;
}

}  // namespace polyblock
