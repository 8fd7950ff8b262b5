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


#ifndef POLYBLOCK_STRATEGIES_H_
#define POLYBLOCK_STRATEGIES_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyblock/blocker.h"
#include "polyblock/game.h"
#include "polyblock/polygon.h"

namespace polyblock {

// Thrown when a strategy finds its own invariant broken.
class StrategyError : public Error {
 public:
  using Error::Error;
};

// Maker's (1:1) strategy keeps a shrinking polygon R and always claims an
// ear-cover of R, then deletes the covered vertex.
class MakerMemory {
 public:
  explicit MakerMemory(int n);

  // Rebuilds R from Maker's moves in the history; throws StrategyError if a
  // Maker move was not an ear cut of the polygon at that time.
  static MakerMemory FromState(const GameState& state);

  int n() const { return n_; }
  const std::vector<int>& alive() const { return alive_; }
  int cuts() const { return n_ - static_cast<int>(alive_.size()); }
  bool IsAlive(int v) const;
  int Pred(int v) const;
  int Succ(int v) const;
  // Ear-cover of v in R.
  Diagonal EarOf(int v) const;
  // Both endpoints alive and non-adjacent in R.
  bool IsLive(Diagonal d) const;
  std::vector<Diagonal> LiveChords(const DiagonalSet& s) const;

  // Records that d (an ear-cover of R) was claimed and removes its vertex.
  void Apply(Diagonal d);

 private:
  int n_;
  std::vector<int> alive_;  // ascending labels
};

// Throws GameError(kUnsupported) unless the bias is (1:1), StrategyError on
// an inconsistent memory or a broken live-chord invariant.
Diagonal MakerStrategyMove(const GameState& state, const MakerMemory& memory);

// Breaker's double-first strategy: two consecutive ear-covers (a, a+2),
// (a+1, a+3) and a pairing x -> {(x, a+1), (x, a+2)} of every other vertex.
class BreakerMemory {
 public:
  explicit BreakerMemory(int n);

  static BreakerMemory FromState(const GameState& state);

  int n() const { return n_; }
  std::optional<int> anchor() const { return anchor_; }
  void set_anchor(int a);

  // Vertices outside {a, ..., a+3} in ascending label order.
  std::vector<int> PairedVertices() const;
  // (x, a+1) and (x, a+2).
  std::pair<Diagonal, Diagonal> PairOf(int x) const;
  // x when d is a pair element, else nullopt.
  std::optional<int> PairVertexOf(Diagonal d) const;
  bool Secured(int x, const DiagonalSet& breaker) const;
  // The two net ear-covers.
  std::pair<Diagonal, Diagonal> Net() const;

  // Normal form of Breaker's current claims: net (m = 1) plus one beam per
  // secured vertex; nullopt until every vertex is secured.
  std::optional<BlockerStructure> Structure(const DiagonalSet& breaker) const;

  // Net, Breaker's pair elements, and for every unsecured x an element not
  // owned by Maker. A blocker disjoint from Maker's set when the pairing
  // invariant holds; nullopt if some pair is entirely Maker's.
  std::optional<DiagonalSet> DisjointCompletion(const GameState& state) const;

 private:
  int n_;
  std::optional<int> anchor_;
};

// Smallest a such that neither a+1 nor a+2 touches the opening diagonal.
int ChooseAnchor(int n, const std::optional<Diagonal>& maker_opening);

// Throws GameError(kUnsupported) unless the config is the double-first
// (1:2) variant with n >= 5.
std::vector<Diagonal> BreakerStrategyMoves(const GameState& state,
                                           const BreakerMemory& memory);

// A participant in play_out. Strategies see the state and answer with the
// diagonals to claim this turn.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Diagonal> Move(const GameState& state) = 0;
};

// "paper_maker", "paper_breaker", "random", "first_available".
std::unique_ptr<Strategy> MakeStrategy(const std::string& name, Player role,
                                       std::uint64_t seed);
std::vector<std::string> StrategyNames();

struct TranscriptEntry {
  int index = 0;
  Player player = Player::kMaker;
  std::vector<Diagonal> diagonals;
  Status status_after = Status::kOngoing;
};

struct Transcript {
  GameConfig config;
  std::string maker_strategy;
  std::string breaker_strategy;
  std::uint64_t seed = 0;
  std::vector<TranscriptEntry> entries;
  Status status = Status::kOngoing;
  int maker_moves = 0;
  int breaker_turns = 0;
  GameState final_state;

  std::string ToText() const;
  std::string ToJson() const;
};

// Runs the game to the end. An illegal strategy move throws StrategyError
// carrying a dump of the state.
Transcript PlayOut(const GameConfig& config, const std::string& maker_strategy,
                   const std::string& breaker_strategy, std::uint64_t seed);
Transcript PlayOut(const GameConfig& config, Strategy& maker, Strategy& breaker,
                   std::uint64_t seed);

// Exhaustive adversaries: every opponent reply at every turn.
struct MakerVerification {
  int n = 0;
  Player first_mover = Player::kMaker;
  std::int64_t leaves = 0;
  std::int64_t wrong_length = 0;   // leaves not won in exactly n-3 moves
  std::int64_t not_won = 0;
  std::int64_t crossing_sets = 0;  // intermediate Maker sets that cross
  std::int64_t invariant_violations = 0;

  bool ok() const {
    return leaves > 0 && wrong_length == 0 && not_won == 0 && crossing_sets == 0 &&
           invariant_violations == 0;
  }
};

MakerVerification VerifyMakerStrategy(int n, Player first_mover);

struct BreakerVerification {
  int n = 0;
  std::int64_t leaves = 0;
  std::int64_t not_won = 0;
  std::int64_t too_slow = 0;        // more than n-3 Breaker turns
  std::int64_t bad_structure = 0;   // final set not a net-length-2 blocker
  std::int64_t no_disjoint_blocker = 0;
  // Won leaves where a beam is itself an ear-cover next to the net, so the
  // recomputed maximal ear run is longer than 2. Informational.
  std::int64_t longer_ear_run = 0;

  bool ok() const {
    return leaves > 0 && not_won == 0 && too_slow == 0 && bad_structure == 0 &&
           no_disjoint_blocker == 0;
  }
};

BreakerVerification VerifyBreakerStrategy(int n);

}  // namespace polyblock

#endif  // POLYBLOCK_STRATEGIES_H_
