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


#include "polyblock/solver.h"

#include <functional>
#include <random>

#include "doctest.h"
#include "polyblock/triangulation.h"

namespace polyblock {
namespace {

struct Outcome {
  Player winner;
  int turns;  // winner's turns from here
};

// Rank from Maker's point of view; lower is better for Maker.
int Rank(const Outcome& o) {
  return o.winner == Player::kMaker ? o.turns : 100 - o.turns;
}

// Plain game-tree search through the rules engine, no memo, no masks.
Outcome NaiveSolve(const GameState& s) {
  if (s.status == Status::kMakerWon) return {Player::kMaker, 0};
  if (s.status == Status::kBreakerWon) return {Player::kBreaker, 0};
  const std::vector<Diagonal> free = s.Unclaimed().Diagonals();
  const int quota = Quota(s);
  std::vector<Diagonal> chosen;
  std::optional<Outcome> best;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == quota) {
      Outcome o = NaiveSolve(ApplyMove(s, s.to_move, chosen));
      if (o.winner == s.to_move) ++o.turns;
      const bool better = !best || (s.to_move == Player::kMaker ? Rank(o) < Rank(*best)
                                                                : Rank(o) > Rank(*best));
      if (better) best = o;
      return;
    }
    for (std::size_t p = from; p < free.size(); ++p) {
      chosen.push_back(free[p]);
      choose(p + 1);
      chosen.pop_back();
    }
  };
  choose(0);
  return *best;
}

GameConfig Standard12(int n, Player first = Player::kMaker) {
  GameConfig c = UnbiasedConfig(n, first);
  c.breaker_per_turn = 2;
  return c;
}

TEST_CASE("solver examples") {
  SolveResult r = Solve(UnbiasedConfig(5));
  CHECK(r.winner == Player::kMaker);
  CHECK(r.moves == 2);
  CHECK(Solve(DoubleFirstConfig(6)).winner == Player::kBreaker);
  CHECK(Solve(UnbiasedConfig(5, Player::kBreaker)).winner == Player::kMaker);
}

TEST_CASE("threshold bias on small boards") {
  for (int n = 4; n <= 7; ++n) {
    const SolveResult r = Solve(UnbiasedConfig(n));
    CHECK(r.winner == Player::kMaker);
    CHECK(r.moves == n - 3);
    CHECK(r.states_visited >= 0);
  }
  for (int n = 5; n <= 6; ++n) {
    CHECK(Solve(DoubleFirstConfig(n)).winner == Player::kBreaker);
    CHECK(Solve(Standard12(n)).winner == Player::kBreaker);
  }
  // Maker's single diagonal already triangulates the square.
  CHECK(Solve(DoubleFirstConfig(4)).winner == Player::kMaker);
}

TEST_CASE("solver agrees with naive search") {
  std::vector<GameConfig> configs = {UnbiasedConfig(5), UnbiasedConfig(5, Player::kBreaker),
                                     DoubleFirstConfig(5), Standard12(5),
                                     Standard12(5, Player::kBreaker), UnbiasedConfig(6),
                                     DoubleFirstConfig(6)};
  for (const GameConfig& c : configs) {
    const SolveResult r = Solve(c);
    const Outcome o = NaiveSolve(NewGame(c));
    INFO("n=" << c.n << " bias=" << BiasLabel(c) << " first=" << ToString(c.first_mover));
    CHECK(r.winner == o.winner);
    CHECK(r.moves == o.turns);
  }
}

TEST_CASE("solve from mid-game positions matches naive search") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const GameConfig c = trial % 2 ? UnbiasedConfig(6) : DoubleFirstConfig(6);
    GameState s = NewGame(c);
    const int plies = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < plies && !s.Finished(); ++k) {
      std::vector<Diagonal> free = s.Unclaimed().Diagonals();
      std::shuffle(free.begin(), free.end(), rng);
      free.resize(Quota(s));
      s = ApplyMove(s, s.to_move, free);
    }
    const SolveResult r = SolveFrom(s);
    const Outcome o = NaiveSolve(s);
    CHECK(r.winner == o.winner);
    CHECK(r.moves == o.turns);
    if (!s.Finished()) {
      // The suggested move keeps the value.
      const Outcome after = NaiveSolve(ApplyMove(s, s.to_move, r.best_move));
      CHECK(after.winner == o.winner);
      CHECK(after.turns + (after.winner == s.to_move) == o.turns);
    }
  }
}

TEST_CASE("rotation canonicalization changes the memo, not the answer") {
  for (int n = 5; n <= 6; ++n) {
    for (const GameConfig& c : {UnbiasedConfig(n), DoubleFirstConfig(n)}) {
      SolverOptions options;
      const SolveResult plain = Solve(c, options);
      options.canonicalize_rotations = true;
      const SolveResult reduced = Solve(c, options);
      CHECK(plain.winner == reduced.winner);
      CHECK(plain.moves == reduced.moves);
      CHECK(reduced.states_visited <= plain.states_visited);
    }
  }
}

TEST_CASE("feasibility guard") {
  CHECK_THROWS_AS(Solve(UnbiasedConfig(8)), Error);
  CHECK_THROWS_AS(Solve(DoubleFirstConfig(7)), Error);
  CHECK_THROWS_AS(Solve(Standard12(7)), Error);
  SolverOptions options;
  options.allow_large = true;
  CHECK_THROWS_AS(Solve(UnbiasedConfig(9), options), Error);
  CHECK_NOTHROW(CheckSolverFeasible(DoubleFirstConfig(7), true));
  CHECK_NOTHROW(CheckSolverFeasible(UnbiasedConfig(8), true));
}

TEST_CASE("best move from a finished state is empty") {
  const GameState s = ApplyMove(NewGame(UnbiasedConfig(4)), Player::kMaker, {Diagonal{0, 2}});
  const SolveResult r = SolveFrom(s);
  CHECK(r.winner == Player::kMaker);
  CHECK(r.moves == 0);
  CHECK(r.best_move.empty());
}

TEST_CASE("Erdos-Selfridge potential examples") {
  SelfridgeResult r = ErdosSelfridgePotential(5, 1, 2);
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == BigRational(5, 9));
  CHECK(r.threshold == BigRational(1, 3));
  CHECK_FALSE(r.implies_breaker_win);
  CHECK(r.ToString() == "5/9 ≥ 1/3: criterion inconclusive");
  r = ErdosSelfridgePotential(8, 1, 2);
  CHECK(*r.exact == BigRational(132, 243));
  r = ErdosSelfridgePotential(10, 1, 1);
  CHECK(*r.exact == BigRational(1430, 128));
  CHECK_FALSE(r.implies_breaker_win);
  CHECK(r.decimal.substr(0, 8) == "11.17187");
}

TEST_CASE("potential stays at or above 1/3 for n = 5..16 under (1:2)") {
  for (int n = 5; n <= 16; ++n) {
    const SelfridgeResult r = ErdosSelfridgePotential(n, 1, 2);
    REQUIRE(r.exact.has_value());
    // Independent arithmetic: C(n-2) / 3^(n-3) against 1/3.
    BigInt power = 1;
    for (int k = 0; k < n - 3; ++k) power *= 3;
    CHECK(*r.exact == BigRational(CatalanNumber(n - 2), power));
    CHECK(*r.exact >= BigRational(1, 3));
    CHECK_FALSE(r.implies_breaker_win);
  }
}

TEST_CASE("fractional exponents are compared exactly") {
  // m = 2, n = 6: 14 * 2^(-3/2) ~ 4.95 against 1/2.
  SelfridgeResult r = ErdosSelfridgePotential(6, 2, 1);
  CHECK_FALSE(r.exact.has_value());
  CHECK(r.decimal.substr(0, 6) == "4.9497");
  CHECK_FALSE(r.implies_breaker_win);
  CHECK(r.ToString().rfind("~4.9497", 0) == 0);
  // A huge Breaker bias makes the criterion bite: 5 / 101^2 < 1/101.
  r = ErdosSelfridgePotential(5, 1, 100);
  CHECK(r.implies_breaker_win);
  r = ErdosSelfridgePotential(5, 2, 100);
  // 5 * 101^(-1) = 5/101 >= 1/101.
  CHECK_FALSE(r.implies_breaker_win);
}

}  // namespace
}  // namespace polyblock
