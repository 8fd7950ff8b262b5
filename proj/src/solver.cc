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

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "polyblock/triangulation.h"

namespace polyblock {
namespace {

// Scores are from Maker's side: a Maker win needing k more Maker turns is k,
// a Breaker win needing j more Breaker turns is kBreakerBase - j. Maker
// minimizes, Breaker maximizes.
constexpr int kBreakerBase = 1000;

class Minimax {
 public:
  Minimax(const GameConfig& config, bool canonicalize)
      : config_(config),
        count_(DiagonalCount(config.n)),
        triangulations_(TriangulationMasks(config.n)),
        canonicalize_(canonicalize) {
    if (canonicalize_) {
      for (int k = 1; k < config.n; ++k) {
        std::vector<int> perm(count_);
        for (int index = 0; index < count_; ++index) {
          perm[index] = DiagonalIndex(config.n, Rotate(config.n, k, DiagonalAt(config.n, index)));
        }
        rotations_.push_back(std::move(perm));
      }
    }
  }

  std::int64_t visited() const { return visited_; }

  bool MakerWon(std::uint64_t maker) const {
    for (std::uint64_t t : triangulations_) {
      if ((t & maker) == t) return true;
    }
    return false;
  }

  bool BreakerWon(std::uint64_t breaker) const {
    for (std::uint64_t t : triangulations_) {
      if ((t & breaker) == 0) return false;
    }
    return true;
  }

  int Quota(std::uint64_t maker, std::uint64_t breaker, Player to_move) const {
    int quota = config_.maker_per_turn;
    if (to_move == Player::kBreaker) {
      quota = config_.breaker_per_turn;
      if (config_.breaker_double_first_only && breaker != 0) quota = 1;
    }
    const int free = count_ - std::popcount(maker | breaker);
    return std::min(quota, free);
  }

  // Every quota-sized subset of the free diagonals, as masks, in index order.
  std::vector<std::uint64_t> Moves(std::uint64_t maker, std::uint64_t breaker,
                                   Player to_move) const {
    std::vector<int> free;
    for (int index = 0; index < count_; ++index) {
      if (!(((maker | breaker) >> index) & 1)) free.push_back(index);
    }
    const int quota = Quota(maker, breaker, to_move);
    std::vector<std::uint64_t> out;
    std::function<void(std::size_t, int, std::uint64_t)> pick =
        [&](std::size_t from, int left, std::uint64_t chosen) {
          if (left == 0) {
            out.push_back(chosen);
            return;
          }
          for (std::size_t p = from; p + left <= free.size(); ++p) {
            pick(p + 1, left - 1, chosen | (std::uint64_t{1} << free[p]));
          }
        };
    pick(0, quota, 0);
    return out;
  }

  // Score of the child reached by `move`, seen from the current node.
  int ChildScore(std::uint64_t maker, std::uint64_t breaker, Player to_move,
                 std::uint64_t move) {
    int v;
    if (to_move == Player::kMaker) {
      v = Value(maker | move, breaker, Player::kBreaker);
      if (v < kBreakerBase / 2) ++v;
    } else {
      v = Value(maker, breaker | move, Player::kMaker);
      if (v >= kBreakerBase / 2) --v;
    }
    return v;
  }

  int Value(std::uint64_t maker, std::uint64_t breaker, Player to_move) {
    if (MakerWon(maker)) return 0;
    if (BreakerWon(breaker)) return kBreakerBase;
    const std::uint64_t key = Key(maker, breaker, to_move);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++visited_;
    const bool maker_moves = to_move == Player::kMaker;
    int best = maker_moves ? kBreakerBase + 1 : -1;
    for (std::uint64_t move : Moves(maker, breaker, to_move)) {
      const int v = ChildScore(maker, breaker, to_move, move);
      if (maker_moves ? v < best : v > best) best = v;
      // Nothing beats winning on this very turn.
      if (maker_moves && best == 1) break;
      if (!maker_moves && best == kBreakerBase - 1) break;
    }
    memo_.emplace(key, static_cast<std::int16_t>(best));
    return best;
  }

 private:
  std::uint64_t RawKey(std::uint64_t maker, std::uint64_t breaker, Player to_move) const {
    return maker | (breaker << 28) | (std::uint64_t{to_move == Player::kBreaker} << 56);
  }

  std::uint64_t Permute(std::uint64_t mask, const std::vector<int>& perm) const {
    std::uint64_t out = 0;
    for (; mask; mask &= mask - 1) out |= std::uint64_t{1} << perm[std::countr_zero(mask)];
    return out;
  }

  std::uint64_t Key(std::uint64_t maker, std::uint64_t breaker, Player to_move) const {
    std::uint64_t key = RawKey(maker, breaker, to_move);
    for (const std::vector<int>& perm : rotations_) {
      key = std::min(key, RawKey(Permute(maker, perm), Permute(breaker, perm), to_move));
    }
    return key;
  }

  GameConfig config_;
  int count_;
  std::vector<std::uint64_t> triangulations_;
  bool canonicalize_;
  std::vector<std::vector<int>> rotations_;
  std::unordered_map<std::uint64_t, std::int16_t> memo_;
  std::int64_t visited_ = 0;
};

SolveResult FromScore(int score) {
  SolveResult r;
  if (score < kBreakerBase / 2) {
    r.winner = Player::kMaker;
    r.moves = score;
  } else {
    r.winner = Player::kBreaker;
    r.moves = kBreakerBase - score;
  }
  return r;
}

}  // namespace

void CheckSolverFeasible(const GameConfig& config, bool allow_large) {
  ValidateConfig(config);
  int limit = config.maker_per_turn == 1 && config.breaker_per_turn == 1 ? 7 : 6;
  if (allow_large) ++limit;
  if (config.n > limit) {
    throw Error("solver refuses n = " + std::to_string(config.n) + " for bias " +
                BiasLabel(config) + " (limit " + std::to_string(limit) +
                (allow_large ? ")" : "; larger boards need the override)"));
  }
}

SolveResult SolveFrom(const GameState& state, const SolverOptions& options) {
  CheckSolverFeasible(state.config, options.allow_large);
  Minimax search(state.config, options.canonicalize_rotations);
  const std::uint64_t maker = state.maker.Mask();
  const std::uint64_t breaker = state.breaker.Mask();
  if (state.Finished()) {
    SolveResult r = FromScore(state.status == Status::kMakerWon ? 0 : kBreakerBase);
    return r;
  }
  const bool maker_moves = state.to_move == Player::kMaker;
  int best = maker_moves ? kBreakerBase + 1 : -1;
  std::uint64_t best_move = 0;
  for (std::uint64_t move : search.Moves(maker, breaker, state.to_move)) {
    const int v = search.ChildScore(maker, breaker, state.to_move, move);
    if (maker_moves ? v < best : v > best) {
      best = v;
      best_move = move;
    }
  }
  SolveResult r = FromScore(best);
  r.states_visited = search.visited();
  r.best_move = DiagonalSet::FromMask(state.config.n, best_move).Diagonals();
  return r;
}

SolveResult Solve(const GameConfig& config, const SolverOptions& options) {
  return SolveFrom(NewGame(config), options);
}

std::string SelfridgeResult::ToString() const {
  std::ostringstream out;
  if (exact) {
    out << exact->str();
  } else {
    out << "~" << decimal;
  }
  out << (implies_breaker_win ? " < " : " ≥ ") << threshold.str() << ": criterion "
      << (implies_breaker_win ? "implies a Breaker win" : "inconclusive");
  return out.str();
}

SelfridgeResult ErdosSelfridgePotential(int n, int maker_per_turn, int breaker_per_turn) {
  CheckPolygonSize(n);
  if (maker_per_turn < 1 || breaker_per_turn < 1) throw Error("bias must be positive");
  SelfridgeResult r;
  r.n = n;
  r.maker_per_turn = maker_per_turn;
  r.breaker_per_turn = breaker_per_turn;
  r.triangulations = CatalanNumber(n - 2);
  const int m = maker_per_turn;
  const BigInt base = breaker_per_turn + 1;
  const int size = n - 3;
  r.threshold = BigRational(BigInt(1), base);
  // C * base^(-size/m) < 1/base  <=>  C^m * base^m < base^size.
  const BigInt lhs = boost::multiprecision::pow(r.triangulations * base, m);
  const BigInt rhs = boost::multiprecision::pow(base, size);
  r.implies_breaker_win = lhs < rhs;
  if (size % m == 0) {
    r.exact = BigRational(r.triangulations, boost::multiprecision::pow(base, size / m));
  }
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  const Decimal value = Decimal(r.triangulations) *
                        boost::multiprecision::pow(Decimal(base), -Decimal(size) / m);
  r.decimal = value.str(30);
  return r;
}

}  // namespace polyblock
