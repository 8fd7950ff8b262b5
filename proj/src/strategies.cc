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


#include "polyblock/strategies.h"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "polyblock/triangulation.h"

namespace polyblock {
namespace {

int Mod(int v, int n) { return ((v % n) + n) % n; }

bool PairwiseNonCrossing(const DiagonalSet& s) {
  const std::vector<Diagonal> ds = s.Diagonals();
  for (std::size_t p = 0; p < ds.size(); ++p) {
    for (std::size_t q = p + 1; q < ds.size(); ++q) {
      if (Crosses(ds[p], ds[q])) return false;
    }
  }
  return true;
}

std::string DumpState(const GameState& state) {
  std::ostringstream out;
  out << "n=" << state.config.n << " bias=" << BiasLabel(state.config)
      << " to_move=" << ToString(state.to_move) << " status=" << ToString(state.status)
      << "\n  maker:   " << state.maker.ToString()
      << "\n  breaker: " << state.breaker.ToString();
  for (const Turn& turn : state.history) {
    out << "\n  " << ToString(turn.player) << ":";
    for (const Diagonal& d : turn.diagonals) out << ' ' << ToString(d);
  }
  return out.str();
}

void RequireUnbiased(const GameConfig& c) {
  if (c.maker_per_turn != 1 || c.breaker_per_turn != 1 || c.breaker_double_first_only) {
    throw GameError(GameErrorCode::kUnsupported,
                    "the Maker strategy needs the (1:1) game, not " + BiasLabel(c));
  }
}

void RequireDoubleFirst(const GameConfig& c) {
  if (c.maker_per_turn != 1 || !c.breaker_double_first_only) {
    throw GameError(GameErrorCode::kUnsupported,
                    "the Breaker strategy needs the (1:2) double-first game, not " +
                        BiasLabel(c));
  }
  if (c.n < 5) {
    throw GameError(GameErrorCode::kUnsupported, "Breaker cannot win for n = 4");
  }
}

}  // namespace

// ---------------------------------------------------------------- Maker

MakerMemory::MakerMemory(int n) : n_(n) {
  CheckPolygonSize(n);
  alive_.resize(n);
  for (int v = 0; v < n; ++v) alive_[v] = v;
}

MakerMemory MakerMemory::FromState(const GameState& state) {
  MakerMemory memory(state.config.n);
  for (const Turn& turn : state.history) {
    if (turn.player != Player::kMaker) continue;
    for (const Diagonal& d : turn.diagonals) memory.Apply(d);
  }
  return memory;
}

bool MakerMemory::IsAlive(int v) const {
  return std::binary_search(alive_.begin(), alive_.end(), v);
}

int MakerMemory::Pred(int v) const {
  auto it = std::lower_bound(alive_.begin(), alive_.end(), v);
  if (it == alive_.end() || *it != v) throw StrategyError("vertex is not alive");
  return it == alive_.begin() ? alive_.back() : *(it - 1);
}

int MakerMemory::Succ(int v) const {
  auto it = std::lower_bound(alive_.begin(), alive_.end(), v);
  if (it == alive_.end() || *it != v) throw StrategyError("vertex is not alive");
  return it + 1 == alive_.end() ? alive_.front() : *(it + 1);
}

Diagonal MakerMemory::EarOf(int v) const {
  if (alive_.size() < 4) throw StrategyError("reduced polygon has no ear-covers left");
  return Diagonal::Make(n_, Pred(v), Succ(v));
}

bool MakerMemory::IsLive(Diagonal d) const {
  auto pi = std::lower_bound(alive_.begin(), alive_.end(), d.i);
  auto pj = std::lower_bound(alive_.begin(), alive_.end(), d.j);
  if (pi == alive_.end() || *pi != d.i || pj == alive_.end() || *pj != d.j) return false;
  const int size = static_cast<int>(alive_.size());
  const int gap = static_cast<int>(std::abs(pj - pi));
  return std::min(gap, size - gap) >= 2;
}

std::vector<Diagonal> MakerMemory::LiveChords(const DiagonalSet& s) const {
  std::vector<Diagonal> live;
  for (const Diagonal& d : s.Diagonals()) {
    if (IsLive(d)) live.push_back(d);
  }
  return live;
}

void MakerMemory::Apply(Diagonal d) {
  if (alive_.size() >= 4) {
    for (int v : alive_) {
      if (EarOf(v) == d) {
        alive_.erase(std::lower_bound(alive_.begin(), alive_.end(), v));
        return;
      }
    }
  }
  throw StrategyError(ToString(d) + " is not an ear-cover of the reduced polygon");
}

Diagonal MakerStrategyMove(const GameState& state, const MakerMemory& memory) {
  RequireUnbiased(state.config);
  if (state.Finished() || state.to_move != Player::kMaker) {
    throw StrategyError("not Maker's turn");
  }
  if (memory.n() != state.config.n || memory.cuts() != state.maker.Size()) {
    throw StrategyError("Maker memory does not match the game history");
  }
  const std::vector<Diagonal> live = memory.LiveChords(state.breaker);
  if (live.size() > 1) {
    throw StrategyError("live-chord invariant violated: " +
                        DiagonalSet::FromDiagonals(state.config.n, live).ToString());
  }
  const int x = live.empty() ? memory.alive().front() : live.front().i;
  const Diagonal ear = memory.EarOf(x);
  if (state.maker.Contains(ear) || state.breaker.Contains(ear)) {
    throw StrategyError("ear-cover " + ToString(ear) + " is already claimed");
  }
  return ear;
}

// -------------------------------------------------------------- Breaker

BreakerMemory::BreakerMemory(int n) : n_(n) { CheckPolygonSize(n); }

void BreakerMemory::set_anchor(int a) { anchor_ = Mod(a, n_); }

BreakerMemory BreakerMemory::FromState(const GameState& state) {
  BreakerMemory memory(state.config.n);
  for (const Turn& turn : state.history) {
    if (turn.player != Player::kBreaker) continue;
    const DiagonalSet opening = DiagonalSet::FromDiagonals(state.config.n, turn.diagonals);
    for (int a = 0; a < state.config.n; ++a) {
      memory.set_anchor(a);
      const auto [e1, e2] = memory.Net();
      if (opening == DiagonalSet::FromDiagonals(state.config.n, {e1, e2})) return memory;
    }
    throw StrategyError("Breaker's first turn is not two consecutive ear-covers");
  }
  return memory;
}

std::vector<int> BreakerMemory::PairedVertices() const {
  if (!anchor_) throw StrategyError("anchor not chosen yet");
  std::vector<int> out;
  for (int x = 0; x < n_; ++x) {
    if (Mod(x - *anchor_, n_) >= 4) out.push_back(x);
  }
  return out;
}

std::pair<Diagonal, Diagonal> BreakerMemory::PairOf(int x) const {
  if (!anchor_) throw StrategyError("anchor not chosen yet");
  const int a = *anchor_;
  return {Diagonal::Make(n_, x, Mod(a + 1, n_)), Diagonal::Make(n_, x, Mod(a + 2, n_))};
}

std::optional<int> BreakerMemory::PairVertexOf(Diagonal d) const {
  if (!anchor_) return std::nullopt;
  const int a = *anchor_;
  for (int hub : {Mod(a + 1, n_), Mod(a + 2, n_)}) {
    int x = -1;
    if (d.i == hub) x = d.j;
    if (d.j == hub) x = d.i;
    if (x >= 0 && Mod(x - a, n_) >= 4) return x;
  }
  return std::nullopt;
}

bool BreakerMemory::Secured(int x, const DiagonalSet& breaker) const {
  const auto [p1, p2] = PairOf(x);
  return breaker.Contains(p1) || breaker.Contains(p2);
}

std::pair<Diagonal, Diagonal> BreakerMemory::Net() const {
  if (!anchor_) throw StrategyError("anchor not chosen yet");
  const int a = *anchor_;
  return {Diagonal::Make(n_, a, Mod(a + 2, n_)),
          Diagonal::Make(n_, Mod(a + 1, n_), Mod(a + 3, n_))};
}

std::optional<BlockerStructure> BreakerMemory::Structure(const DiagonalSet& breaker) const {
  if (!anchor_) return std::nullopt;
  BlockerStructure st;
  st.a = *anchor_;
  st.m = 1;
  // Beam vertices run a+4, a+5, ..., a+n-1.
  for (int offset = 4; offset < n_; ++offset) {
    const auto [p1, p2] = PairOf(Mod(*anchor_ + offset, n_));
    if (breaker.Contains(p1)) {
      st.beams.push_back(1);
    } else if (breaker.Contains(p2)) {
      st.beams.push_back(2);
    } else {
      return std::nullopt;
    }
  }
  return st;
}

std::optional<DiagonalSet> BreakerMemory::DisjointCompletion(const GameState& state) const {
  if (!anchor_) return std::nullopt;
  DiagonalSet out(n_);
  const auto [e1, e2] = Net();
  if (state.maker.Contains(e1) || state.maker.Contains(e2)) return std::nullopt;
  out.Insert(e1);
  out.Insert(e2);
  for (int x : PairedVertices()) {
    const auto [p1, p2] = PairOf(x);
    if (state.breaker.Contains(p1) || (!state.breaker.Contains(p2) && !state.maker.Contains(p1))) {
      out.Insert(p1);
    } else if (!state.maker.Contains(p2)) {
      out.Insert(p2);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

int ChooseAnchor(int n, const std::optional<Diagonal>& maker_opening) {
  if (!maker_opening) return 0;
  for (int a = 0; a < n; ++a) {
    const int h1 = Mod(a + 1, n), h2 = Mod(a + 2, n);
    const Diagonal d = *maker_opening;
    if (d.i != h1 && d.j != h1 && d.i != h2 && d.j != h2) return a;
  }
  throw StrategyError("no anchor avoids the opening diagonal");
}

std::vector<Diagonal> BreakerStrategyMoves(const GameState& state,
                                           const BreakerMemory& memory) {
  RequireDoubleFirst(state.config);
  if (state.Finished() || state.to_move != Player::kBreaker) {
    throw StrategyError("not Breaker's turn");
  }
  const int n = state.config.n;
  if (memory.n() != n) throw StrategyError("Breaker memory is for another board");
  const bool first_turn = state.TurnsPlayed(Player::kBreaker) == 0;
  if (first_turn) {
    BreakerMemory fresh(n);
    std::optional<Diagonal> opening;
    if (!state.history.empty()) opening = state.history.front().diagonals.front();
    fresh.set_anchor(memory.anchor() ? *memory.anchor() : ChooseAnchor(n, opening));
    const auto [e1, e2] = fresh.Net();
    if (!state.Unclaimed().Contains(e1) || !state.Unclaimed().Contains(e2)) {
      throw StrategyError("net ear-covers are not free");
    }
    return {e1, e2};
  }
  if (!memory.anchor()) throw StrategyError("Breaker memory has no anchor");

  const DiagonalSet free = state.Unclaimed();
  std::optional<int> answered;
  const Turn& last = state.history.back();
  if (last.player == Player::kMaker) {
    for (const Diagonal& d : last.diagonals) {
      const auto x = memory.PairVertexOf(d);
      if (!x) continue;
      const auto [p1, p2] = memory.PairOf(*x);
      const Diagonal partner = d == p1 ? p2 : p1;
      if (free.Contains(partner)) return {partner};
      answered = *x;
    }
  }
  for (int x : memory.PairedVertices()) {
    const auto [p1, p2] = memory.PairOf(x);
    const bool maker1 = state.maker.Contains(p1), maker2 = state.maker.Contains(p2);
    if (maker1 && maker2) {
      throw StrategyError("Maker owns both pair elements of vertex " + std::to_string(x));
    }
    if ((maker1 || maker2) && !memory.Secured(x, state.breaker) && answered != x) {
      throw StrategyError("pairing invariant broken at vertex " + std::to_string(x));
    }
  }
  for (int x : memory.PairedVertices()) {
    const auto [p1, p2] = memory.PairOf(x);
    if (free.Contains(p1) && free.Contains(p2)) return {p1};
  }
  throw StrategyError("no unsecured vertex left");
}

// ------------------------------------------------------------- players

namespace {

class PaperMaker : public Strategy {
 public:
  std::string name() const override { return "paper_maker"; }
  std::vector<Diagonal> Move(const GameState& state) override {
    if (!memory_ || memory_->n() != state.config.n || memory_->cuts() != state.maker.Size()) {
      memory_ = MakerMemory::FromState(state);
    }
    const Diagonal d = MakerStrategyMove(state, *memory_);
    memory_->Apply(d);
    return {d};
  }

 private:
  std::optional<MakerMemory> memory_;
};

class PaperBreaker : public Strategy {
 public:
  std::string name() const override { return "paper_breaker"; }
  std::vector<Diagonal> Move(const GameState& state) override {
    if (!memory_ || memory_->n() != state.config.n ||
        (state.TurnsPlayed(Player::kBreaker) > 0) != memory_->anchor().has_value()) {
      memory_ = BreakerMemory::FromState(state);
    }
    std::vector<Diagonal> moves = BreakerStrategyMoves(state, *memory_);
    if (!memory_->anchor()) {
      memory_ = BreakerMemory::FromState(ApplyMove(state, Player::kBreaker, moves));
    }
    return moves;
  }

 private:
  std::optional<BreakerMemory> memory_;
};

class RandomStrategy : public Strategy {
 public:
  explicit RandomStrategy(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  std::vector<Diagonal> Move(const GameState& state) override {
    std::vector<Diagonal> free = state.Unclaimed().Diagonals();
    const int quota = Quota(state);
    std::vector<Diagonal> out;
    for (int k = 0; k < quota; ++k) {
      std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
      const std::size_t p = pick(rng_);
      out.push_back(free[p]);
      free.erase(free.begin() + static_cast<std::ptrdiff_t>(p));
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

class FirstAvailable : public Strategy {
 public:
  std::string name() const override { return "first_available"; }
  std::vector<Diagonal> Move(const GameState& state) override {
    std::vector<Diagonal> free = state.Unclaimed().Diagonals();
    free.resize(Quota(state));
    return free;
  }
};

}  // namespace

std::vector<std::string> StrategyNames() {
  return {"paper_maker", "paper_breaker", "random", "first_available"};
}

std::unique_ptr<Strategy> MakeStrategy(const std::string& name, Player role,
                                       std::uint64_t seed) {
  if (name == "paper_maker") {
    if (role != Player::kMaker) throw Error("paper_maker can only play Maker");
    return std::make_unique<PaperMaker>();
  }
  if (name == "paper_breaker") {
    if (role != Player::kBreaker) throw Error("paper_breaker can only play Breaker");
    return std::make_unique<PaperBreaker>();
  }
  if (name == "random") return std::make_unique<RandomStrategy>(seed);
  if (name == "first_available") return std::make_unique<FirstAvailable>();
  throw Error("unknown strategy '" + name + "'");
}

// ---------------------------------------------------------- transcripts

std::string Transcript::ToText() const {
  std::ostringstream out;
  out << "n=" << config.n << " bias=" << BiasLabel(config)
      << " first=" << ToString(config.first_mover) << " maker=" << maker_strategy
      << " breaker=" << breaker_strategy << " seed=" << seed << '\n';
  for (const TranscriptEntry& e : entries) {
    out << e.index << ' ' << ToString(e.player) << ' '
        << DiagonalSet::FromDiagonals(config.n, e.diagonals).ToString() << ' '
        << ToString(e.status_after) << '\n';
  }
  out << "result " << ToString(status) << " maker_moves=" << maker_moves
      << " breaker_turns=" << breaker_turns << '\n';
  return out.str();
}

std::string Transcript::ToJson() const {
  nlohmann::json moves = nlohmann::json::array();
  for (const TranscriptEntry& e : entries) {
    nlohmann::json ds = nlohmann::json::array();
    for (const Diagonal& d : e.diagonals) ds.push_back({d.i, d.j});
    moves.push_back({{"index", e.index},
                     {"player", ToString(e.player)},
                     {"diagonals", ds},
                     {"status_after", ToString(e.status_after)}});
  }
  nlohmann::json j = {{"n", config.n},
                      {"bias", BiasLabel(config)},
                      {"first", ToString(config.first_mover)},
                      {"maker_strategy", maker_strategy},
                      {"breaker_strategy", breaker_strategy},
                      {"seed", seed},
                      {"moves", moves},
                      {"status", ToString(status)},
                      {"maker_moves", maker_moves},
                      {"breaker_turns", breaker_turns}};
  return j.dump();
}

Transcript PlayOut(const GameConfig& config, Strategy& maker, Strategy& breaker,
                   std::uint64_t seed) {
  Transcript t;
  t.config = config;
  t.maker_strategy = maker.name();
  t.breaker_strategy = breaker.name();
  t.seed = seed;
  GameState state = NewGame(config);
  while (!state.Finished()) {
    Strategy& mover = state.to_move == Player::kMaker ? maker : breaker;
    std::vector<Diagonal> move;
    try {
      move = mover.Move(state);
      state = ApplyMove(state, state.to_move, move);
    } catch (const GameError& e) {
      throw StrategyError(mover.name() + " made an illegal move: " + e.what() + "\n" +
                          DumpState(state));
    } catch (const StrategyError& e) {
      throw StrategyError(mover.name() + ": " + e.what() + "\n" + DumpState(state));
    }
    const Turn& turn = state.history.back();
    t.entries.push_back({state.move_index, turn.player, turn.diagonals, state.status});
  }
  t.status = state.status;
  t.maker_moves = state.TurnsPlayed(Player::kMaker);
  t.breaker_turns = state.TurnsPlayed(Player::kBreaker);
  t.final_state = state;
  return t;
}

Transcript PlayOut(const GameConfig& config, const std::string& maker_strategy,
                   const std::string& breaker_strategy, std::uint64_t seed) {
  auto maker = MakeStrategy(maker_strategy, Player::kMaker, seed);
  // Distinct streams when both sides are random.
  auto breaker = MakeStrategy(breaker_strategy, Player::kBreaker, seed ^ 0x9e3779b97f4a7c15ULL);
  return PlayOut(config, *maker, *breaker, seed);
}

// ------------------------------------------------- exhaustive adversaries

MakerVerification VerifyMakerStrategy(int n, Player first_mover) {
  MakerVerification report;
  report.n = n;
  report.first_mover = first_mover;
  const GameConfig config = UnbiasedConfig(n, first_mover);

  std::function<void(const GameState&, const MakerMemory&)> visit =
      [&](const GameState& state, const MakerMemory& memory) {
        if (state.Finished()) {
          ++report.leaves;
          if (state.status != Status::kMakerWon) {
            ++report.not_won;
          } else if (state.TurnsPlayed(Player::kMaker) != n - 3) {
            ++report.wrong_length;
          }
          return;
        }
        if (state.to_move == Player::kMaker) {
          MakerMemory next_memory = memory;
          GameState next;
          try {
            const Diagonal d = MakerStrategyMove(state, memory);
            next = ApplyMove(state, Player::kMaker, {d});
            next_memory.Apply(d);
          } catch (const Error&) {
            ++report.invariant_violations;
            ++report.leaves;
            return;
          }
          if (!PairwiseNonCrossing(next.maker)) ++report.crossing_sets;
          visit(next, next_memory);
          return;
        }
        for (const Diagonal& d : state.Unclaimed().Diagonals()) {
          visit(ApplyMove(state, Player::kBreaker, {d}), memory);
        }
      };
  visit(NewGame(config), MakerMemory(n));
  return report;
}

BreakerVerification VerifyBreakerStrategy(int n) {
  BreakerVerification report;
  report.n = n;
  const GameConfig config = DoubleFirstConfig(n, Player::kMaker);

  auto final_structure_ok = [&](const GameState& state, const BreakerMemory& memory) {
    const auto st = memory.Structure(state.breaker);
    if (!st) return false;
    try {
      ValidateStructure(n, *st);
    } catch (const Error&) {
      return false;
    }
    if (BuildEdges(n, *st) != state.breaker) return false;
    return ParseStructure(state.breaker).structure.has_value() && IsBlocker(state.breaker);
  };

  std::function<void(const GameState&, const BreakerMemory&)> visit =
      [&](const GameState& state, const BreakerMemory& memory) {
        if (state.Finished()) {
          ++report.leaves;
          if (state.status != Status::kBreakerWon) {
            ++report.not_won;
            return;
          }
          if (state.TurnsPlayed(Player::kBreaker) > n - 3) ++report.too_slow;
          if (!final_structure_ok(state, memory)) ++report.bad_structure;
          const auto parsed = ParseStructure(state.breaker).structure;
          if (parsed && parsed->m > 1) ++report.longer_ear_run;
          return;
        }
        if (state.to_move == Player::kMaker) {
          for (const Diagonal& d : state.Unclaimed().Diagonals()) {
            visit(ApplyMove(state, Player::kMaker, {d}), memory);
          }
          return;
        }
        GameState next;
        BreakerMemory next_memory = memory;
        try {
          const std::vector<Diagonal> moves = BreakerStrategyMoves(state, memory);
          next = ApplyMove(state, Player::kBreaker, moves);
          if (!next_memory.anchor()) next_memory = BreakerMemory::FromState(next);
        } catch (const Error&) {
          ++report.leaves;
          ++report.not_won;
          return;
        }
        const auto completion = next_memory.DisjointCompletion(next);
        if (!completion || completion->Intersects(next.maker) || !IsBlocker(*completion)) {
          ++report.no_disjoint_blocker;
        }
        visit(next, next_memory);
      };
  visit(NewGame(config), BreakerMemory(n));
  return report;
}

}  // namespace polyblock
