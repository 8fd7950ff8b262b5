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


#include "polyblock/service.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "polyblock/blocker.h"
#include "polyblock/solver.h"
#include "polyblock/triangulation.h"

namespace polyblock {
namespace {

constexpr int kSnapshotVersion = 1;

std::int64_t NowMs() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::optional<Player> HumanPlayer(HumanRole role) {
  if (role == HumanRole::kMaker) return Player::kMaker;
  if (role == HumanRole::kBreaker) return Player::kBreaker;
  return std::nullopt;
}

ServiceErrorCode FromGameError(GameErrorCode code) {
  switch (code) {
    case GameErrorCode::kWrongTurn:
      return ServiceErrorCode::kNotYourTurn;
    case GameErrorCode::kOccupied:
      return ServiceErrorCode::kOccupied;
    case GameErrorCode::kFinished:
      return ServiceErrorCode::kFinished;
    default:
      return ServiceErrorCode::kBadRequest;
  }
}

std::string SessionBias(const GameConfig& c) {
  return c.breaker_double_first_only ? "1:2" : "1:1";
}

// Drops members while the set still blocks; nullopt unless the remainder
// has the normal form.
std::optional<BlockerStructure> BlockerInside(const DiagonalSet& breaker) {
  DiagonalSet b = breaker;
  for (const Diagonal& d : breaker.Diagonals()) {
    DiagonalSet smaller = b;
    smaller.Erase(d);
    if (IsBlockingSet(smaller)) b = smaller;
  }
  if (!IsBlocker(b)) return std::nullopt;
  return ParseStructure(b).structure;
}

nlohmann::json StructureToJson(int n, const BlockerStructure& st) {
  const DiagonalSet edges = BuildEdges(n, st);
  std::vector<Diagonal> net, beams;
  for (const Diagonal& d : edges.Diagonals()) {
    bool in_net = false;
    for (int t = 0; t <= st.m; ++t) {
      in_net = in_net || d == Diagonal::Make(n, (st.a + t) % n, (st.a + t + 2) % n);
    }
    (in_net ? net : beams).push_back(d);
  }
  return {{"a", st.a}, {"m", st.m}, {"beams", st.beams},
          {"net", DiagonalsToJson(net)}, {"beam_edges", DiagonalsToJson(beams)}};
}

nlohmann::json HistoryToJson(const std::vector<Turn>& history) {
  nlohmann::json out = nlohmann::json::array();
  for (const Turn& t : history) {
    out.push_back({{"player", ToString(t.player)}, {"diagonals", DiagonalsToJson(t.diagonals)}});
  }
  return out;
}

std::vector<Turn> HistoryFromJson(const nlohmann::json& j) {
  std::vector<Turn> out;
  for (const auto& t : j) {
    out.push_back({ParsePlayer(t.at("player").get<std::string>()),
                   DiagonalsFromJson(t.at("diagonals"))});
  }
  return out;
}

}  // namespace

std::string ToString(ServiceErrorCode code) {
  switch (code) {
    case ServiceErrorCode::kBadRequest:
      return "bad_request";
    case ServiceErrorCode::kNotFound:
      return "not_found";
    case ServiceErrorCode::kNotYourTurn:
      return "not_your_turn";
    case ServiceErrorCode::kOccupied:
      return "occupied";
    case ServiceErrorCode::kFinished:
      return "finished";
  }
  return "?";
}

int HttpStatus(ServiceErrorCode code) {
  switch (code) {
    case ServiceErrorCode::kBadRequest:
      return 400;
    case ServiceErrorCode::kNotFound:
      return 404;
    default:
      return 409;
  }
}

std::string ToString(HumanRole role) {
  switch (role) {
    case HumanRole::kMaker:
      return "maker";
    case HumanRole::kBreaker:
      return "breaker";
    case HumanRole::kNone:
      return "none";
  }
  return "?";
}

HumanRole ParseHumanRole(std::string_view text) {
  if (text == "maker") return HumanRole::kMaker;
  if (text == "breaker") return HumanRole::kBreaker;
  if (text == "none") return HumanRole::kNone;
  throw ServiceError(ServiceErrorCode::kBadRequest,
                     "human must be maker, breaker or none, got '" + std::string(text) + "'");
}

GameConfig ParseSessionBias(int n, std::string_view bias, Player first_mover) {
  if (n < kMinPolygonSize || n > kMaxSessionPolygon) {
    throw ServiceError(ServiceErrorCode::kBadRequest,
                       "n must be in [4, 50], got " + std::to_string(n));
  }
  if (bias == "1:1") return UnbiasedConfig(n, first_mover);
  if (bias == "1:2") return DoubleFirstConfig(n, first_mover);
  throw ServiceError(ServiceErrorCode::kBadRequest,
                     "bias must be 1:1 or 1:2, got '" + std::string(bias) + "'");
}

std::string EngineStrategyName(const GameConfig& config, Player role) {
  if (role == Player::kMaker && BiasLabel(config) == "1:1") return "paper_maker";
  if (role == Player::kBreaker && config.breaker_double_first_only && config.n >= 5) {
    return "paper_breaker";
  }
  return "random";
}

nlohmann::json DiagonalsToJson(const std::vector<Diagonal>& ds) {
  nlohmann::json out = nlohmann::json::array();
  for (const Diagonal& d : ds) out.push_back({d.i, d.j});
  return out;
}

std::vector<Diagonal> DiagonalsFromJson(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw ServiceError(ServiceErrorCode::kBadRequest, "diagonals must be a list of [i, j] pairs");
  }
  std::vector<Diagonal> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ServiceError(ServiceErrorCode::kBadRequest, "each diagonal must be [i, j]");
    }
    const auto i = pair[0].get<std::int64_t>(), k = pair[1].get<std::int64_t>();
    if (i < 0 || k < 0 || i > kMaxSessionPolygon || k > kMaxSessionPolygon) {
      throw ServiceError(ServiceErrorCode::kBadRequest, "vertex label out of range");
    }
    out.push_back({static_cast<int>(i), static_cast<int>(k)});
  }
  return out;
}

nlohmann::json StateToJson(const Session& session) {
  const GameState& s = session.state;
  nlohmann::json witness = nullptr;
  if (s.status == Status::kMakerWon) {
    if (const auto w = MakerWitness(s)) witness = DiagonalsToJson(w->Diagonals());
  }
  nlohmann::json structure = nullptr;
  if (s.status == Status::kBreakerWon) {
    if (const auto st = BlockerInside(s.breaker)) structure = StructureToJson(s.config.n, *st);
  }
  return {{"id", session.id},
          {"n", s.config.n},
          {"bias", SessionBias(s.config)},
          {"first", ToString(s.config.first_mover)},
          {"human", ToString(session.human)},
          {"maker", DiagonalsToJson(s.maker.Diagonals())},
          {"breaker", DiagonalsToJson(s.breaker.Diagonals())},
          {"turn", ToString(s.to_move)},
          {"quota", s.Finished() ? 0 : Quota(s)},
          {"status", ToString(s.status)},
          {"move_index", s.move_index},
          {"history", HistoryToJson(s.history)},
          {"witness", witness},
          {"breaker_structure", structure},
          {"engine_reply", DiagonalsToJson(session.engine_reply)},
          {"created_ms", session.created_ms},
          {"updated_ms", session.updated_ms}};
}

struct SessionManager::Slot {
  std::mutex mutex;
  Session session;

  // Engine turns until the human is to move or the game ends.
  std::vector<Diagonal> PlayEngine() {
    std::vector<Diagonal> reply;
    const auto human = HumanPlayer(session.human);
    GameState& s = session.state;
    while (!s.Finished() && s.to_move != human) {
      const Player role = s.to_move;
      // Seeded per turn so that a replayed session continues identically.
      auto engine = MakeStrategy(EngineStrategyName(s.config, role), role,
                                 session.seed + static_cast<std::uint64_t>(s.move_index));
      const std::vector<Diagonal> move = engine->Move(s);
      s = ApplyMove(s, role, move);
      reply.insert(reply.end(), s.history.back().diagonals.begin(),
                   s.history.back().diagonals.end());
    }
    return reply;
  }
};

SessionManager::SessionManager(std::uint64_t seed)
    : deterministic_ids_(seed != 0), rng_(seed) {}

SessionManager::~SessionManager() = default;

std::uint64_t SessionManager::NextRandom() {
  std::lock_guard lock(rng_mutex_);
  if (deterministic_ids_) return rng_();
  return (static_cast<std::uint64_t>(device_()) << 32) ^ device_();
}

std::string SessionManager::NewId() {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx",
                static_cast<unsigned long long>(NextRandom()),
                static_cast<unsigned long long>(NextRandom()));
  return buf;
}

void SessionManager::Insert(std::shared_ptr<Slot> slot) {
  std::unique_lock lock(registry_mutex_);
  sessions_[slot->session.id] = std::move(slot);
}

std::shared_ptr<SessionManager::Slot> SessionManager::Find(const std::string& id) const {
  std::shared_lock lock(registry_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw ServiceError(ServiceErrorCode::kNotFound, "no session '" + id + "'");
  }
  return it->second;
}

Session SessionManager::Create(int n, HumanRole human, std::string_view bias,
                               Player first_mover) {
  auto slot = std::make_shared<Slot>();
  Session& session = slot->session;
  session.state = NewGame(ParseSessionBias(n, bias, first_mover));
  session.human = human;
  session.seed = NextRandom();
  session.created_ms = session.updated_ms = NowMs();
  session.engine_reply = slot->PlayEngine();
  do {
    session.id = NewId();
  } while ([&] {
    std::shared_lock lock(registry_mutex_);
    return sessions_.count(session.id) > 0;
  }());
  Session copy = session;
  Insert(std::move(slot));
  return copy;
}

Session SessionManager::Get(const std::string& id) const {
  auto slot = Find(id);
  std::lock_guard lock(slot->mutex);
  return slot->session;
}

Session SessionManager::SubmitMove(const std::string& id,
                                   const std::vector<Diagonal>& diagonals) {
  auto slot = Find(id);
  std::lock_guard lock(slot->mutex);
  Session& session = slot->session;
  if (session.state.Finished()) {
    throw ServiceError(ServiceErrorCode::kFinished,
                       "game is over: " + ToString(session.state.status));
  }
  const auto human = HumanPlayer(session.human);
  if (!human || session.state.to_move != *human) {
    throw ServiceError(ServiceErrorCode::kNotYourTurn,
                       "it is " + ToString(session.state.to_move) + "'s turn");
  }
  try {
    session.state = ApplyMove(session.state, *human, diagonals);
  } catch (const GameError& e) {
    throw ServiceError(FromGameError(e.code()), e.what());
  }
  session.engine_reply = slot->PlayEngine();
  session.updated_ms = NowMs();
  return session;
}

Hint SessionManager::SuggestMove(const std::string& id) const {
  auto slot = Find(id);
  std::lock_guard lock(slot->mutex);
  const Session& session = slot->session;
  const GameState& s = session.state;
  if (s.Finished()) {
    throw ServiceError(ServiceErrorCode::kFinished, "game is over: " + ToString(s.status));
  }
  const auto human = HumanPlayer(session.human);
  if (!human || s.to_move != *human) {
    throw ServiceError(ServiceErrorCode::kNotYourTurn,
                       "it is " + ToString(s.to_move) + "'s turn");
  }
  // The built-in strategies only apply while the human has followed them.
  try {
    if (*human == Player::kMaker && BiasLabel(s.config) == "1:1") {
      return {{MakerStrategyMove(s, MakerMemory::FromState(s))}, "strategy"};
    }
    if (*human == Player::kBreaker && s.config.breaker_double_first_only && s.config.n >= 5) {
      return {BreakerStrategyMoves(s, BreakerMemory::FromState(s)), "strategy"};
    }
  } catch (const StrategyError&) {
  }
  try {
    CheckSolverFeasible(s.config, false);
    return {SolveFrom(s).best_move, "solver"};
  } catch (const Error&) {
  }
  std::vector<Diagonal> free = s.Unclaimed().Diagonals();
  free.resize(Quota(s));
  return {free, "first_available"};
}

void SessionManager::Delete(const std::string& id) {
  std::unique_lock lock(registry_mutex_);
  if (sessions_.erase(id) == 0) {
    throw ServiceError(ServiceErrorCode::kNotFound, "no session '" + id + "'");
  }
}

std::vector<std::string> SessionManager::Ids() const {
  std::shared_lock lock(registry_mutex_);
  std::vector<std::string> ids;
  for (const auto& [id, slot] : sessions_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::size_t SessionManager::size() const {
  std::shared_lock lock(registry_mutex_);
  return sessions_.size();
}

nlohmann::json SessionManager::Snapshot() const {
  nlohmann::json sessions = nlohmann::json::array();
  for (const std::string& id : Ids()) {
    std::shared_ptr<Slot> slot;
    try {
      slot = Find(id);
    } catch (const ServiceError&) {
      continue;  // deleted meanwhile
    }
    std::lock_guard lock(slot->mutex);
    const Session& s = slot->session;
    sessions.push_back({{"id", s.id},
                        {"n", s.state.config.n},
                        {"human", ToString(s.human)},
                        {"bias", SessionBias(s.state.config)},
                        {"first", ToString(s.state.config.first_mover)},
                        {"seed", s.seed},
                        {"created_ms", s.created_ms},
                        {"updated_ms", s.updated_ms},
                        {"history", HistoryToJson(s.state.history)},
                        {"engine_reply", DiagonalsToJson(s.engine_reply)}});
  }
  return {{"version", kSnapshotVersion}, {"sessions", sessions}};
}

void SessionManager::Restore(const nlohmann::json& snapshot) {
  try {
    if (snapshot.at("version").get<int>() != kSnapshotVersion) {
      throw Error("unsupported snapshot version " + snapshot.at("version").dump());
    }
    std::vector<std::shared_ptr<Slot>> restored;
    for (const auto& j : snapshot.at("sessions")) {
      auto slot = std::make_shared<Slot>();
      Session& s = slot->session;
      s.id = j.at("id").get<std::string>();
      s.human = ParseHumanRole(j.at("human").get<std::string>());
      s.seed = j.at("seed").get<std::uint64_t>();
      s.created_ms = j.at("created_ms").get<std::int64_t>();
      s.updated_ms = j.at("updated_ms").get<std::int64_t>();
      const GameConfig config =
          ParseSessionBias(j.at("n").get<int>(), j.at("bias").get<std::string>(),
                           ParsePlayer(j.at("first").get<std::string>()));
      s.state = Replay(config, HistoryFromJson(j.at("history")));
      s.engine_reply = DiagonalsFromJson(j.at("engine_reply"));
      restored.push_back(std::move(slot));
    }
    for (auto& slot : restored) Insert(std::move(slot));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed snapshot: ") + e.what());
  }
}

void SessionManager::SaveFile(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp);
    out << Snapshot().dump(1) << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot replace " + path);
}

void SessionManager::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed snapshot " + path + ": " + e.what());
  }
  Restore(j);
}

}  // namespace polyblock
