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


#ifndef POLYBLOCK_SERVICE_H_
#define POLYBLOCK_SERVICE_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "polyblock/game.h"
#include "polyblock/strategies.h"

namespace polyblock {

inline constexpr int kMaxSessionPolygon = 50;

enum class ServiceErrorCode { kBadRequest, kNotFound, kNotYourTurn, kOccupied, kFinished };

// Wire name: "bad_request", "not_found", ...
std::string ToString(ServiceErrorCode code);
int HttpStatus(ServiceErrorCode code);

class ServiceError : public Error {
 public:
  ServiceError(ServiceErrorCode code, const std::string& detail)
      : Error(detail), code_(code) {}
  ServiceErrorCode code() const { return code_; }

 private:
  ServiceErrorCode code_;
};

enum class HumanRole { kMaker, kBreaker, kNone };

std::string ToString(HumanRole role);
HumanRole ParseHumanRole(std::string_view text);

// "1:1" or "1:2" (the double-first variant).
GameConfig ParseSessionBias(int n, std::string_view bias, Player first_mover);

struct Session {
  std::string id;
  HumanRole human = HumanRole::kMaker;
  std::uint64_t seed = 0;
  GameState state;
  // Diagonals the engine claimed in reply to the latest human move.
  std::vector<Diagonal> engine_reply;
  std::int64_t created_ms = 0;
  std::int64_t updated_ms = 0;
};

struct Hint {
  std::vector<Diagonal> diagonals;
  std::string source;  // "strategy", "solver" or "first_available"
};

// In-memory session registry. Distinct sessions proceed in parallel; calls on
// one session are serialized. All state changes go through ApplyMove.
class SessionManager {
 public:
  // seed == 0 draws ids and engine seeds from std::random_device; a fixed
  // seed makes both reproducible.
  explicit SessionManager(std::uint64_t seed = 0);
  ~SessionManager();

  Session Create(int n, HumanRole human, std::string_view bias, Player first_mover);
  Session Get(const std::string& id) const;
  Session SubmitMove(const std::string& id, const std::vector<Diagonal>& diagonals);
  Hint SuggestMove(const std::string& id) const;
  void Delete(const std::string& id);
  std::vector<std::string> Ids() const;
  std::size_t size() const;

  // {"version":1,"sessions":[...]}; sessions are restored by replaying their
  // history through the rules engine.
  nlohmann::json Snapshot() const;
  void Restore(const nlohmann::json& snapshot);
  void SaveFile(const std::string& path) const;
  void LoadFile(const std::string& path);

 private:
  struct Slot;

  std::shared_ptr<Slot> Find(const std::string& id) const;
  std::string NewId();
  std::uint64_t NextRandom();
  void Insert(std::shared_ptr<Slot> slot);

  mutable std::shared_mutex registry_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Slot>> sessions_;
  mutable std::mutex rng_mutex_;
  bool deterministic_ids_;
  std::mt19937_64 rng_;
  std::random_device device_;
};

// Engine strategy name for a role in a session game.
std::string EngineStrategyName(const GameConfig& config, Player role);

nlohmann::json DiagonalsToJson(const std::vector<Diagonal>& ds);
// Accepts [[i,j],...]; throws ServiceError(kBadRequest).
std::vector<Diagonal> DiagonalsFromJson(const nlohmann::json& j);

// The wire form of a session's state.
nlohmann::json StateToJson(const Session& session);

}  // namespace polyblock

#endif  // POLYBLOCK_SERVICE_H_
