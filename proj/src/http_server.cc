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


#include "polyblock/http_server.h"

#include "httplib.h"

namespace polyblock {
namespace {

constexpr const char* kJson = "application/json";

void SendError(httplib::Response& res, ServiceErrorCode code, const std::string& detail) {
  res.status = HttpStatus(code);
  res.set_content(nlohmann::json{{"error", ToString(code)}, {"detail", detail}}.dump(), kJson);
}

nlohmann::json ParseBody(const httplib::Request& req) {
  try {
    return nlohmann::json::parse(req.body);
  } catch (const nlohmann::json::exception& e) {
    throw ServiceError(ServiceErrorCode::kBadRequest, std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T Field(const nlohmann::json& body, const char* key, T fallback) {
  if (!body.contains(key)) return fallback;
  try {
    return body.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ServiceError(ServiceErrorCode::kBadRequest, std::string("bad field '") + key + "'");
  }
}

// Runs a handler, mapping exceptions to error payloads.
template <typename F>
httplib::Server::Handler Guard(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const ServiceError& e) {
      SendError(res, e.code(), e.what());
    } catch (const Error& e) {
      SendError(res, ServiceErrorCode::kBadRequest, e.what());
    }
  };
}

}  // namespace

HttpServer::HttpServer(SessionManager& sessions, std::string static_dir)
    : sessions_(sessions),
      static_dir_(std::move(static_dir)),
      server_(std::make_unique<httplib::Server>()) {
  Routes();
}

HttpServer::~HttpServer() { Stop(); }

void HttpServer::Routes() {
  httplib::Server& s = *server_;
  s.Post("/api/v1/games", Guard([this](const httplib::Request& req, httplib::Response& res) {
           const nlohmann::json body = ParseBody(req);
           if (!body.is_object() || !body.contains("n")) {
             throw ServiceError(ServiceErrorCode::kBadRequest, "body needs at least {\"n\": N}");
           }
           const Session session = sessions_.Create(
               Field<int>(body, "n", 0),
               ParseHumanRole(Field<std::string>(body, "human", "maker")),
               Field<std::string>(body, "bias", "1:1"),
               ParsePlayer(Field<std::string>(body, "first", "maker")));
           res.status = 201;
           res.set_content(nlohmann::json{{"id", session.id}, {"state", StateToJson(session)}}.dump(),
                           kJson);
         }));
  s.Get(R"(/api/v1/games/([^/]+))",
        Guard([this](const httplib::Request& req, httplib::Response& res) {
          res.set_content(StateToJson(sessions_.Get(req.matches[1])).dump(), kJson);
        }));
  s.Post(R"(/api/v1/games/([^/]+)/moves)",
         Guard([this](const httplib::Request& req, httplib::Response& res) {
           const nlohmann::json body = ParseBody(req);
           if (!body.is_object() || !body.contains("diagonals")) {
             throw ServiceError(ServiceErrorCode::kBadRequest, "body needs {\"diagonals\": [...]}");
           }
           const std::string id = req.matches[1];
           sessions_.Get(id);  // unknown sessions win over malformed bodies
           const Session session = sessions_.SubmitMove(id, DiagonalsFromJson(body["diagonals"]));
           res.set_content(StateToJson(session).dump(), kJson);
         }));
  s.Get(R"(/api/v1/games/([^/]+)/hint)",
        Guard([this](const httplib::Request& req, httplib::Response& res) {
          const Hint hint = sessions_.SuggestMove(req.matches[1]);
          res.set_content(
              nlohmann::json{{"diagonals", DiagonalsToJson(hint.diagonals)}, {"source", hint.source}}
                  .dump(),
              kJson);
        }));
  s.Delete(R"(/api/v1/games/([^/]+))",
           Guard([this](const httplib::Request& req, httplib::Response& res) {
             sessions_.Delete(req.matches[1]);
             res.status = 204;
           }));
  if (!static_dir_.empty() && !s.set_mount_point("/", static_dir_)) {
    throw Error("static directory not found: " + static_dir_);
  }
  s.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (res.status == 404 && res.body.empty() && req.path.rfind("/api/", 0) == 0) {
      SendError(res, ServiceErrorCode::kNotFound, "no route " + req.method + " " + req.path);
    }
  });
  s.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(nlohmann::json{{"error", "internal"}, {"detail", what}}.dump(), kJson);
  });
}

int HttpServer::Bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::Run() { return server_->listen_after_bind(); }

void HttpServer::Stop() {
  if (server_->is_running()) server_->stop();
}

void HttpServer::WaitUntilReady() const { server_->wait_until_ready(); }

}  // namespace polyblock
