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


#ifndef POLYBLOCK_HTTP_SERVER_H_
#define POLYBLOCK_HTTP_SERVER_H_

#include <memory>
#include <string>

#include "polyblock/service.h"

namespace httplib {
class Server;
}

namespace polyblock {

// JSON API under /api/v1 plus optional static files from static_dir.
class HttpServer {
 public:
  HttpServer(SessionManager& sessions, std::string static_dir = "");
  ~HttpServer();

  // Returns the bound port, or -1. Port 0 picks a free one.
  int Bind(const std::string& host, int port);
  // Serves until Stop(); returns false on a socket error.
  bool Run();
  void Stop();
  void WaitUntilReady() const;

 private:
  void Routes();

  SessionManager& sessions_;
  std::string static_dir_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace polyblock

#endif  // POLYBLOCK_HTTP_SERVER_H_
