// Copyright 2026 The pbtts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared fixtures: the shipped engine and a loopback HTTP server.

#pragma once

#include <memory>
#include <thread>

#include <httplib.h>

#include "oracles.hpp"
#include "pbtts/engine.hpp"
#include "pbtts/service.hpp"

namespace pbtts_test {

inline std::shared_ptr<const pbtts::Engine> shipped_engine() {
  static const auto engine = std::make_shared<const pbtts::Engine>(
      pbtts::Engine::load(pbtts::load_config(data_path("config.json"))));
  return engine;
}

// Serves the routes on an ephemeral loopback port until destroyed.
class LoopbackServer {
 public:
  explicit LoopbackServer(std::shared_ptr<const pbtts::Engine> engine) {
    pbtts::mount_routes(server_, std::move(engine));
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LoopbackServer() {
    server_.stop();
    thread_.join();
  }
  LoopbackServer(const LoopbackServer&) = delete;
  LoopbackServer& operator=(const LoopbackServer&) = delete;

  int port() const { return port_; }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(30, 0);
    return c;
  }

 private:
  httplib::Server server_;
  int port_ = -1;
  std::thread thread_;
};

}  // namespace pbtts_test
