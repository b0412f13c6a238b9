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

// pbtts: translate English to Punjabi, speak text as WAV, or serve both
// over HTTP.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "pbtts/engine.hpp"
#include "pbtts/service.hpp"

namespace {

httplib::Server* g_server = nullptr;

extern "C" void on_signal(int) {
  if (g_server) g_server->stop();
}

// --config flag, then $PB_CONFIG, then the config shipped with the source.
std::string resolve_config(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("PB_CONFIG"); env && *env) return env;
  return PBTTS_DEFAULT_CONFIG;
}

int run_translate(const pbtts::Engine& engine, const std::string& text, bool details) {
  const auto result = engine.translate(text);
  std::cout << result.text << '\n';
  if (details) std::cout << pbtts::dump_json(pbtts::to_json(result)) << '\n';
  return 0;
}

int run_speak(const pbtts::Engine& engine, const std::string& text, const std::string& lang,
              const std::string& out_path) {
  const auto language = pbtts::parse_language(lang);
  if (!language) throw pbtts::ConfigError("--lang must be en, pa or auto");
  const auto wav = engine.speak(text, *language);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw pbtts::Error("cannot write '" + out_path + "'");
  out.write(reinterpret_cast<const char*>(wav.data()), static_cast<std::streamsize>(wav.size()));
  if (!out) throw pbtts::Error("short write to '" + out_path + "'");
  return 0;
}

int run_serve(const pbtts::EngineConfig& cfg) {
  const auto addr = pbtts::parse_listen_address(cfg.listen_address);
  auto engine = std::make_shared<const pbtts::Engine>(pbtts::Engine::load(cfg));
  httplib::Server server;
  pbtts::mount_routes(server, engine, cfg.web_root);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  int port = addr.port;
  if (port == 0) {
    port = server.bind_to_any_port(addr.host);
  } else if (!server.bind_to_port(addr.host, port)) {
    port = -1;
  }
  if (port < 0) throw pbtts::Error("cannot listen on " + cfg.listen_address);
  std::cout << "listening on " << addr.host << ':' << port << std::endl;
  const bool ok = server.listen_after_bind();
  g_server = nullptr;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"English to Punjabi translation and text-to-speech"};
  app.require_subcommand(1);
  std::string config_flag;
  app.add_option("--config", config_flag, "engine config JSON (default: $PB_CONFIG)");

  auto* translate = app.add_subcommand("translate", "translate an English sentence");
  translate->fallthrough();
  std::string text;
  bool details = false;
  translate->add_option("text", text, "English text")->required();
  translate->add_flag("--details", details, "also print chunks as JSON");

  auto* speak = app.add_subcommand("speak", "render text to a WAV file");
  speak->fallthrough();
  std::string lang = "auto";
  std::string out_path;
  speak->add_option("text", text, "text to speak")->required();
  speak->add_option("--lang", lang, "en, pa or auto")->check(CLI::IsMember({"en", "pa", "auto"}));
  speak->add_option("--out", out_path, "output WAV path")->required();

  auto* serve = app.add_subcommand("serve", "run the HTTP service");
  serve->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    const auto cfg = pbtts::load_config(resolve_config(config_flag));
    if (*serve) return run_serve(cfg);
    const auto engine = pbtts::Engine::load(cfg);
    if (*translate) return run_translate(engine, text, details);
    return run_speak(engine, text, lang, out_path);
  } catch (const std::exception& e) {
    std::cerr << "pbtts: " << e.what() << '\n';
    return 1;
  }
}
