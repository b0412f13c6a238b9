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

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pbtts/error.hpp"
#include "pbtts/lexicon.hpp"
#include "pbtts/speak.hpp"
#include "pbtts/translator.hpp"
#include "pbtts/voice.hpp"

namespace pbtts {

struct ListenAddress {
  std::string host;
  std::uint16_t port = 0;
};

inline ListenAddress parse_listen_address(std::string_view text) {
  const std::size_t colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw ConfigError("listen_address '" + std::string(text) + "' is not host:port");
  }
  const auto port = detail::parse_u32(text.substr(colon + 1));
  if (!port || *port > 65535) {
    throw ConfigError("listen_address '" + std::string(text) + "' has a bad port");
  }
  return {std::string(text.substr(0, colon)), static_cast<std::uint16_t>(*port)};
}

struct EngineConfig {
  std::filesystem::path lexicon_path;
  std::filesystem::path rules_path;
  std::filesystem::path voice_path;
  std::string listen_address = "127.0.0.1:8080";
  std::optional<std::filesystem::path> web_root;
  ContextPolicy policy;
};

// Reads a JSON config. Relative paths resolve against the config file's
// directory; the three data files must exist.
inline EngineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path.string() + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config '" + path.string() + "' is not an object");

  const auto base = path.parent_path();
  const auto resolve = [&](const std::filesystem::path& p) { return p.is_absolute() ? p : base / p; };
  const auto required_path = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_string()) {
      throw ConfigError(std::string("config lacks string field '") + key + "'");
    }
    const auto p = resolve(j[key].get<std::string>());
    if (!std::filesystem::is_regular_file(p)) {
      throw ConfigError(std::string(key) + " '" + p.string() + "' is not a readable file");
    }
    return p;
  };

  EngineConfig cfg;
  cfg.lexicon_path = required_path("lexicon_path");
  cfg.rules_path = required_path("rules_path");
  cfg.voice_path = required_path("voice_path");
  try {
    if (j.contains("listen_address")) cfg.listen_address = j.at("listen_address").get<std::string>();
    parse_listen_address(cfg.listen_address);
    if (j.contains("web_root")) cfg.web_root = resolve(j.at("web_root").get<std::string>());
    if (j.contains("plural_cues")) {
      cfg.policy.plural_cues.clear();
      for (const auto& cue : j.at("plural_cues")) {
        cfg.policy.plural_cues.insert(fold_headword(cue.get<std::string>()));
      }
    }
    if (j.contains("default_register")) {
      const auto reg = j.at("default_register").get<std::string>();
      if (reg == "FORMAL") cfg.policy.default_register = SpeechRegister::Formal;
      else if (reg == "INFORMAL") cfg.policy.default_register = SpeechRegister::Informal;
      else throw ConfigError("default_register must be FORMAL or INFORMAL");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

// Everything a request needs, loaded once and then only read.
struct Engine {
  Lexicon lexicon;
  std::vector<ReorderRule> rules;
  Voice voice;
  ContextPolicy policy;

  static Engine load(const EngineConfig& cfg) {
    Engine e{load_lexicon_file(cfg.lexicon_path.string()), load_rules_file(cfg.rules_path.string()),
             load_voice_file(cfg.voice_path.string()), cfg.policy};
    check_inventory(e.voice);
    return e;
  }

  TranslationResult translate(std::string_view text) const {
    return translate_sentence(text, lexicon, rules, policy);
  }

  std::vector<std::uint8_t> speak(std::string_view text, Language language = Language::Auto) const {
    return pbtts::speak(text, voice, language);
  }
};

}  // namespace pbtts
