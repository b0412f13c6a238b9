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

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <httplib.h>
#include <json.hpp>

#include "pbtts/engine.hpp"
#include "pbtts/error.hpp"

// HTTP surface: request handlers as plain functions over an Engine, and
// the routing that binds them to a cpp-httplib server.

namespace pbtts {

enum class ErrorCode { BadRequest, UnsupportedDirection, UnsupportedInput, LanguageMismatch, Internal };

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadRequest: return "bad-request";
    case ErrorCode::UnsupportedDirection: return "unsupported-direction";
    case ErrorCode::UnsupportedInput: return "unsupported-input";
    case ErrorCode::LanguageMismatch: return "language-mismatch";
    case ErrorCode::Internal: return "internal";
  }
  return "internal";
}

inline int http_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadRequest: return 400;
    case ErrorCode::Internal: return 500;
    default: return 422;
  }
}

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

inline std::string dump_json(const nlohmann::json& j) {
  // UTF-8 passes through unescaped.
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

inline HttpReply error_reply(ErrorCode code, std::string_view message) {
  nlohmann::json j = {{"code", to_string(code)}, {"message", message}};
  return {http_status(code), "application/json", dump_json(j)};
}

inline nlohmann::json to_json(const TranslationResult& r) {
  nlohmann::json chunks = nlohmann::json::array();
  for (const Chunk& c : r.chunks) {
    chunks.push_back({{"source", c.source.surface},
                      {"gurmukhi", c.gurmukhi},
                      {"role", to_string(c.role)},
                      {"oov", c.oov}});
  }
  return {{"translation", r.text},
          {"chunks", std::move(chunks)},
          {"applied_rules", r.applied_rules},
          {"oov_count", r.oov_count}};
}

namespace service_detail {

// Parses a JSON object body and pulls its "text" string.
inline std::optional<nlohmann::json> parse_body(std::string_view body) {
  auto j = nlohmann::json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object() || !j.contains("text") || !j["text"].is_string()) {
    return std::nullopt;
  }
  return j;
}

template <typename Fn>
HttpReply guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const UnsupportedDirection& e) {
    return error_reply(ErrorCode::UnsupportedDirection, e.what());
  } catch (const LanguageMismatch& e) {
    return error_reply(ErrorCode::LanguageMismatch, e.what());
  } catch (const UnsupportedInput& e) {
    return error_reply(ErrorCode::UnsupportedInput, e.what());
  } catch (const NormalizationError& e) {
    return error_reply(ErrorCode::UnsupportedInput, e.what());
  } catch (const G2PError& e) {
    return error_reply(ErrorCode::UnsupportedInput, e.what());
  } catch (const std::exception& e) {
    return error_reply(ErrorCode::Internal, e.what());
  }
}

}  // namespace service_detail

// POST /api/translate  {"text": ...}
inline HttpReply handle_translate(const Engine& engine, std::string_view body) {
  const auto request = service_detail::parse_body(body);
  if (!request) return error_reply(ErrorCode::BadRequest, "expected a JSON object with string 'text'");
  return service_detail::guarded([&] {
    const auto result = engine.translate((*request)["text"].get<std::string>());
    return HttpReply{200, "application/json", dump_json(to_json(result))};
  });
}

// POST /api/speak  {"text": ..., "language": "en" | "pa" | "auto"}
inline HttpReply handle_speak(const Engine& engine, std::string_view body) {
  const auto request = service_detail::parse_body(body);
  if (!request) return error_reply(ErrorCode::BadRequest, "expected a JSON object with string 'text'");
  Language language = Language::Auto;
  if (request->contains("language")) {
    const auto& value = (*request)["language"];
    const auto parsed = value.is_string() ? parse_language(value.get<std::string>()) : std::nullopt;
    if (!parsed) return error_reply(ErrorCode::BadRequest, "language must be 'en', 'pa' or 'auto'");
    language = *parsed;
  }
  return service_detail::guarded([&] {
    const auto wav = engine.speak((*request)["text"].get<std::string>(), language);
    return HttpReply{200, "audio/wav", std::string(wav.begin(), wav.end())};
  });
}

inline HttpReply handle_health() { return {200, "application/json", R"({"status":"ok"})"}; }

// Registers the API routes, plus static files from `web_root` when given.
inline void mount_routes(httplib::Server& server, std::shared_ptr<const Engine> engine,
                         const std::optional<std::filesystem::path>& web_root = std::nullopt) {
  const auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  };
  server.Post("/api/translate", [engine, send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_translate(*engine, req.body));
  });
  server.Post("/api/speak", [engine, send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_speak(*engine, req.body));
  });
  server.Get("/api/health", [send](const httplib::Request&, httplib::Response& res) {
    send(res, handle_health());
  });
  if (web_root && std::filesystem::is_directory(*web_root)) {
    server.set_mount_point("/", web_root->string());
  }
}

}  // namespace pbtts
