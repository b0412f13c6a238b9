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

#include <cstring>
#include <filesystem>
#include <fstream>
#include <future>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fixtures.hpp"

namespace pbtts {
namespace {

using nlohmann::json;

const Engine& engine() { return *pbtts_test::shipped_engine(); }

json body_of(const HttpReply& r) { return json::parse(r.body); }

TEST(ServiceHandlers, TranslateGolden) {
  const auto r = handle_translate(engine(), R"({"text":"Who did this?"})");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "application/json");
  const auto j = body_of(r);
  EXPECT_EQ(j["translation"], "ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?");
  EXPECT_EQ(j["applied_rules"], json::array({"wh-fronting"}));
  EXPECT_EQ(j["oov_count"], 0);
  ASSERT_EQ(j["chunks"].size(), 4u);
  EXPECT_EQ(j["chunks"][0], json({{"source", "this"}, {"gurmukhi", "ਇਹ"}, {"role", "OBJECT"}, {"oov", false}}));
  // Gurmukhi is sent as raw UTF-8.
  EXPECT_NE(r.body.find("ਇਹ"), std::string::npos);
}

TEST(ServiceHandlers, TranslateEmptyAndOov) {
  const auto empty = body_of(handle_translate(engine(), R"({"text":""})"));
  EXPECT_EQ(empty["translation"], "");
  EXPECT_EQ(empty["chunks"], json::array());
  EXPECT_EQ(empty["oov_count"], 0);
  const auto zebra = body_of(handle_translate(engine(), R"({"text":"zebra"})"));
  EXPECT_EQ(zebra["translation"], "zebra");
  EXPECT_EQ(zebra["oov_count"], 1);
  EXPECT_EQ(zebra["chunks"][0]["oov"], true);
}

TEST(ServiceHandlers, TranslateErrors) {
  const auto gurmukhi = handle_translate(engine(), R"({"text":"ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?"})");
  EXPECT_EQ(gurmukhi.status, 422);
  EXPECT_EQ(body_of(gurmukhi)["code"], "unsupported-direction");
  EXPECT_TRUE(body_of(gurmukhi)["message"].is_string());
  for (std::string_view bad : {"", "{", "[]", R"({"text":3})", R"({"txt":"a"})", "null"}) {
    const auto r = handle_translate(engine(), bad);
    EXPECT_EQ(r.status, 400) << bad;
    EXPECT_EQ(body_of(r)["code"], "bad-request") << bad;
  }
  const auto big = handle_translate(engine(), R"({"text":"1000000 cats"})");
  EXPECT_EQ(big.status, 422);
  EXPECT_EQ(body_of(big)["code"], "unsupported-input");
}

TEST(ServiceHandlers, Speak) {
  const auto pa = handle_speak(engine(), R"({"text":"ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?","language":"pa"})");
  EXPECT_EQ(pa.status, 200);
  EXPECT_EQ(pa.content_type, "audio/wav");
  EXPECT_GT(pa.body.size(), 44u);
  EXPECT_EQ(pa.body.compare(0, 4, "RIFF"), 0);
  const auto empty = handle_speak(engine(), R"({"text":"","language":"en"})");
  EXPECT_EQ(empty.body.size(), 44u);
  const auto implicit = handle_speak(engine(), R"({"text":"Who did this?"})");
  EXPECT_EQ(implicit.status, 200);
}

TEST(ServiceHandlers, SpeakErrors) {
  const auto expect_error = [](const HttpReply& r, int status, std::string_view code) {
    EXPECT_EQ(r.status, status);
    EXPECT_EQ(json::parse(r.body)["code"], code);
  };
  expect_error(handle_speak(engine(), R"({"text":"hello ਇਹ"})"), 422, "unsupported-input");
  expect_error(handle_speak(engine(), R"({"text":"hello","language":"pa"})"), 422, "language-mismatch");
  expect_error(handle_speak(engine(), R"({"text":"ਇਹ","language":"en"})"), 422, "language-mismatch");
  expect_error(handle_speak(engine(), R"({"text":"hi","language":"fr"})"), 400, "bad-request");
  expect_error(handle_speak(engine(), R"({"text":"hi","language":1})"), 400, "bad-request");
  expect_error(handle_speak(engine(), "not json"), 400, "bad-request");
  expect_error(handle_speak(engine(), R"({"text":"ab3c"})"), 422, "unsupported-input");
}

TEST(ServiceHandlers, Health) {
  const auto r = handle_health();
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(body_of(r), json({{"status", "ok"}}));
}

TEST(ServiceHandlers, ErrorCodeTable) {
  EXPECT_EQ(http_status(ErrorCode::BadRequest), 400);
  EXPECT_EQ(http_status(ErrorCode::UnsupportedDirection), 422);
  EXPECT_EQ(http_status(ErrorCode::UnsupportedInput), 422);
  EXPECT_EQ(http_status(ErrorCode::LanguageMismatch), 422);
  EXPECT_EQ(http_status(ErrorCode::Internal), 500);
}

class ServiceHttp : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { server_ = new pbtts_test::LoopbackServer(pbtts_test::shipped_engine()); }
  static void TearDownTestSuite() { delete server_; }
  static httplib::Client client() { return server_->client(); }

 private:
  static inline pbtts_test::LoopbackServer* server_ = nullptr;
};

TEST_F(ServiceHttp, Health) {
  auto c = client();
  const auto res = c.Get("/api/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body), json({{"status", "ok"}}));
}

TEST_F(ServiceHttp, Translate) {
  auto c = client();
  const auto res = c.Post("/api/translate", R"({"text":"Who did this?"})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(json::parse(res->body)["translation"], "ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?");

  const auto bad = c.Post("/api/translate", "{", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
  EXPECT_EQ(json::parse(bad->body)["code"], "bad-request");

  const auto reverse = c.Post("/api/translate", R"({"text":"ਇਹ"})", "application/json");
  ASSERT_TRUE(reverse);
  EXPECT_EQ(reverse->status, 422);
  EXPECT_EQ(json::parse(reverse->body)["code"], "unsupported-direction");
}

TEST_F(ServiceHttp, Speak) {
  auto c = client();
  const auto res = c.Post("/api/speak", R"({"text":"ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?","language":"pa"})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "audio/wav");
  EXPECT_EQ(res->body.compare(0, 4, "RIFF"), 0);
  const auto again = c.Post("/api/speak", R"({"text":"ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?","language":"pa"})", "application/json");
  ASSERT_TRUE(again);
  EXPECT_EQ(again->body, res->body);
}

TEST_F(ServiceHttp, UnknownRouteIs404) {
  auto c = client();
  const auto res = c.Get("/api/nothing");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
}

TEST_F(ServiceHttp, ConcurrentIdenticalRequests) {
  const auto fire = [](std::string path, std::string body) {
    auto c = client();
    const auto res = c.Post(path, body, "application/json");
    return res ? std::to_string(res->status) + "\n" + res->body : std::string("no response");
  };
  for (const auto& [path, body] :
       std::vector<std::pair<std::string, std::string>>{
           {"/api/translate", R"({"text":"Who did this?"})"},
           {"/api/speak", R"({"text":"ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?","language":"pa"})"}}) {
    std::vector<std::future<std::string>> replies;
    for (int i = 0; i < 8; ++i) replies.push_back(std::async(std::launch::async, fire, path, body));
    const std::string first = replies[0].get();
    EXPECT_EQ(first.substr(0, 4), "200\n");
    for (std::size_t i = 1; i < replies.size(); ++i) EXPECT_EQ(replies[i].get(), first) << path;
  }
}

TEST(ServiceStatic, ServesWebRoot) {
  const auto root = std::filesystem::temp_directory_path() / "pbtts_web_root_test";
  std::filesystem::create_directories(root);
  std::ofstream(root / "index.html") << "<p>ok</p>";
  httplib::Server server;
  mount_routes(server, pbtts_test::shipped_engine(), root);
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client c("127.0.0.1", port);
  const auto res = c.Get("/index.html");
  server.stop();
  t.join();
  std::filesystem::remove_all(root);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, "<p>ok</p>");
}

TEST(Config, ShippedConfig) {
  const auto cfg = load_config(pbtts_test::data_path("config.json"));
  EXPECT_EQ(cfg.listen_address, "127.0.0.1:8080");
  EXPECT_TRUE(std::filesystem::is_regular_file(cfg.lexicon_path));
  EXPECT_EQ(cfg.policy.default_register, SpeechRegister::Formal);
  EXPECT_TRUE(cfg.policy.plural_cues.contains("all"));
}

TEST(Config, Errors) {
  const auto dir = std::filesystem::temp_directory_path() / "pbtts_config_test";
  std::filesystem::create_directories(dir);
  const auto write = [&](const std::string& text) {
    std::ofstream(dir / "c.json") << text;
    return dir / "c.json";
  };
  const std::string files = "\"lexicon_path\":\"" + pbtts_test::data_path("lexicon.tsv").string() +
                            "\",\"rules_path\":\"" + pbtts_test::data_path("rules.tsv").string() +
                            "\",\"voice_path\":\"" + pbtts_test::data_path("voice.tsv").string() + "\"";
  EXPECT_NO_THROW(load_config(write("{" + files + "}")));
  EXPECT_THROW(load_config(write("{")), ConfigError);
  EXPECT_THROW(load_config(write("[]")), ConfigError);
  EXPECT_THROW(load_config(write(R"({"lexicon_path":"missing.tsv"})")), ConfigError);
  EXPECT_THROW(load_config(write("{" + files + R"(,"listen_address":"nohost"})")), ConfigError);
  EXPECT_THROW(load_config(write("{" + files + R"(,"listen_address":"h:70000"})")), ConfigError);
  EXPECT_THROW(load_config(write("{" + files + R"(,"default_register":"POLITE"})")), ConfigError);
  EXPECT_THROW(load_config(dir / "absent.json"), ConfigError);
  std::filesystem::remove_all(dir);
  EXPECT_EQ(parse_listen_address("0.0.0.0:0").port, 0);
  EXPECT_EQ(parse_listen_address("localhost:65535").host, "localhost");
}

}  // namespace
}  // namespace pbtts
