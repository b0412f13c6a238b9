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

#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <httplib.h>
#include <json.hpp>

#include "oracles.hpp"

extern char** environ;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs a shell command line; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" + std::string(PBTTS_CLI_PATH) + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pbtts_cli_" + name);
}

TEST(Cli, TranslateGolden) {
  const auto r = run("translate 'Who did this?'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?\n");
}

TEST(Cli, TranslateEmpty) {
  const auto r = run("translate ''");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "\n");
}

TEST(Cli, TranslateDetails) {
  const auto r = run("translate --details 'Who did zebra?'");
  ASSERT_EQ(r.status, 0);
  const auto nl = r.out.find('\n');
  EXPECT_EQ(r.out.substr(0, nl), "zebra ਕਿਸ ਨੇ ਕੀਤਾ?");
  const auto j = nlohmann::json::parse(r.out.substr(nl + 1));
  EXPECT_EQ(j["oov_count"], 1);
}

TEST(Cli, TranslateRejectsGurmukhi) { EXPECT_NE(run("translate 'ਇਹ'").status, 0); }

TEST(Cli, SpeakWritesWav) {
  const auto out = temp("speak.wav");
  std::filesystem::remove(out);
  const auto r = run("speak --lang pa --out '" + out.string() + "' 'ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?'");
  ASSERT_EQ(r.status, 0);
  const std::string bytes = pbtts_test::read_file(out);
  ASSERT_GT(bytes.size(), 44u);
  EXPECT_EQ(bytes.substr(0, 4), "RIFF");
  std::filesystem::remove(out);
}

TEST(Cli, SpeakErrors) {
  const auto out = temp("bad.wav");
  EXPECT_NE(run("speak --lang pa --out '" + out.string() + "' hello").status, 0);
  EXPECT_NE(run("speak --lang xx --out '" + out.string() + "' hello").status, 0);
  EXPECT_NE(run("speak hello").status, 0);
  EXPECT_NE(run("speak --out /nonexistent/dir/x.wav hello").status, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_NE(run("").status, 0);
  EXPECT_NE(run("frobnicate").status, 0);
  EXPECT_NE(run("translate").status, 0);
}

TEST(Cli, ConfigResolution) {
  const std::string shipped = pbtts_test::data_path("config.json").string();
  EXPECT_NE(run("translate did", "PB_CONFIG=/nonexistent.json").status, 0);
  EXPECT_EQ(run("translate did", "PB_CONFIG='" + shipped + "'").out, "ਕੀਤਾ\n");
  // The flag wins over the environment, before or after the subcommand.
  EXPECT_EQ(run("--config '" + shipped + "' translate did", "PB_CONFIG=/nonexistent.json").status, 0);
  EXPECT_EQ(run("translate did --config '" + shipped + "'", "PB_CONFIG=/nonexistent.json").status, 0);
  EXPECT_NE(run("--config /nonexistent.json translate did").status, 0);
}

TEST(Cli, StartupFailsOnMissingData) {
  const auto cfg = temp("missing.json");
  std::ofstream(cfg) << R"({"lexicon_path":"nope.tsv","rules_path":"nope.tsv","voice_path":"nope.tsv"})";
  EXPECT_NE(run("--config '" + cfg.string() + "' translate did").status, 0);
  std::filesystem::remove(cfg);
}

TEST(Cli, ServeAnswersAndStopsOnSigterm) {
  const auto cfg = temp("serve.json");
  {
    nlohmann::json j = {{"lexicon_path", pbtts_test::data_path("lexicon.tsv").string()},
                        {"rules_path", pbtts_test::data_path("rules.tsv").string()},
                        {"voice_path", pbtts_test::data_path("voice.tsv").string()},
                        {"listen_address", "127.0.0.1:0"}};
    std::ofstream(cfg) << j.dump();
  }
  int fds[2];
  ASSERT_EQ(pipe(fds), 0);
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);
  posix_spawn_file_actions_addclose(&actions, fds[0]);
  const std::string exe = PBTTS_CLI_PATH;
  const std::string cfg_arg = cfg.string();
  char* argv[] = {const_cast<char*>(exe.c_str()), const_cast<char*>("serve"),
                  const_cast<char*>("--config"), const_cast<char*>(cfg_arg.c_str()), nullptr};
  pid_t pid = 0;
  ASSERT_EQ(posix_spawn(&pid, exe.c_str(), &actions, nullptr, argv, environ), 0);
  posix_spawn_file_actions_destroy(&actions);
  close(fds[1]);

  std::string banner;
  char c;
  while (read(fds[0], &c, 1) == 1 && c != '\n') banner += c;
  close(fds[0]);
  const auto colon = banner.rfind(':');
  ASSERT_NE(colon, std::string::npos) << banner;
  const int port = std::stoi(banner.substr(colon + 1));

  httplib::Client client("127.0.0.1", port);
  const auto health = client.Get("/api/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  const auto tr = client.Post("/api/translate", R"({"text":"Who did this?"})", "application/json");
  ASSERT_TRUE(tr);
  EXPECT_EQ(nlohmann::json::parse(tr->body)["translation"], "ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?");

  kill(pid, SIGTERM);
  int status = 0;
  waitpid(pid, &status, 0);
  EXPECT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 0);
  std::filesystem::remove(cfg);
}

}  // namespace
