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

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace pbtts {

// Base of every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed lexicon, rule or voice file. line() is 1-based; 0 when the
// problem is not tied to a single line.
class LoadError : public Error {
 public:
  LoadError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A value that breaks a domain invariant (empty candidate, bad headword...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  explicit NormalizationError(std::string token)
      : Error("number out of supported range [0, 999999]: '" + token + "'"),
        token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class G2PError : public Error {
 public:
  explicit G2PError(char32_t codepoint)
      : Error(describe(codepoint)), codepoint_(codepoint) {}
  char32_t codepoint() const noexcept { return codepoint_; }

 private:
  static std::string describe(char32_t cp) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
    return std::string("unsupported codepoint ") + buf;
  }
  char32_t codepoint_;
};

// Input whose script the requested operation does not handle.
class UnsupportedDirection : public Error {
 public:
  using Error::Error;
};

class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

class LanguageMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace pbtts
