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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pbtts/error.hpp"
#include "pbtts/utf8.hpp"

// Script detection, tokenization and number normalization: the text
// analysis and normalization front of both the translator and the speaker.

namespace pbtts {

enum class Script { Latin, Gurmukhi, Neutral, Mixed };
enum class TokenKind { Word, Punct, Number };

inline std::string_view to_string(Script s) {
  switch (s) {
    case Script::Latin: return "LATIN";
    case Script::Gurmukhi: return "GURMUKHI";
    case Script::Neutral: return "NEUTRAL";
    case Script::Mixed: return "MIXED";
  }
  return "?";
}

inline std::string_view to_string(TokenKind k) {
  switch (k) {
    case TokenKind::Word: return "WORD";
    case TokenKind::Punct: return "PUNCT";
    case TokenKind::Number: return "NUMBER";
  }
  return "?";
}

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::Word;
  Script script = Script::Neutral;
  std::size_t index = 0;
  // Whitespace separated this token from the previous one in the source.
  bool space_before = false;

  bool operator==(const Token&) const = default;
};

// GURMUKHI when every letter is Gurmukhi, LATIN when every letter is basic
// Latin, NEUTRAL when there are no letters, MIXED otherwise.
inline Script detect_script(std::string_view text) {
  bool latin = false, gurmukhi = false, other = false;
  for (std::size_t pos = 0; pos < text.size();) {
    const char32_t cp = utf8::next(text, pos);
    if (utf8::is_latin_letter(cp)) latin = true;
    else if (utf8::is_gurmukhi_letter(cp)) gurmukhi = true;
    else if (utf8::is_letter(cp)) other = true;
  }
  const int kinds = int(latin) + int(gurmukhi) + int(other);
  if (kinds == 0) return Script::Neutral;
  if (kinds > 1 || other) return Script::Mixed;
  return latin ? Script::Latin : Script::Gurmukhi;
}

// Punctuation split off the edges of a whitespace-delimited run.
inline constexpr bool is_detachable_punct(char32_t cp) {
  switch (cp) {
    case '.': case ',': case '?': case '!': case ';': case ':':
    case '(': case ')': case '"': case '\'': case utf8::kDanda: case utf8::kDoubleDanda:
      return true;
    default:
      return false;
  }
}

namespace detail {

inline Token make_token(std::u32string_view cps, TokenKind kind, bool space_before) {
  Token t;
  t.surface = utf8::encode(cps);
  t.kind = kind;
  t.script = kind == TokenKind::Punct ? Script::Neutral : detect_script(t.surface);
  t.space_before = space_before;
  return t;
}

inline bool all_digits(std::u32string_view cps) {
  for (char32_t cp : cps) {
    if (!utf8::is_digit(cp)) return false;
  }
  return !cps.empty();
}

inline void reindex(std::vector<Token>& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].index = i;
}

}  // namespace detail

// Splits on whitespace, detaches leading and trailing punctuation as PUNCT
// tokens (one per codepoint) and marks all-digit runs as NUMBER.
inline std::vector<Token> tokenize(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  std::vector<Token> tokens;
  std::size_t i = 0;
  bool first_run = true;
  while (i < cps.size()) {
    while (i < cps.size() && utf8::is_space(cps[i])) ++i;
    if (i == cps.size()) break;
    std::size_t end = i;
    while (end < cps.size() && !utf8::is_space(cps[end])) ++end;
    const std::u32string_view run(cps.data() + i, end - i);
    bool space = !first_run;
    first_run = false;

    std::size_t lead = 0;
    while (lead < run.size() && is_detachable_punct(run[lead])) ++lead;
    std::size_t trail = run.size();
    while (trail > lead && is_detachable_punct(run[trail - 1])) --trail;

    for (std::size_t k = 0; k < lead; ++k) {
      tokens.push_back(detail::make_token(run.substr(k, 1), TokenKind::Punct, space));
      space = false;
    }
    if (trail > lead) {
      const auto core = run.substr(lead, trail - lead);
      tokens.push_back(detail::make_token(
          core, detail::all_digits(core) ? TokenKind::Number : TokenKind::Word, space));
      space = false;
    }
    for (std::size_t k = trail; k < run.size(); ++k) {
      tokens.push_back(detail::make_token(run.substr(k, 1), TokenKind::Punct, space));
      space = false;
    }
    i = end;
  }
  detail::reindex(tokens);
  return tokens;
}

// Inverse of tokenize up to whitespace: one space wherever the source had
// any whitespace between tokens.
inline std::string join_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (t.space_before && !out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

// Collapses whitespace runs to a single space and trims both ends.
inline std::string normalize_whitespace(std::string_view text) {
  std::string out;
  bool pending = false;
  for (std::size_t pos = 0; pos < text.size();) {
    const char32_t cp = utf8::next(text, pos);
    if (utf8::is_space(cp)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    utf8::append(out, cp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cardinal numbers
// ---------------------------------------------------------------------------

inline constexpr std::uint32_t kMaxCardinal = 999999;

namespace detail {

inline constexpr std::array<std::string_view, 20> kEnglishSmall = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

inline constexpr std::array<std::string_view, 10> kEnglishTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};

inline void english_below_thousand(std::uint32_t n, std::vector<std::string>& out) {
  if (n >= 100) {
    out.emplace_back(kEnglishSmall[n / 100]);
    out.emplace_back("hundred");
    n %= 100;
  }
  if (n >= 20) {
    out.emplace_back(kEnglishTens[n / 10]);
    n %= 10;
    if (n) out.emplace_back(kEnglishSmall[n]);
  } else if (n > 0) {
    out.emplace_back(kEnglishSmall[n]);
  }
}

// Punjabi has an irregular word for every value below one hundred.
inline constexpr std::array<std::string_view, 100> kPunjabiBelowHundred = {
    "ਸਿਫ਼ਰ", "ਇੱਕ", "ਦੋ", "ਤਿੰਨ", "ਚਾਰ", "ਪੰਜ", "ਛੇ", "ਸੱਤ", "ਅੱਠ", "ਨੌਂ",
    "ਦਸ", "ਗਿਆਰਾਂ", "ਬਾਰਾਂ", "ਤੇਰਾਂ", "ਚੌਦਾਂ", "ਪੰਦਰਾਂ", "ਸੋਲਾਂ", "ਸਤਾਰਾਂ", "ਅਠਾਰਾਂ", "ਉੱਨੀ",
    "ਵੀਹ", "ਇੱਕੀ", "ਬਾਈ", "ਤੇਈ", "ਚੌਵੀ", "ਪੱਚੀ", "ਛੱਬੀ", "ਸਤਾਈ", "ਅਠਾਈ", "ਉਨੱਤੀ",
    "ਤੀਹ", "ਇਕੱਤੀ", "ਬੱਤੀ", "ਤੇਤੀ", "ਚੌਂਤੀ", "ਪੈਂਤੀ", "ਛੱਤੀ", "ਸੈਂਤੀ", "ਅਠੱਤੀ", "ਉਨਤਾਲੀ",
    "ਚਾਲੀ", "ਇਕਤਾਲੀ", "ਬਿਆਲੀ", "ਤਰਤਾਲੀ", "ਚੁਤਾਲੀ", "ਪੰਜਤਾਲੀ", "ਛਿਆਲੀ", "ਸੰਤਾਲੀ", "ਅਠਤਾਲੀ", "ਉਨੰਜਾ",
    "ਪੰਜਾਹ", "ਇਕਵੰਜਾ", "ਬਵੰਜਾ", "ਤਰਵੰਜਾ", "ਚਰਵੰਜਾ", "ਪਚਵੰਜਾ", "ਛਪੰਜਾ", "ਸਤਵੰਜਾ", "ਅਠਵੰਜਾ", "ਉਨਾਹਠ",
    "ਸੱਠ", "ਇਕਾਹਠ", "ਬਾਹਠ", "ਤਰੇਹਠ", "ਚੌਂਹਠ", "ਪੈਂਹਠ", "ਛਿਆਹਠ", "ਸਤਾਹਠ", "ਅਠਾਹਠ", "ਉਨੱਤਰ",
    "ਸੱਤਰ", "ਇਕਹੱਤਰ", "ਬਹੱਤਰ", "ਤਿਹੱਤਰ", "ਚੌਹੱਤਰ", "ਪਚੱਤਰ", "ਛਿਹੱਤਰ", "ਸਤੱਤਰ", "ਅਠੱਤਰ", "ਉਨਾਸੀ",
    "ਅੱਸੀ", "ਇਕਾਸੀ", "ਬਿਆਸੀ", "ਤਿਰਾਸੀ", "ਚੁਰਾਸੀ", "ਪਚਾਸੀ", "ਛਿਆਸੀ", "ਸਤਾਸੀ", "ਅਠਾਸੀ", "ਉਨਾਨਵੇਂ",
    "ਨੱਬੇ", "ਇਕਾਨਵੇਂ", "ਬਾਨਵੇਂ", "ਤਿਰਾਨਵੇਂ", "ਚੁਰਾਨਵੇਂ", "ਪਚਾਨਵੇਂ", "ਛਿਆਨਵੇਂ", "ਸਤਾਨਵੇਂ", "ਅਠਾਨਵੇਂ", "ਨੜਿਨਵੇਂ"};

inline constexpr std::string_view kPunjabiHundred = "ਸੌ";
inline constexpr std::string_view kPunjabiThousand = "ਹਜ਼ਾਰ";
inline constexpr std::string_view kPunjabiLakh = "ਲੱਖ";

}  // namespace detail

// English cardinal words, e.g. 1205 -> {one, thousand, two, hundred, five}.
inline std::vector<std::string> english_cardinal(std::uint32_t n) {
  if (n > kMaxCardinal) throw NormalizationError(std::to_string(n));
  std::vector<std::string> out;
  if (n == 0) {
    out.emplace_back(detail::kEnglishSmall[0]);
    return out;
  }
  if (n >= 1000) {
    detail::english_below_thousand(n / 1000, out);
    out.emplace_back("thousand");
  }
  detail::english_below_thousand(n % 1000, out);
  return out;
}

// Punjabi cardinal words in the lakh/thousand/hundred grouping.
inline std::vector<std::string> punjabi_cardinal(std::uint32_t n) {
  if (n > kMaxCardinal) throw NormalizationError(std::to_string(n));
  std::vector<std::string> out;
  if (n == 0) {
    out.emplace_back(detail::kPunjabiBelowHundred[0]);
    return out;
  }
  const auto group = [&](std::uint32_t count, std::string_view unit) {
    if (count == 0) return;
    out.emplace_back(detail::kPunjabiBelowHundred[count]);
    out.emplace_back(unit);
  };
  group(n / 100000, detail::kPunjabiLakh);
  group((n / 1000) % 100, detail::kPunjabiThousand);
  group((n / 100) % 10, detail::kPunjabiHundred);
  if (n % 100) out.emplace_back(detail::kPunjabiBelowHundred[n % 100]);
  return out;
}

// Value of an all-digit surface (ASCII or Gurmukhi digits); throws
// NormalizationError when it exceeds kMaxCardinal.
inline std::uint32_t parse_cardinal(std::string_view surface) {
  std::uint32_t value = 0;
  for (char32_t cp : utf8::decode(surface)) {
    if (!utf8::is_digit(cp)) throw NormalizationError(std::string(surface));
    value = value * 10 + static_cast<std::uint32_t>(utf8::digit_value(cp));
    if (value > kMaxCardinal) throw NormalizationError(std::string(surface));
  }
  return value;
}

// Expands NUMBER tokens into cardinal WORD tokens of the target language.
// Other tokens pass through. Idempotent.
inline std::vector<Token> normalize(const std::vector<Token>& tokens, Script target) {
  if (target != Script::Latin && target != Script::Gurmukhi) {
    throw ValidationError("normalization target must be LATIN or GURMUKHI");
  }
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::Number) {
      out.push_back(t);
      continue;
    }
    const std::uint32_t value = parse_cardinal(t.surface);
    const auto words = target == Script::Latin ? english_cardinal(value) : punjabi_cardinal(value);
    for (std::size_t k = 0; k < words.size(); ++k) {
      Token w;
      w.surface = words[k];
      w.kind = TokenKind::Word;
      w.script = target;
      w.space_before = k == 0 ? t.space_before : true;
      out.push_back(std::move(w));
    }
  }
  detail::reindex(out);
  return out;
}

}  // namespace pbtts
