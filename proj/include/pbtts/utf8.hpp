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
#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 codec and the codepoint classes the text pipeline needs.
// Invalid byte sequences decode to U+FFFD so every input has a decoding.

namespace pbtts::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes one codepoint starting at `pos` and advances it.
inline char32_t next(std::string_view s, std::size_t& pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(s[i]);
  };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4, cp = lead & 0x07, min = 0x10000;
  } else {
    ++pos;
    return kReplacement;
  }
  if (pos + len > s.size()) {
    ++pos;
    return kReplacement;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return kReplacement;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  pos += len;
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return kReplacement;
  }
  return cp;
}

inline std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) out.push_back(next(s, pos));
  return out;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

inline std::string encode(char32_t cp) {
  std::string out;
  append(out, cp);
  return out;
}

// ---------------------------------------------------------------------------
// Codepoint classes
// ---------------------------------------------------------------------------

inline constexpr char32_t kGurmukhiFirst = 0x0A00;
inline constexpr char32_t kGurmukhiLast = 0x0A7F;
inline constexpr char32_t kDanda = 0x0964;
inline constexpr char32_t kDoubleDanda = 0x0965;

inline constexpr bool in_gurmukhi_block(char32_t cp) {
  return cp >= kGurmukhiFirst && cp <= kGurmukhiLast;
}

inline constexpr bool is_space(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

inline constexpr bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }
inline constexpr bool is_gurmukhi_digit(char32_t cp) { return cp >= 0x0A66 && cp <= 0x0A6F; }
inline constexpr bool is_digit(char32_t cp) { return is_ascii_digit(cp) || is_gurmukhi_digit(cp); }

inline constexpr int digit_value(char32_t cp) {
  return is_ascii_digit(cp) ? static_cast<int>(cp - '0') : static_cast<int>(cp - 0x0A66);
}

inline constexpr bool is_latin_letter(char32_t cp) {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

inline constexpr bool is_gurmukhi_letter(char32_t cp) {
  return in_gurmukhi_block(cp) && !is_gurmukhi_digit(cp);
}

// Codepoints that are not letters of any script: controls, punctuation,
// symbols, whitespace and digits. Anything else outside Latin/Gurmukhi is
// counted as a letter of some other script. This is a coarse table, not a
// Unicode general-category lookup.
inline constexpr bool is_non_letter(char32_t cp) {
  if (cp < 0x80) return !is_latin_letter(cp);
  if (is_space(cp) || is_digit(cp)) return true;
  if (cp <= 0xBF) return true;  // C1 controls, Latin-1 punctuation and signs
  if (cp == 0xD7 || cp == 0xF7) return true;
  if (cp == kDanda || cp == kDoubleDanda) return true;
  if (cp >= 0x2000 && cp <= 0x2BFF) return true;  // punctuation, symbols, arrows
  if (cp >= 0x3000 && cp <= 0x303F) return true;
  if (cp >= 0xE000 && cp <= 0xF8FF) return true;
  if (cp >= 0xFE30 && cp <= 0xFE4F) return true;
  if (cp >= 0xFFF0 && cp <= 0xFFFF) return true;
  if (cp >= 0x1F000 && cp <= 0x1FAFF) return true;
  return false;
}

inline constexpr bool is_letter(char32_t cp) { return !is_non_letter(cp); }

inline std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace pbtts::utf8
