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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pbtts/error.hpp"
#include "pbtts/text.hpp"
#include "pbtts/utf8.hpp"
#include "pbtts/voice.hpp"

// Grapheme-to-phoneme conversion for Gurmukhi (orthographic rules) and
// English (rough letter-to-sound rules, no pronouncing dictionary).
//
// Phoneme symbols are X-SAMPA flavoured: `@` schwa, `a` long a, backtick
// for retroflex (`t``), trailing `h` for aspiration (`kh`), trailing `~`
// for nasalized vowels, `_` for silence.

namespace pbtts {

inline constexpr std::string_view kSilenceSymbol = "_";

namespace g2p_detail {

inline constexpr std::array<std::string_view, 10> kOralVowels = {"@", "a", "I", "i", "U",
                                                                 "u", "e", "E", "o", "O"};

inline bool is_vowel_symbol(std::string_view s) {
  if (s.ends_with('~')) s.remove_suffix(1);
  for (auto v : kOralVowels) {
    if (v == s) return true;
  }
  return false;
}

inline Phoneme make(std::string_view symbol) {
  PhonemeKind kind = PhonemeKind::Consonant;
  if (symbol == kSilenceSymbol) kind = PhonemeKind::Silence;
  else if (is_vowel_symbol(symbol)) kind = PhonemeKind::Vowel;
  return Phoneme{std::string(symbol), kind};
}

inline Phoneme nasalized(const Phoneme& p) {
  if (p.kind != PhonemeKind::Vowel || p.symbol.ends_with('~')) return p;
  return Phoneme{p.symbol + "~", PhonemeKind::Vowel};
}

// Gurmukhi consonant letters, U+0A15.. plus the precomposed nukta forms.
inline std::optional<std::string_view> gurmukhi_consonant(char32_t cp) {
  switch (cp) {
    case 0x0A15: return "k";     case 0x0A16: return "kh";   case 0x0A17: return "g";
    case 0x0A18: return "gh";    case 0x0A19: return "N";    case 0x0A1A: return "tS";
    case 0x0A1B: return "tSh";   case 0x0A1C: return "dZ";   case 0x0A1D: return "dZh";
    case 0x0A1E: return "J";     case 0x0A1F: return "t`";   case 0x0A20: return "t`h";
    case 0x0A21: return "d`";    case 0x0A22: return "d`h";  case 0x0A23: return "n`";
    case 0x0A24: return "t";     case 0x0A25: return "th";   case 0x0A26: return "d";
    case 0x0A27: return "dh";    case 0x0A28: return "n";    case 0x0A2A: return "p";
    case 0x0A2B: return "ph";    case 0x0A2C: return "b";    case 0x0A2D: return "bh";
    case 0x0A2E: return "m";     case 0x0A2F: return "j";    case 0x0A30: return "r";
    case 0x0A32: return "l";     case 0x0A33: return "l`";   case 0x0A35: return "v";
    case 0x0A36: return "S";     case 0x0A38: return "s";    case 0x0A39: return "h";
    case 0x0A59: return "x";     case 0x0A5A: return "G";    case 0x0A5B: return "z";
    case 0x0A5C: return "r`";    case 0x0A5E: return "f";
    default: return std::nullopt;
  }
}

// Consonant + nukta (U+0A3C) in decomposed spelling.
inline std::string_view with_nukta(std::string_view base) {
  if (base == "s") return "S";
  if (base == "kh") return "x";
  if (base == "g") return "G";
  if (base == "dZ") return "z";
  if (base == "ph") return "f";
  if (base == "l") return "l`";
  return base;
}

inline std::optional<std::string_view> gurmukhi_independent_vowel(char32_t cp) {
  switch (cp) {
    case 0x0A05: return "@";  case 0x0A06: return "a";  case 0x0A07: return "I";
    case 0x0A08: return "i";  case 0x0A09: return "U";  case 0x0A0A: return "u";
    case 0x0A0F: return "e";  case 0x0A10: return "E";  case 0x0A13: return "o";
    case 0x0A14: return "O";
    default: return std::nullopt;
  }
}

inline std::optional<std::string_view> gurmukhi_vowel_sign(char32_t cp) {
  switch (cp) {
    case 0x0A3E: return "a";  case 0x0A3F: return "I";  case 0x0A40: return "i";
    case 0x0A41: return "U";  case 0x0A42: return "u";  case 0x0A47: return "e";
    case 0x0A48: return "E";  case 0x0A4B: return "o";  case 0x0A4C: return "O";
    default: return std::nullopt;
  }
}

inline constexpr char32_t kAdakBindi = 0x0A01;
inline constexpr char32_t kBindi = 0x0A02;
inline constexpr char32_t kVisarga = 0x0A03;
inline constexpr char32_t kNukta = 0x0A3C;
inline constexpr char32_t kHalant = 0x0A4D;
inline constexpr char32_t kTippi = 0x0A70;
inline constexpr char32_t kAddak = 0x0A71;
inline constexpr char32_t kIri = 0x0A72;
inline constexpr char32_t kUra = 0x0A73;
inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;

inline bool is_nasal_sign(char32_t cp) { return cp == kBindi || cp == kTippi || cp == kAdakBindi; }

inline bool is_punct_codepoint(char32_t cp) { return is_detachable_punct(cp); }

// One Gurmukhi word. A consonant keeps its inherent schwa unless a vowel
// sign or halant follows; word-finally the schwa is dropped when the word
// already has a vowel. Bindi/tippi nasalize the vowel they follow. Addak
// (gemination) is ignored.
inline void gurmukhi_word(std::u32string_view cps, std::vector<Phoneme>& out) {
  const std::size_t word_start = out.size();
  bool pending_schwa = false;
  const auto flush = [&] {
    if (pending_schwa) out.push_back(make("@"));
    pending_schwa = false;
  };
  const auto has_vowel = [&] {
    for (std::size_t k = word_start; k < out.size(); ++k) {
      if (out[k].kind == PhonemeKind::Vowel) return true;
    }
    return false;
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (auto cons = gurmukhi_consonant(cp)) {
      flush();
      std::string_view symbol = *cons;
      if (i + 1 < cps.size() && cps[i + 1] == kNukta) {
        symbol = with_nukta(symbol);
        ++i;
      }
      out.push_back(make(symbol));
      pending_schwa = true;
    } else if (auto sign = gurmukhi_vowel_sign(cp)) {
      pending_schwa = false;
      out.push_back(make(*sign));
    } else if (auto vowel = gurmukhi_independent_vowel(cp)) {
      flush();
      out.push_back(make(*vowel));
    } else if (cp == kIri || cp == kUra) {
      flush();
      if (i + 1 < cps.size() && gurmukhi_vowel_sign(cps[i + 1])) {
        out.push_back(make(*gurmukhi_vowel_sign(cps[++i])));
      } else {
        out.push_back(make(cp == kIri ? "I" : "U"));
      }
    } else if (cp == kHalant) {
      pending_schwa = false;
    } else if (is_nasal_sign(cp)) {
      if (pending_schwa) {
        out.push_back(make("@~"));
        pending_schwa = false;
      } else if (out.size() > word_start && out.back().kind == PhonemeKind::Vowel) {
        out.back() = nasalized(out.back());
      } else {
        out.push_back(make("n"));
      }
    } else if (cp == kVisarga) {
      flush();
      out.push_back(make("h"));
    } else if (cp == kAddak || cp == kNukta || cp == kZwj || cp == kZwnj) {
      // no sound of its own
    } else {
      throw G2PError(cp);
    }
  }
  if (pending_schwa && !has_vowel()) out.push_back(make("@"));
}

// ---------------------------------------------------------------------------
// English letter-to-sound
// ---------------------------------------------------------------------------

inline const std::unordered_map<std::string_view, std::vector<std::string_view>>& english_exceptions() {
  static const std::unordered_map<std::string_view, std::vector<std::string_view>> table = {
      {"a", {"@"}},           {"the", {"D", "@"}},     {"of", {"@", "v"}},
      {"to", {"t", "u"}},     {"do", {"d", "u"}},      {"who", {"h", "u"}},
      {"you", {"j", "u"}},    {"your", {"j", "O", "r"}}, {"i", {"a", "I"}},
      {"is", {"I", "z"}},     {"was", {"w", "O", "z"}}, {"are", {"a", "r"}},
      {"what", {"w", "O", "t"}}, {"one", {"w", "@", "n"}}, {"two", {"t", "u"}},
      {"said", {"s", "E", "d"}}, {"have", {"h", "E", "v"}}, {"there", {"D", "E", "r"}},
      {"where", {"w", "E", "r"}}, {"they", {"D", "e"}},  {"he", {"h", "i"}},
      {"she", {"S", "i"}},    {"we", {"w", "i"}},      {"me", {"m", "i"}},
      {"be", {"b", "i"}},     {"no", {"n", "o"}},      {"go", {"g", "o"}},
      {"so", {"s", "o"}},     {"my", {"m", "a", "I"}}, {"by", {"b", "a", "I"}},
      {"does", {"d", "@", "z"}}, {"eight", {"e", "t"}}, {"four", {"f", "O", "r"}},
  };
  return table;
}

// Words whose initial "th" is voiced.
inline bool voiced_th(std::string_view word) {
  static const std::set<std::string_view> words = {"this", "that", "these", "those", "them",
                                                   "then", "than", "their", "though", "thus",
                                                   "with", "there", "they", "the"};
  return words.contains(word);
}

inline bool is_vowel_letter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

inline bool is_consonant_letter(char c) {
  return c >= 'a' && c <= 'z' && !is_vowel_letter(c) && c != 'y';
}

inline void english_word(std::string_view raw, std::vector<Phoneme>& out) {
  std::string word;
  for (std::size_t pos = 0; pos < raw.size();) {
    const char32_t cp = utf8::next(raw, pos);
    if (utf8::is_latin_letter(cp)) {
      word.push_back(static_cast<char>(cp | 0x20));
    } else if (cp == '\'' || cp == '-') {
      word.push_back(static_cast<char>(cp));
    } else {
      throw G2PError(cp);
    }
  }
  const std::size_t word_start = out.size();
  if (const auto& ex = english_exceptions(); ex.contains(word)) {
    for (auto s : ex.at(word)) out.push_back(make(s));
    return;
  }

  const std::size_t n = word.size();
  const auto at = [&](std::size_t i) { return i < n ? word[i] : '\0'; };
  const auto starts = [&](std::size_t i, std::string_view s) {
    return std::string_view(word).substr(i).starts_with(s);
  };
  const auto emit = [&](std::initializer_list<std::string_view> syms) {
    for (auto s : syms) out.push_back(make(s));
  };

  for (std::size_t i = 0; i < n;) {
    const char c = word[i];
    if (c == '\'' || c == '-') {
      ++i;
      continue;
    }
    // doubled consonants sound once
    if (i > 0 && c == word[i - 1] && is_consonant_letter(c)) {
      ++i;
      continue;
    }
    if (i == 0 && starts(0, "kn")) { emit({"n"}); i += 2; continue; }
    if (i == 0 && starts(0, "wr")) { emit({"r"}); i += 2; continue; }
    if (starts(i, "tch")) { emit({"tS"}); i += 3; continue; }
    if (starts(i, "ch")) { emit({"tS"}); i += 2; continue; }
    if (starts(i, "sh")) { emit({"S"}); i += 2; continue; }
    if (starts(i, "th")) { emit({i == 0 && voiced_th(word) ? "D" : "T"}); i += 2; continue; }
    if (starts(i, "ph")) { emit({"f"}); i += 2; continue; }
    if (starts(i, "wh")) { emit({"w"}); i += 2; continue; }
    if (starts(i, "gh")) { i += 2; continue; }
    if (starts(i, "ck")) { emit({"k"}); i += 2; continue; }
    if (starts(i, "ng")) { emit({"N"}); i += 2; continue; }
    if (starts(i, "qu")) { emit({"k", "w"}); i += 2; continue; }

    if (is_vowel_letter(c) || (c == 'y' && i > 0)) {
      if (starts(i, "igh")) { emit({"a", "I"}); i += 3; continue; }
      if (starts(i, "ee") || starts(i, "ea")) { emit({"i"}); i += 2; continue; }
      if (starts(i, "oo")) { emit({"u"}); i += 2; continue; }
      if (starts(i, "ou")) { emit({"a", "U"}); i += 2; continue; }
      if (starts(i, "ow")) { emit({"o"}); i += 2; continue; }
      if (starts(i, "ai") || starts(i, "ay") || starts(i, "ei") || starts(i, "ey")) {
        emit({"e"}); i += 2; continue;
      }
      if (starts(i, "oa")) { emit({"o"}); i += 2; continue; }
      if (starts(i, "oi") || starts(i, "oy")) { emit({"O", "I"}); i += 2; continue; }
      if (starts(i, "au") || starts(i, "aw")) { emit({"O"}); i += 2; continue; }
      if (starts(i, "ue")) { emit({"u"}); i += 2; continue; }
      if (starts(i, "ew")) { emit({"j", "u"}); i += 2; continue; }
      if (starts(i, "ie")) {
        if (i + 2 == n) emit({"a", "I"}); else emit({"i"});
        i += 2;
        continue;
      }
      if (i + 2 == n && (starts(i, "er") || starts(i, "ir") || starts(i, "ur"))) {
        emit({"@", "r"}); i += 2; continue;
      }
      if (starts(i, "ar") && !is_vowel_letter(at(i + 2))) { emit({"a", "r"}); i += 2; continue; }
      if (starts(i, "or") && !is_vowel_letter(at(i + 2))) { emit({"O", "r"}); i += 2; continue; }
      // final silent e
      if (c == 'e' && i + 1 == n && i > 0) {
        bool earlier = false;
        for (std::size_t k = 0; k < i; ++k) earlier = earlier || is_vowel_letter(word[k]);
        if (earlier) { ++i; continue; }
      }
      if (c == 'y') {
        const bool final = i + 1 == n;
        bool earlier = false;
        for (std::size_t k = 0; k < i; ++k) earlier = earlier || is_vowel_letter(word[k]);
        if (final && !earlier) emit({"a", "I"});
        else if (final) emit({"i"});
        else emit({"I"});
        ++i;
        continue;
      }
      // vowel + consonant + final e is long
      const bool magic = i + 3 == n && is_consonant_letter(at(i + 1)) && at(i + 2) == 'e';
      switch (c) {
        case 'a': magic ? emit({"e"}) : emit({"E"}); break;
        case 'e': magic ? emit({"i"}) : emit({"E"}); break;
        case 'i': magic ? emit({"a", "I"}) : emit({"I"}); break;
        case 'o': magic ? emit({"o"}) : emit({"O"}); break;
        case 'u': magic ? emit({"j", "u"}) : emit({"@"}); break;
        default: break;
      }
      ++i;
      continue;
    }

    switch (c) {
      case 'y': emit({"j"}); break;
      case 'c': emit({at(i + 1) == 'e' || at(i + 1) == 'i' || at(i + 1) == 'y' ? "s" : "k"}); break;
      case 'g': emit({at(i + 1) == 'e' && i + 2 == n ? "dZ" : "g"}); break;
      case 'j': emit({"dZ"}); break;
      case 'q': emit({"k"}); break;
      case 'x': emit({"k", "s"}); break;
      default: {
        const char sym[2] = {c, '\0'};
        emit({std::string_view(sym, 1)});
      }
    }
    ++i;
  }
  if (out.size() == word_start) out.push_back(make(kSilenceSymbol));
}

}  // namespace g2p_detail

// Phonemes for a tokenized sentence read in `script` (LATIN or GURMUKHI).
// A SILENCE separates adjacent words; each punctuation token becomes one
// SILENCE. Throws G2PError naming the first unsupported codepoint, which
// includes digits (normalize first) and letters of the other script.
inline std::vector<Phoneme> grapheme_to_phoneme(const std::vector<Token>& tokens, Script script) {
  if (script != Script::Latin && script != Script::Gurmukhi) {
    throw ValidationError("grapheme_to_phoneme needs LATIN or GURMUKHI");
  }
  std::vector<Phoneme> out;
  bool previous_word = false;
  for (const Token& t : tokens) {
    const std::u32string cps = utf8::decode(t.surface);
    if (t.kind == TokenKind::Punct) {
      for (char32_t cp : cps) {
        if (!g2p_detail::is_punct_codepoint(cp)) throw G2PError(cp);
      }
      out.push_back(g2p_detail::make(kSilenceSymbol));
      previous_word = false;
      continue;
    }
    for (char32_t cp : cps) {
      const bool ok = script == Script::Gurmukhi
                          ? utf8::in_gurmukhi_block(cp) || cp == g2p_detail::kZwj ||
                                cp == g2p_detail::kZwnj
                          : utf8::is_latin_letter(cp) || cp == '\'' || cp == '-';
      if (!ok || utf8::is_digit(cp)) throw G2PError(cp);
    }
    if (previous_word) out.push_back(g2p_detail::make(kSilenceSymbol));
    if (script == Script::Gurmukhi) {
      g2p_detail::gurmukhi_word(cps, out);
    } else {
      g2p_detail::english_word(t.surface, out);
    }
    previous_word = true;
  }
  return out;
}

// Every symbol the converter can emit. A voice must define all of them.
inline std::vector<std::string> g2p_symbols() {
  std::vector<std::string> out = {std::string(kSilenceSymbol)};
  for (auto v : g2p_detail::kOralVowels) {
    out.emplace_back(v);
    out.emplace_back(std::string(v) + "~");
  }
  for (auto s : {"k", "kh", "g", "gh", "N", "tS", "tSh", "dZ", "dZh", "J", "t`", "t`h", "d`",
                 "d`h", "n`", "t", "th", "d", "dh", "n", "p", "ph", "b", "bh", "m", "j", "r",
                 "l", "l`", "v", "S", "s", "h", "x", "G", "z", "r`", "f", "T", "D", "w"}) {
    out.emplace_back(s);
  }
  return out;
}

// Throws ValidationError when `voice` lacks a symbol or disagrees on its kind.
inline void check_inventory(const Voice& voice) {
  for (const std::string& symbol : g2p_symbols()) {
    const PhonemeSpec* spec = voice.find(symbol);
    if (!spec) throw ValidationError("voice lacks phoneme '" + symbol + "'");
    if (spec->phoneme.kind != g2p_detail::make(symbol).kind) {
      throw ValidationError("voice gives phoneme '" + symbol + "' the wrong kind");
    }
  }
}

}  // namespace pbtts
