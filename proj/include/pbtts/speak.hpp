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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbtts/error.hpp"
#include "pbtts/g2p.hpp"
#include "pbtts/prosody.hpp"
#include "pbtts/synth.hpp"
#include "pbtts/text.hpp"
#include "pbtts/voice.hpp"
#include "pbtts/wav.hpp"

namespace pbtts {

enum class Language { English, Punjabi, Auto };

inline std::optional<Language> parse_language(std::string_view s) {
  if (s == "en") return Language::English;
  if (s == "pa") return Language::Punjabi;
  if (s == "auto") return Language::Auto;
  return std::nullopt;
}

// Script the text will be read in. NEUTRAL text (numbers, punctuation)
// is read as English unless Punjabi was asked for.
inline Script reading_script(std::string_view text, Language language) {
  const Script script = detect_script(text);
  switch (language) {
    case Language::Auto:
      if (script == Script::Mixed) throw UnsupportedInput("text mixes scripts");
      return script == Script::Neutral ? Script::Latin : script;
    case Language::English:
      if (script != Script::Latin && script != Script::Neutral) {
        throw LanguageMismatch("language 'en' needs Latin-script text");
      }
      return Script::Latin;
    case Language::Punjabi:
      if (script != Script::Gurmukhi && script != Script::Neutral) {
        throw LanguageMismatch("language 'pa' needs Gurmukhi text");
      }
      return Script::Gurmukhi;
  }
  return Script::Latin;
}

// Every intermediate of one utterance, for inspection and tests.
struct Utterance {
  Script script = Script::Latin;
  std::vector<Token> tokens;
  std::vector<Phoneme> phonemes;
  std::vector<PhonemeEvent> events;
  AudioBuffer audio;
};

inline Utterance render(std::string_view text, const Voice& voice,
                        Language language = Language::Auto) {
  Utterance u;
  u.script = reading_script(text, language);
  u.tokens = normalize(tokenize(text), u.script);
  u.phonemes = grapheme_to_phoneme(u.tokens, u.script);
  std::optional<std::string_view> final_punct;
  if (!u.tokens.empty() && u.tokens.back().kind == TokenKind::Punct) {
    final_punct = u.tokens.back().surface;
  }
  u.events = assign_prosody(u.phonemes, final_punct, voice);
  u.audio = synthesize(u.events, voice.config());
  return u;
}

// Text in either language to a WAV byte stream. Deterministic for a fixed
// voice.
inline std::vector<std::uint8_t> speak(std::string_view text, const Voice& voice,
                                       Language language = Language::Auto) {
  return encode_wav(render(text, voice, language).audio);
}

}  // namespace pbtts
