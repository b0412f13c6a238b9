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
#include <string>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pbtts/speak.hpp"

namespace pbtts {
namespace {

const Voice& voice() { return pbtts_test::shipped_engine()->voice; }

TEST(Speak, PunjabiQuestionRises) {
  const auto u = render("ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?", voice(), Language::Punjabi);
  EXPECT_EQ(u.script, Script::Gurmukhi);
  ASSERT_FALSE(u.events.empty());
  EXPECT_GT(u.events.back().pitch_end, u.events.front().pitch_start);
  EXPECT_FALSE(u.audio.samples.empty());
  const auto wav = speak("ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?", voice(), Language::Punjabi);
  EXPECT_GT(wav.size(), kWavHeaderSize);
  EXPECT_EQ(std::memcmp(wav.data(), "RIFF", 4), 0);
}

TEST(Speak, EnglishStatementFalls) {
  const auto u = render("Who did this.", voice(), Language::English);
  EXPECT_LT(u.events.back().pitch_end, u.events.front().pitch_start);
  EXPECT_GT(speak("Who did this?", voice()).size(), kWavHeaderSize);
}

TEST(Speak, EmptyIsHeaderOnly) {
  EXPECT_EQ(speak("", voice()).size(), kWavHeaderSize);
  EXPECT_EQ(speak("", voice(), Language::English).size(), kWavHeaderSize);
  EXPECT_EQ(speak("   ", voice(), Language::Punjabi).size(), kWavHeaderSize);
}

TEST(Speak, AutoDetectsScript) {
  EXPECT_EQ(render("hello", voice()).script, Script::Latin);
  EXPECT_EQ(render("ਇਹ", voice()).script, Script::Gurmukhi);
  EXPECT_EQ(render("42 ?", voice()).script, Script::Latin);
  EXPECT_THROW(render("hello ਇਹ", voice()), UnsupportedInput);
}

TEST(Speak, LanguageMismatch) {
  EXPECT_THROW(render("hello", voice(), Language::Punjabi), LanguageMismatch);
  EXPECT_THROW(render("ਇਹ", voice(), Language::English), LanguageMismatch);
  EXPECT_NO_THROW(render("42", voice(), Language::Punjabi));
}

TEST(Speak, NumbersReadInTheTextLanguage) {
  const auto en = render("2 cats", voice(), Language::English);
  EXPECT_EQ(en.tokens.front().surface, "two");
  const auto pa = render("੨ ਬਿੱਲੀਆਂ", voice(), Language::Punjabi);
  EXPECT_EQ(pa.tokens.front().surface, "ਦੋ");
  EXPECT_THROW(render("1000000", voice()), NormalizationError);
}

TEST(Speak, Deterministic) {
  EXPECT_EQ(speak("ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?", voice()), speak("ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?", voice()));
}

TEST(Speak, DurationMatchesEvents) {
  const auto u = render("Who did this?", voice());
  const double total_ms = total_duration_ms(u.events);
  EXPECT_LE(std::abs(u.audio.seconds() - total_ms / 1000.0), u.events.size() / 22050.0);
}

TEST(Speak, ParseLanguage) {
  EXPECT_EQ(parse_language("en"), Language::English);
  EXPECT_EQ(parse_language("pa"), Language::Punjabi);
  EXPECT_EQ(parse_language("auto"), Language::Auto);
  EXPECT_FALSE(parse_language("fr"));
}

}  // namespace
}  // namespace pbtts
