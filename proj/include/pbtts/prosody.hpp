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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pbtts/voice.hpp"

namespace pbtts {

struct PhonemeEvent {
  Phoneme phoneme;
  double duration_ms = 0;
  double pitch_start = 0;  // Hz
  double pitch_end = 0;    // Hz
  std::optional<Formants> formants;  // targets for vowels, loci for consonants
  Excitation excitation = Excitation::Silent;

  double pitch_mid() const { return 0.5 * (pitch_start + pitch_end); }
  bool operator==(const PhonemeEvent&) const = default;
};

// Sentence pitch contour. Declaratives fall linearly from the start to the
// end pitch; a question follows the same line until the final rise
// fraction of the utterance, then climbs linearly to the question peak.
class PitchContour {
 public:
  PitchContour(const VoiceConfig& cfg, double total_ms, bool question)
      : cfg_(cfg), total_ms_(total_ms), question_(question) {}

  double knee_ms() const { return (1.0 - cfg_.question_rise_fraction) * total_ms_; }

  double at(double t_ms) const {
    if (total_ms_ <= 0) return cfg_.declarative_start_hz;
    if (question_ && t_ms > knee_ms()) {
      const double base = declarative(knee_ms());
      const double span = total_ms_ - knee_ms();
      return base + (cfg_.question_peak_hz - base) * (t_ms - knee_ms()) / span;
    }
    return declarative(t_ms);
  }

 private:
  double declarative(double t_ms) const {
    return cfg_.declarative_start_hz +
           (cfg_.declarative_end_hz - cfg_.declarative_start_hz) * t_ms / total_ms_;
  }

  VoiceConfig cfg_;
  double total_ms_;
  bool question_;
};

// Durations from the inventory, pitch from the sentence contour. A final
// "?" selects the question contour; anything else is declarative.
inline std::vector<PhonemeEvent> assign_prosody(std::span<const Phoneme> phonemes,
                                                std::optional<std::string_view> final_punct,
                                                const Voice& voice) {
  std::vector<PhonemeEvent> events;
  events.reserve(phonemes.size());
  double total = 0;
  for (const Phoneme& p : phonemes) {
    const PhonemeSpec& spec = voice.at(p.symbol);
    PhonemeEvent e;
    e.phoneme = p;
    e.duration_ms = voice.base_duration_ms(p.symbol);
    e.formants = spec.formants;
    e.excitation = spec.excitation;
    total += e.duration_ms;
    events.push_back(std::move(e));
  }
  const PitchContour contour(voice.config(), total, final_punct == "?");
  double t = 0;
  for (PhonemeEvent& e : events) {
    e.pitch_start = contour.at(t);
    t += e.duration_ms;
    e.pitch_end = contour.at(t);
  }
  return events;
}

inline double total_duration_ms(std::span<const PhonemeEvent> events) {
  double total = 0;
  for (const auto& e : events) total += e.duration_ms;
  return total;
}

}  // namespace pbtts
