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

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pbtts/error.hpp"
#include "pbtts/lexicon.hpp"

// Phoneme inventory and voice parameters, loaded from voice.tsv.

namespace pbtts {

inline constexpr int kSampleRate = 22050;

enum class PhonemeKind { Vowel, Consonant, Silence };

// Sound source driving the formant filter.
enum class Excitation {
  Voiced,      // glottal pulses
  Noise,       // frication
  Mixed,       // pulses plus frication
  Stop,        // closure, then a noise burst
  VoicedStop,  // voiced closure, then burst over voicing
  Silent,
};

inline std::string_view to_string(PhonemeKind k) {
  switch (k) {
    case PhonemeKind::Vowel: return "VOWEL";
    case PhonemeKind::Consonant: return "CONSONANT";
    case PhonemeKind::Silence: return "SILENCE";
  }
  return "?";
}

inline std::string_view to_string(Excitation e) {
  switch (e) {
    case Excitation::Voiced: return "voiced";
    case Excitation::Noise: return "noise";
    case Excitation::Mixed: return "mixed";
    case Excitation::Stop: return "stop";
    case Excitation::VoicedStop: return "vstop";
    case Excitation::Silent: return "silent";
  }
  return "?";
}

struct Phoneme {
  std::string symbol;
  PhonemeKind kind = PhonemeKind::Silence;

  bool operator==(const Phoneme&) const = default;
};

struct Formants {
  double f1 = 0, f2 = 0, f3 = 0;

  bool ordered() const { return 0 < f1 && f1 < f2 && f2 < f3; }
  bool operator==(const Formants&) const = default;
};

struct PhonemeSpec {
  Phoneme phoneme;
  std::optional<Formants> formants;
  std::optional<double> duration_ms;  // falls back to the class default
  Excitation excitation = Excitation::Silent;
};

// Voice-wide settings. Defaults are the shipped voice; voice.tsv may
// override any of them with `@name<TAB>value` lines.
struct VoiceConfig {
  double vowel_ms = 140;
  double consonant_ms = 80;
  double silence_ms = 100;

  double declarative_start_hz = 140;
  double declarative_end_hz = 100;
  double question_peak_hz = 180;
  double question_rise_fraction = 0.4;

  double bandwidth1 = 60;
  double bandwidth2 = 90;
  double bandwidth3 = 150;

  double peak_level = 0.9;
  double transition_ms = 30;
  double edge_ramp_ms = 5;
  std::uint32_t noise_seed = 0x5eed;
};

inline constexpr double kMinDurationMs = 20;
inline constexpr double kMaxDurationMs = 600;
inline constexpr double kMinPitchHz = 60;
inline constexpr double kMaxPitchHz = 400;

class Voice {
 public:
  static constexpr std::string_view kHeader = "#punjabi-voice v1";

  const VoiceConfig& config() const { return config_; }

  const PhonemeSpec* find(std::string_view symbol) const {
    const auto it = inventory_.find(symbol);
    return it == inventory_.end() ? nullptr : &it->second;
  }

  const PhonemeSpec& at(std::string_view symbol) const {
    const PhonemeSpec* spec = find(symbol);
    if (!spec) throw ValidationError("phoneme '" + std::string(symbol) + "' not in inventory");
    return *spec;
  }

  double base_duration_ms(std::string_view symbol) const {
    const PhonemeSpec& spec = at(symbol);
    if (spec.duration_ms) return *spec.duration_ms;
    switch (spec.phoneme.kind) {
      case PhonemeKind::Vowel: return config_.vowel_ms;
      case PhonemeKind::Consonant: return config_.consonant_ms;
      case PhonemeKind::Silence: return config_.silence_ms;
    }
    return config_.silence_ms;
  }

  const std::map<std::string, PhonemeSpec, std::less<>>& inventory() const { return inventory_; }

 private:
  friend Voice load_voice(std::istream& in);
  VoiceConfig config_;
  std::map<std::string, PhonemeSpec, std::less<>> inventory_;
};

namespace detail {

inline std::optional<double> parse_number(std::string_view s) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline void set_voice_param(VoiceConfig& c, std::string_view name, double v) {
  const auto in = [&](double lo, double hi) {
    if (!(v >= lo && v <= hi)) {
      throw ValidationError("@" + std::string(name) + " out of range");
    }
  };
  const auto duration = [&](double& field) { in(kMinDurationMs, kMaxDurationMs), field = v; };
  const auto pitch = [&](double& field) { in(kMinPitchHz, kMaxPitchHz), field = v; };
  const auto bandwidth = [&](double& field) { in(10, 1000), field = v; };

  if (name == "vowel_ms") duration(c.vowel_ms);
  else if (name == "consonant_ms") duration(c.consonant_ms);
  else if (name == "silence_ms") duration(c.silence_ms);
  else if (name == "declarative_start_hz") pitch(c.declarative_start_hz);
  else if (name == "declarative_end_hz") pitch(c.declarative_end_hz);
  else if (name == "question_peak_hz") pitch(c.question_peak_hz);
  else if (name == "question_rise_fraction") in(0.01, 1), c.question_rise_fraction = v;
  else if (name == "bandwidth1") bandwidth(c.bandwidth1);
  else if (name == "bandwidth2") bandwidth(c.bandwidth2);
  else if (name == "bandwidth3") bandwidth(c.bandwidth3);
  else if (name == "peak_level") in(0.01, 1), c.peak_level = v;
  else if (name == "transition_ms") in(0, 200), c.transition_ms = v;
  else if (name == "edge_ramp_ms") in(0, 50), c.edge_ramp_ms = v;
  else if (name == "noise_seed") in(0, 4294967295.0), c.noise_seed = static_cast<std::uint32_t>(v);
  else throw ValidationError("unknown voice parameter @" + std::string(name));
}

inline std::optional<Excitation> parse_excitation(std::string_view s) {
  for (Excitation e : {Excitation::Voiced, Excitation::Noise, Excitation::Mixed, Excitation::Stop,
                       Excitation::VoicedStop, Excitation::Silent}) {
    if (to_string(e) == s) return e;
  }
  return std::nullopt;
}

}  // namespace detail

// Rows: symbol, kind, F1, F2, F3, duration_ms, excitation. `-` leaves a
// numeric column unset.
inline Voice load_voice(std::istream& in) {
  Voice voice;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen) {
      if (line != Voice::kHeader) throw LoadError("missing '#punjabi-voice v1' header", line_no);
      header_seen = true;
      continue;
    }
    if (detail::is_blank(line) || line.front() == '#') continue;
    const auto fields = detail::split_tabs(line);
    try {
      // "@" is also the schwa symbol; parameters are the 2-field lines.
      if (line.front() == '@' && fields.size() == 2) {
        const auto value = detail::parse_number(fields[1]);
        if (!value) throw ValidationError("bad value for " + std::string(fields[0]));
        detail::set_voice_param(voice.config_, fields[0].substr(1), *value);
        continue;
      }
      if (fields.size() != 7) {
        throw ValidationError("expected 7 tab-separated fields, found " +
                              std::to_string(fields.size()));
      }
      PhonemeSpec spec;
      spec.phoneme.symbol = std::string(fields[0]);
      if (spec.phoneme.symbol.empty()) throw ValidationError("empty phoneme symbol");
      if (fields[1] == "VOWEL") spec.phoneme.kind = PhonemeKind::Vowel;
      else if (fields[1] == "CONSONANT") spec.phoneme.kind = PhonemeKind::Consonant;
      else if (fields[1] == "SILENCE") spec.phoneme.kind = PhonemeKind::Silence;
      else throw ValidationError("unknown phoneme kind '" + std::string(fields[1]) + "'");

      const auto column = [&](std::size_t i) -> std::optional<double> {
        if (fields[i] == "-") return std::nullopt;
        const auto v = detail::parse_number(fields[i]);
        if (!v) throw ValidationError("bad number '" + std::string(fields[i]) + "'");
        return v;
      };
      const auto f1 = column(2), f2 = column(3), f3 = column(4);
      if (f1 || f2 || f3) {
        if (!(f1 && f2 && f3)) throw ValidationError("formants must be given together");
        spec.formants = Formants{*f1, *f2, *f3};
        if (!spec.formants->ordered() || *f3 >= kSampleRate / 2.0) {
          throw ValidationError("formants must satisfy 0 < F1 < F2 < F3 < Nyquist");
        }
      }
      spec.duration_ms = column(5);
      if (spec.duration_ms &&
          !(*spec.duration_ms >= kMinDurationMs && *spec.duration_ms <= kMaxDurationMs)) {
        throw ValidationError("duration out of [20, 600] ms");
      }
      const auto excitation = detail::parse_excitation(fields[6]);
      if (!excitation) throw ValidationError("unknown excitation '" + std::string(fields[6]) + "'");
      spec.excitation = *excitation;

      const bool silent = spec.phoneme.kind == PhonemeKind::Silence;
      if (silent != (spec.excitation == Excitation::Silent)) {
        throw ValidationError("SILENCE rows and only they use excitation 'silent'");
      }
      if (!silent && !spec.formants) throw ValidationError("sounding phoneme without formants");
      if (voice.inventory_.contains(spec.phoneme.symbol)) {
        throw ValidationError("duplicate phoneme '" + spec.phoneme.symbol + "'");
      }
      voice.inventory_.emplace(spec.phoneme.symbol, std::move(spec));
    } catch (const ValidationError& e) {
      throw LoadError(e.what(), line_no);
    }
  }
  if (!header_seen) throw LoadError("empty voice file", 0);
  return voice;
}

inline Voice load_voice(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_voice(in);
}

inline Voice load_voice_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open voice file '" + path + "'", 0);
  return load_voice(in);
}

}  // namespace pbtts
