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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "pbtts/prosody.hpp"
#include "pbtts/voice.hpp"

// Source-filter formant synthesis: an impulse train shaped into glottal
// flow pulses (or white noise for frication) driving three cascaded
// second-order resonators at the event's formant frequencies.

namespace pbtts {

struct AudioBuffer {
  std::vector<float> samples;  // each in [-1, 1]
  int sample_rate = kSampleRate;

  double seconds() const { return static_cast<double>(samples.size()) / sample_rate; }
  bool operator==(const AudioBuffer&) const = default;
};

namespace synth_detail {

// Two-pole resonator with unity gain at DC:
//   y[n] = a x[n] + b y[n-1] + c y[n-2]
class Resonator {
 public:
  void tune(double freq, double bandwidth, double rate) {
    const double r = std::exp(-std::numbers::pi * bandwidth / rate);
    c_ = -r * r;
    b_ = 2.0 * r * std::cos(2.0 * std::numbers::pi * freq / rate);
    a_ = 1.0 - b_ - c_;
  }

  double gain() const { return a_; }

  double operator()(double x) {
    const double y = a_ * x + b_ * y1_ + c_ * y2_;
    y2_ = y1_;
    y1_ = y;
    return y;
  }

 private:
  double a_ = 1, b_ = 0, c_ = 0;
  double y1_ = 0, y2_ = 0;
};

// Uniform white noise in [-1, 1) from a fixed-seed engine, so renders are
// reproducible bit for bit.
class NoiseSource {
 public:
  explicit NoiseSource(std::uint32_t seed) : engine_(seed) {}
  double operator()() { return static_cast<double>(engine_()) * (2.0 / 4294967296.0) - 1.0; }

 private:
  std::mt19937 engine_;
};

inline Formants lerp(const Formants& a, const Formants& b, double t) {
  return {a.f1 + (b.f1 - a.f1) * t, a.f2 + (b.f2 - a.f2) * t, a.f3 + (b.f3 - a.f3) * t};
}

inline bool sounding(const PhonemeEvent& e) {
  return e.excitation != Excitation::Silent && e.formants.has_value();
}

inline constexpr double kNoiseGain = 0.25;
inline constexpr double kStopClosure = 0.55;  // fraction of a stop spent in closure
inline constexpr int kRetuneInterval = 16;     // samples between coefficient updates

}  // namespace synth_detail

// Sample index at which each event starts; the last element is the total
// length. Rounds cumulative time, so the total never drifts.
inline std::vector<std::size_t> event_boundaries(std::span<const PhonemeEvent> events,
                                                 int sample_rate = kSampleRate) {
  std::vector<std::size_t> bounds{0};
  double elapsed_ms = 0;
  for (const auto& e : events) {
    elapsed_ms += e.duration_ms;
    bounds.push_back(static_cast<std::size_t>(std::llround(elapsed_ms * sample_rate / 1000.0)));
  }
  return bounds;
}

inline AudioBuffer synthesize(std::span<const PhonemeEvent> events, const VoiceConfig& cfg = {}) {
  using namespace synth_detail;
  const double rate = kSampleRate;
  const auto bounds = event_boundaries(events);
  std::vector<double> out(bounds.back(), 0.0);

  Resonator glottis;
  glottis.tune(0.0, 100.0, rate);
  const double glottal_norm = 1.0 / glottis.gain();
  Resonator f1, f2, f3;
  NoiseSource noise(cfg.noise_seed);
  double phase = 1.0;  // first pulse fires on the first voiced sample
  double prev_flow = 0.0;
  double prev_white = 0.0;
  std::optional<Formants> last;

  for (std::size_t i = 0; i < events.size(); ++i) {
    const PhonemeEvent& e = events[i];
    const std::size_t begin = bounds[i], end = bounds[i + 1];
    const std::size_t len = end - begin;
    if (len == 0 || !sounding(e)) continue;

    const Formants target = *e.formants;
    const Formants from = last.value_or(target);
    const double transition =
        std::min(cfg.transition_ms * rate / 1000.0, static_cast<double>(len) / 3.0);
    const bool stop = e.excitation == Excitation::Stop || e.excitation == Excitation::VoicedStop;
    const std::size_t closure = stop ? static_cast<std::size_t>(kStopClosure * len) : 0;

    for (std::size_t k = 0; k < len; ++k) {
      if (k % kRetuneInterval == 0) {
        const Formants f =
            k < transition ? lerp(from, target, static_cast<double>(k) / transition) : target;
        f1.tune(f.f1, cfg.bandwidth1, rate);
        f2.tune(f.f2, cfg.bandwidth2, rate);
        f3.tune(f.f3, cfg.bandwidth3, rate);
      }
      const double frac = static_cast<double>(k) / static_cast<double>(len);
      const double pitch = e.pitch_start + (e.pitch_end - e.pitch_start) * frac;

      phase += pitch / rate;
      double pulse = 0.0;
      if (phase >= 1.0) {
        phase -= 1.0;
        pulse = 1.0;
      }
      const double flow = glottis(pulse) * glottal_norm;
      const double voiced = flow - prev_flow;  // lip radiation
      prev_flow = flow;

      const double white = noise();
      const double hiss = kNoiseGain * (white - 0.5 * prev_white);
      prev_white = white;

      double burst = 0.0;
      if (stop && k >= closure) {
        const double t = static_cast<double>(k - closure) / static_cast<double>(len - closure);
        burst = hiss * (1.0 - t);
      }

      double source = 0.0;
      switch (e.excitation) {
        case Excitation::Voiced: source = voiced; break;
        case Excitation::Noise: source = hiss; break;
        case Excitation::Mixed: source = 0.7 * voiced + 0.6 * hiss; break;
        case Excitation::Stop: source = burst; break;
        case Excitation::VoicedStop: source = k < closure ? 0.3 * voiced : voiced + burst; break;
        case Excitation::Silent: break;
      }
      out[begin + k] = f3(f2(f1(source)));
    }
    last = target;

    // Fade in after and out before silence so gated edges do not click.
    const auto ramp = std::min<std::size_t>(
        static_cast<std::size_t>(cfg.edge_ramp_ms * rate / 1000.0), len / 2);
    const bool open_before = i == 0 || !sounding(events[i - 1]);
    const bool open_after = i + 1 == events.size() || !sounding(events[i + 1]);
    for (std::size_t k = 0; k < ramp; ++k) {
      const double g = static_cast<double>(k) / static_cast<double>(ramp);
      if (open_before) out[begin + k] *= g;
      if (open_after) out[end - 1 - k] *= g;
    }
  }

  double peak = 0.0;
  for (double x : out) peak = std::max(peak, std::abs(x));
  const double scale = peak > 0.0 ? cfg.peak_level / peak : 0.0;

  AudioBuffer buffer;
  buffer.samples.reserve(out.size());
  for (double x : out) {
    buffer.samples.push_back(static_cast<float>(std::clamp(x * scale, -1.0, 1.0)));
  }
  return buffer;
}

}  // namespace pbtts
