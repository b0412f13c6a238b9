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
#include <cstring>
#include <span>
#include <vector>

#include "pbtts/error.hpp"
#include "pbtts/synth.hpp"

// Canonical 44-byte-header RIFF/WAVE, PCM 16-bit little-endian mono.

namespace pbtts {

inline constexpr std::size_t kWavHeaderSize = 44;

namespace wav_detail {

inline void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

inline void put_tag(std::vector<std::uint8_t>& out, const char (&tag)[5]) {
  out.insert(out.end(), tag, tag + 4);
}

inline std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return std::uint32_t(b[at]) | std::uint32_t(b[at + 1]) << 8 | std::uint32_t(b[at + 2]) << 16 |
         std::uint32_t(b[at + 3]) << 24;
}

inline std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

inline bool tag_is(std::span<const std::uint8_t> b, std::size_t at, const char (&tag)[5]) {
  return std::memcmp(b.data() + at, tag, 4) == 0;
}

}  // namespace wav_detail

inline std::int16_t to_pcm16(float x) {
  const double v = std::round(static_cast<double>(std::clamp(x, -1.0f, 1.0f)) * 32767.0);
  return static_cast<std::int16_t>(v);
}

inline std::vector<std::uint8_t> encode_wav(const AudioBuffer& buffer) {
  using namespace wav_detail;
  const auto data_bytes = static_cast<std::uint32_t>(buffer.samples.size() * 2);
  const auto rate = static_cast<std::uint32_t>(buffer.sample_rate);
  std::vector<std::uint8_t> out;
  out.reserve(kWavHeaderSize + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, rate);
  put_u32(out, rate * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  put_tag(out, "data");
  put_u32(out, data_bytes);
  for (float x : buffer.samples) put_u16(out, static_cast<std::uint16_t>(to_pcm16(x)));
  return out;
}

// Reads back what encode_wav writes; rejects any other layout.
inline AudioBuffer decode_wav(std::span<const std::uint8_t> bytes) {
  using namespace wav_detail;
  if (bytes.size() < kWavHeaderSize || !tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE") ||
      !tag_is(bytes, 12, "fmt ") || !tag_is(bytes, 36, "data")) {
    throw Error("not a canonical WAV file");
  }
  if (get_u32(bytes, 16) != 16 || get_u16(bytes, 20) != 1 || get_u16(bytes, 22) != 1 ||
      get_u16(bytes, 32) != 2 || get_u16(bytes, 34) != 16) {
    throw Error("WAV is not 16-bit mono PCM");
  }
  const std::uint32_t data_bytes = get_u32(bytes, 40);
  if (data_bytes % 2 != 0 || bytes.size() != kWavHeaderSize + data_bytes ||
      get_u32(bytes, 4) != 36 + data_bytes) {
    throw Error("WAV chunk sizes are inconsistent");
  }
  AudioBuffer buffer;
  buffer.sample_rate = static_cast<int>(get_u32(bytes, 24));
  buffer.samples.reserve(data_bytes / 2);
  for (std::size_t at = kWavHeaderSize; at < bytes.size(); at += 2) {
    const double x = static_cast<std::int16_t>(get_u16(bytes, at)) / 32767.0;
    buffer.samples.push_back(static_cast<float>(std::max(x, -1.0)));
  }
  return buffer;
}

}  // namespace pbtts
