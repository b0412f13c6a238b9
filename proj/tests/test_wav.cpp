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

#include <cstdint>
#include <cstring>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "pbtts/wav.hpp"

namespace pbtts {
namespace {

std::uint32_t u32(const std::vector<std::uint8_t>& b, std::size_t at) {
  return b[at] | b[at + 1] << 8 | b[at + 2] << 16 | static_cast<std::uint32_t>(b[at + 3]) << 24;
}

TEST(Wav, EmptyBufferIsBareHeader) {
  const auto bytes = encode_wav(AudioBuffer{});
  ASSERT_EQ(bytes.size(), 44u);
  EXPECT_EQ(std::memcmp(bytes.data(), "RIFF", 4), 0);
  EXPECT_EQ(u32(bytes, 4), 36u);
  EXPECT_EQ(std::memcmp(bytes.data() + 8, "WAVEfmt ", 8), 0);
  EXPECT_EQ(u32(bytes, 16), 16u);
  EXPECT_EQ(bytes[20], 1);  // PCM
  EXPECT_EQ(bytes[22], 1);  // mono
  EXPECT_EQ(u32(bytes, 24), 22050u);
  EXPECT_EQ(u32(bytes, 28), 44100u);
  EXPECT_EQ(bytes[32], 2);
  EXPECT_EQ(bytes[34], 16);
  EXPECT_EQ(std::memcmp(bytes.data() + 36, "data", 4), 0);
  EXPECT_EQ(u32(bytes, 40), 0u);
}

TEST(Wav, OneSecond) {
  AudioBuffer buf;
  buf.samples.assign(22050, 0.25f);
  const auto bytes = encode_wav(buf);
  EXPECT_EQ(bytes.size(), 44u + 44100u);
  EXPECT_EQ(u32(bytes, 40), 44100u);
  EXPECT_EQ(u32(bytes, 4), 36u + 44100u);
}

TEST(Wav, SampleMapping) {
  AudioBuffer buf;
  buf.samples = {0.0f, 1.0f, -1.0f, 0.5f, -0.5f, 2.0f, -3.0f, 1.75f / 32767};
  const auto bytes = encode_wav(buf);
  const auto sample = [&](std::size_t i) {
    return static_cast<std::int16_t>(bytes[44 + 2 * i] | bytes[45 + 2 * i] << 8);
  };
  EXPECT_EQ(sample(0), 0);
  EXPECT_EQ(sample(1), 32767);
  EXPECT_EQ(sample(2), -32767);
  EXPECT_EQ(sample(3), 16384);  // round(16383.5)
  EXPECT_EQ(sample(4), -16384);
  EXPECT_EQ(sample(5), 32767);
  EXPECT_EQ(sample(6), -32767);
  EXPECT_EQ(sample(7), 2);  // clear of the rounding boundary
}

TEST(Wav, RoundTripWithinOneStep) {
  std::mt19937 rng(0x3a5);
  std::uniform_real_distribution<float> amp(-1.0f, 1.0f);
  AudioBuffer buf;
  for (int i = 0; i < 50000; ++i) buf.samples.push_back(amp(rng));
  const auto back = decode_wav(encode_wav(buf));
  ASSERT_EQ(back.samples.size(), buf.samples.size());
  EXPECT_EQ(back.sample_rate, 22050);
  for (std::size_t i = 0; i < buf.samples.size(); ++i) {
    ASSERT_LE(std::abs(back.samples[i] - buf.samples[i]), 1.0 / 32767) << i;
  }
}

TEST(Wav, DecodeRejectsOtherLayouts) {
  AudioBuffer buf;
  buf.samples = {0.1f, 0.2f};
  auto bytes = encode_wav(buf);
  auto bad = bytes;
  bad[0] = 'X';
  EXPECT_THROW(decode_wav(bad), Error);
  bad = bytes;
  bad[34] = 8;
  EXPECT_THROW(decode_wav(bad), Error);
  bad = bytes;
  bad.push_back(0);
  EXPECT_THROW(decode_wav(bad), Error);
  EXPECT_THROW(decode_wav(std::vector<std::uint8_t>(10, 0)), Error);
}

}  // namespace
}  // namespace pbtts
