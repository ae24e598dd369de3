// Copyright 2026 The swarmkin Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "swarmkin/rng.hpp"

namespace swarmkin {
namespace {

// Published known-answer vectors for Philox4x32-10.
TEST(Philox, KnownAnswerZero) {
  const auto out = Philox4x32::generate({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out, (Philox4x32::Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
}

TEST(Philox, KnownAnswerOnes) {
  const auto out = Philox4x32::generate({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                        {0xffffffffu, 0xffffffffu});
  EXPECT_EQ(out, (Philox4x32::Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
}

TEST(Philox, KnownAnswerPi) {
  const auto out = Philox4x32::generate({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                        {0xa4093822u, 0x299f31d0u});
  EXPECT_EQ(out, (Philox4x32::Counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(Streams, UniformsInOpenInterval) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    for (double u : uniform4(7, RngStream::dynamics, i, 3)) {
      EXPECT_GT(u, 0.0);
      EXPECT_LT(u, 1.0);
    }
  }
}

TEST(Streams, PureFunctionOfKey) {
  EXPECT_EQ(standard_normal2(42, RngStream::dynamics, 5, 9), standard_normal2(42, RngStream::dynamics, 5, 9));
  EXPECT_NE(standard_normal2(42, RngStream::dynamics, 5, 9), standard_normal2(42, RngStream::dynamics, 5, 10));
  EXPECT_NE(standard_normal2(42, RngStream::dynamics, 5, 9),
            standard_normal2(42, RngStream::initial_condition, 5, 9));
  EXPECT_NE(standard_normal2(42, RngStream::dynamics, 5, 9), standard_normal2(43, RngStream::dynamics, 5, 9));
}

TEST(Streams, NormalMoments) {
  constexpr int n = 200000;
  double s1 = 0.0, s2 = 0.0, s4 = 0.0, cross = 0.0;
  for (int i = 0; i < n / 2; ++i) {
    const auto z = standard_normal2(11, RngStream::dynamics, static_cast<std::uint64_t>(i), 0);
    for (double v : z) {
      s1 += v;
      s2 += v * v;
      s4 += v * v * v * v;
    }
    cross += z[0] * z[1];
  }
  EXPECT_NEAR(s1 / n, 0.0, 4.0 / std::sqrt(n));
  EXPECT_NEAR(s2 / n, 1.0, 4.0 * std::sqrt(2.0 / n));
  EXPECT_NEAR(s4 / n, 3.0, 4.0 * std::sqrt(96.0 / n));
  EXPECT_NEAR(cross / (n / 2), 0.0, 4.0 / std::sqrt(n / 2));
}

}  // namespace
}  // namespace swarmkin
