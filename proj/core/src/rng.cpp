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

#include "swarmkin/rng.hpp"

#include <cmath>
#include <numbers>

namespace swarmkin {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

// 53-bit uniform in (0, 1): never returns 0, so log() below is safe.
inline double to_open_unit(std::uint32_t hi, std::uint32_t lo) noexcept {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 21) ^ (lo >> 11);
  return (static_cast<double>(bits & ((1ull << 53) - 1)) + 0.5) * 0x1.0p-53;
}

Philox4x32::Counter make_counter(RngStream stream, std::uint64_t particle, std::uint64_t step) noexcept {
  return {static_cast<std::uint32_t>(particle), static_cast<std::uint32_t>(particle >> 32),
          static_cast<std::uint32_t>(step),
          static_cast<std::uint32_t>(step >> 32) ^ (static_cast<std::uint32_t>(stream) << 24)};
}

Philox4x32::Key make_key(std::uint64_t seed) noexcept {
  return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

}  // namespace

Philox4x32::Counter Philox4x32::generate(Counter ctr, Key key) noexcept {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

std::array<double, 4> uniform4(std::uint64_t seed, RngStream stream, std::uint64_t particle,
                               std::uint64_t step) noexcept {
  const auto ctr = make_counter(stream, particle, step);
  const auto key = make_key(seed);
  const auto r = Philox4x32::generate(ctr, key);
  // Two words per 53-bit variate; the second block flips bit 23 of the top counter word.
  const auto r2 = Philox4x32::generate({ctr[0], ctr[1], ctr[2], ctr[3] ^ 0x00800000u}, key);
  return {to_open_unit(r[0], r[1]), to_open_unit(r[2], r[3]), to_open_unit(r2[0], r2[1]),
          to_open_unit(r2[2], r2[3])};
}

std::array<double, 2> standard_normal2(std::uint64_t seed, RngStream stream, std::uint64_t particle,
                                       std::uint64_t step) noexcept {
  const auto r = Philox4x32::generate(make_counter(stream, particle, step), make_key(seed));
  const double u1 = to_open_unit(r[0], r[1]);
  const double u2 = to_open_unit(r[2], r[3]);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace swarmkin
