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

#ifndef SWARMKIN_RNG_HPP
#define SWARMKIN_RNG_HPP

#include <array>
#include <cstdint>

namespace swarmkin {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// Every draw is a pure function of (key, counter), so a particle's noise at a
/// given step can be regenerated independently of how the work is split
/// across threads.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  [[nodiscard]] static Counter generate(Counter counter, Key key) noexcept;
};

/// Streams keyed on (seed, purpose, particle, step).
enum class RngStream : std::uint32_t {
  dynamics = 0,
  initial_condition = 1,
};

/// Four uniform variates in (0, 1) for the given key tuple.
[[nodiscard]] std::array<double, 4> uniform4(std::uint64_t seed, RngStream stream, std::uint64_t particle,
                                             std::uint64_t step) noexcept;

/// Two independent standard normal variates (Box-Muller on uniform4).
[[nodiscard]] std::array<double, 2> standard_normal2(std::uint64_t seed, RngStream stream, std::uint64_t particle,
                                                     std::uint64_t step) noexcept;

}  // namespace swarmkin

#endif  // SWARMKIN_RNG_HPP
