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

#ifndef SWARMKIN_PARALLEL_HPP
#define SWARMKIN_PARALLEL_HPP

namespace swarmkin {

/// Environment variable read by configure_threads_from_env().
inline constexpr const char* kThreadsEnvVar = "SWARMKIN_THREADS";

void set_thread_count(int threads);
[[nodiscard]] int thread_count();

/// Applies SWARMKIN_THREADS when set to a positive integer; returns the active count.
int configure_threads_from_env();

}  // namespace swarmkin

#endif  // SWARMKIN_PARALLEL_HPP
