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

#ifndef SWARMKIN_ERROR_HPP
#define SWARMKIN_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace swarmkin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or parameter block, detected before any compute.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A root finder could not bracket a sign change.
class BracketError : public Error {
 public:
  BracketError(const std::string& what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}

  [[nodiscard]] double scanned_lo() const noexcept { return lo_; }
  [[nodiscard]] double scanned_hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// Non-finite state produced during time integration.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, std::uint64_t step)
      : Error(what), step_(step) {}

  [[nodiscard]] std::uint64_t step() const noexcept { return step_; }

 private:
  std::uint64_t step_;
};

}  // namespace swarmkin

#endif  // SWARMKIN_ERROR_HPP
