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

#ifndef SWARMKIN_APP_CSV_HPP
#define SWARMKIN_APP_CSV_HPP

#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace swarmkin::app {

/// Shortest decimal text that reads back to the same double.
[[nodiscard]] std::string format_double(double value);

/// Comma-separated file with a header row. Throws std::runtime_error when the
/// file cannot be opened or a row has the wrong width.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, std::vector<std::string> header);

  void row(std::span<const double> values);
  void row(std::initializer_list<double> values) { row(std::span<const double>(values.begin(), values.size())); }
  /// Row whose leading cells are text (e.g. a model name).
  void row(std::span<const std::string> labels, std::span<const double> values);

  void close();

 private:
  std::ofstream out_;
  std::size_t width_;
  std::string path_;
};

}  // namespace swarmkin::app

#endif  // SWARMKIN_APP_CSV_HPP
