// Copyright 2026 The mumw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "angles.h"

#include <numbers>
#include <regex>
#include <stdexcept>
#include <string>

namespace mumw::cli {

double parse_angle(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  static const std::regex symbolic(R"(([+-]?)(\d+(?:\.\d+)?)?\*?pi(?:/(\d+(?:\.\d+)?))?)");
  static const std::regex decimal(R"([+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?)");
  std::smatch m;
  if (std::regex_match(s, m, symbolic)) {
    const double sign = m[1] == "-" ? -1.0 : 1.0;
    const double k = m[2].matched ? std::stod(m[2]) : 1.0;
    const double n = m[3].matched ? std::stod(m[3]) : 1.0;
    if (n == 0.0) throw std::invalid_argument("angle '" + s + "' divides by zero");
    return sign * (k * std::numbers::pi) / n;
  }
  if (std::regex_match(s, decimal)) return std::stod(s);
  throw std::invalid_argument("cannot parse angle '" + std::string(text) + "'");
}

std::vector<double> parse_angle_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_angle(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace mumw::cli
