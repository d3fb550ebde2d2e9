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


#include "mumw/report.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace mumw {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

void VerificationReport::add(std::string name, double deviation, double tolerance) {
  checks.push_back({std::move(name), deviation, tolerance});
}

const Check& VerificationReport::at(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named '" + name + "'");
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.pass()) out.push_back(c.name);
  }
  return out;
}

std::string VerificationReport::summary() const {
  std::string out;
  char line[160];
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-16s %.3e <= %.1e  %s\n", c.name.c_str(), c.deviation,
                  c.tolerance, c.pass() ? "ok" : "FAIL");
    out += line;
  }
  return out;
}

}  // namespace mumw
