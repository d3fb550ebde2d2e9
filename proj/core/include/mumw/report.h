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


#ifndef MUMW_REPORT_H
#define MUMW_REPORT_H

#include <string>
#include <vector>

namespace mumw {

/// One named worst-case deviation compared against its tolerance.
struct Check {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;

  bool pass() const { return deviation <= tolerance; }
};

/// Result of an axiom verification. Failures are data, not exceptions.
struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, double deviation, double tolerance);
  /// Throws std::out_of_range for unknown names.
  const Check& at(const std::string& name) const;
  std::vector<std::string> failures() const;
  /// One line per check: "name deviation <= tolerance [ok|FAIL]".
  std::string summary() const;
};

}  // namespace mumw

#endif  // MUMW_REPORT_H
