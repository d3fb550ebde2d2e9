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


#ifndef MUMW_TOOLS_REPRO_H
#define MUMW_TOOLS_REPRO_H

#include <string>
#include <vector>

#include "mumw/fixtures.h"
#include "mumw/json_io.h"

namespace mumw::cli {

/// pass <=> |computed - reference| <= tolerance (false when computed is NaN).
struct ReproRow {
  std::string label;
  double reference = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string error;
};

struct ReproResult {
  std::vector<ReproRow> rows;
  std::vector<std::string> notes;

  bool passed() const;
};

/// Every reference value plus the closed-form checks. Rows that depend on a
/// fixture which fails to load are reported as failures with the error text.
ReproResult run_repro(const FixtureStore& store);

std::string format_repro_table(const ReproResult& result);
Json repro_to_json(const ReproResult& result);

}  // namespace mumw::cli

#endif  // MUMW_TOOLS_REPRO_H
