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


#ifndef MUMW_TOOLS_CLI_H
#define MUMW_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace mumw::cli {

/// Runs one command. `args` excludes the program name. Returns the process
/// exit status: 0 on a completed computation (entanglement detection is
/// data, not an error), 1 on bad input or a failed check, 2 on usage errors.
///
/// The environment variable MUMW_TOLERANCE_PROFILE (strict | fixture) sets the
/// validation policy for MUM and state files that do not name one.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mumw::cli

#endif  // MUMW_TOOLS_CLI_H
