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


#ifndef MUMW_TOOLS_ANGLES_H
#define MUMW_TOOLS_ANGLES_H

#include <string_view>
#include <vector>

namespace mumw::cli {

/// Parses "pi/3", "2pi/3", "-pi", "3*pi/4", "pi", "0", "1.0472".
/// Multiples of pi are evaluated as (k * pi) / n so that pi/3 yields the same
/// double as std::numbers::pi / 3. Throws std::invalid_argument.
double parse_angle(std::string_view text);

/// Comma-separated list of parse_angle() tokens.
std::vector<double> parse_angle_list(std::string_view text);

}  // namespace mumw::cli

#endif  // MUMW_TOOLS_ANGLES_H
