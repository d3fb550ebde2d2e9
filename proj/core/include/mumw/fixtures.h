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


#ifndef MUMW_FIXTURES_H
#define MUMW_FIXTURES_H

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mumw/measurements.h"
#include "mumw/states.h"
#include "mumw/witness.h"

namespace mumw {

/// Parses one fixture table entry. Accepted forms (spaces ignored):
///
///   0.107   -0.107   0.107i   -0.107i   0.326+0.006i   -0.007-0.051i
///   0.408w  -0.408w^2  0.408iw  -0.408iw^2     (w = exp(2 pi i / 3))
///
/// `magnitudes` maps a recorded number token to the exact value it rounds,
/// e.g. {"0.408", 1/sqrt(6)}; it applies to the leading magnitude only.
/// Throws std::invalid_argument on anything else.
Complex parse_fixture_entry(std::string_view text, const std::map<std::string, double>& magnitudes = {});

/// Named reference data sets (mum-d3, mum-d6, mub-d6, rho-3x3, rho-6x6).
///
/// Files store entries verbatim as printed. Loading applies each file's
/// errata list (the recorded string must match before it is replaced), its
/// rounded-constant readings, and block assembly, then validates under the
/// fixture policy.
class FixtureStore {
 public:
  /// The copies compiled into the library.
  static const FixtureStore& embedded();
  /// Every *.json in `dir`, keyed by its "name" field.
  static FixtureStore from_directory(const std::filesystem::path& dir);

  std::vector<std::string> names() const;
  bool contains(const std::string& name) const { return sources_.count(name) != 0; }
  /// "mum", "mub", "state" or "block-state".
  std::string kind(const std::string& name) const;
  const nlohmann::json& raw(const std::string& name) const;

  MUM mum(const std::string& name, const ToleranceConfig& cfg = {}) const;
  MUBSet mub(const std::string& name) const;
  DensityMatrix state(const std::string& name, const ToleranceConfig& cfg = {}) const;
  /// The factor convention the data set's witness is evaluated with.
  FactorConvention witness_convention(const std::string& name) const;

 private:
  std::map<std::string, nlohmann::json> sources_;
};

MUM mum_fixture_d3();
MUM mum_fixture_d6();
MUBSet mub_fixture_d6();
DensityMatrix rho_fixture_3x3();
DensityMatrix rho_fixture_6x6();

}  // namespace mumw

#endif  // MUMW_FIXTURES_H
