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


#ifndef MUMW_JSON_IO_H
#define MUMW_JSON_IO_H

#include <filesystem>

#include <nlohmann/json.hpp>

#include "mumw/criteria.h"
#include "mumw/generators.h"
#include "mumw/measurements.h"
#include "mumw/rotations.h"
#include "mumw/states.h"
#include "mumw/witness.h"

namespace mumw {

using Json = nlohmann::json;

/// {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// {"d", "L", "t" | null, "kappa", "elements": [{"b", "n", "matrix"}]}.
Json mum_to_json(const MUM& mum);
/// Elements are checked for Hermiticity under `policy`; kappa is recomputed
/// and must agree with the stored value within 1e-9.
MUM mum_from_json(const Json& j, const ToleranceConfig& cfg = {}, ValidationPolicy policy = ValidationPolicy::strict);

/// {"d", "bases": [[{"re": [...], "im": [...]}, ...], ...]}.
Json mub_to_json(const MUBSet& mubs);
MUBSet mub_from_json(const Json& j);

/// {"d", "scheme", "cells": [{"b", "n", "label", "matrix"}]}.
Json generator_basis_to_json(const GeneratorBasis& basis);

/// {"d", "rotations": [[[...]]]}.
Json rotations_to_json(const RotationSet& rots);
RotationSet rotations_from_json(const Json& j, const ToleranceConfig& cfg = {});

/// Matrix JSON plus {"d", "L", "kappa", "route", "convention", "angles", "mum_id", "rotations"}.
Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j, const ToleranceConfig& cfg = {});

/// Matrix JSON; an optional "policy" field ("strict" | "fixture") selects validation.
Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j, const ToleranceConfig& cfg = {});

/// {"criterion", "value", "threshold", "detected", "mum_id", "angles", "convention"}.
Json report_to_json(const DetectionReport& r);

/// Reads and parses a JSON file; throws std::runtime_error with the path on failure.
Json read_json_file(const std::filesystem::path& path);
/// Writes `j` with two-space indentation and a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace mumw

#endif  // MUMW_JSON_IO_H
