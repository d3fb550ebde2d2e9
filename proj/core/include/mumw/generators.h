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


#ifndef MUMW_GENERATORS_H
#define MUMW_GENERATORS_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mumw/numerics.h"
#include "mumw/report.h"

namespace mumw {

enum class GeneratorKind { symmetric, antisymmetric, diagonal };

/// Identifies one generalized Gell-Mann operator. Indices are 1-based:
/// symmetric/antisymmetric use the pair j < k; diagonal uses l in j (k = 0).
struct GeneratorLabel {
  GeneratorKind kind = GeneratorKind::diagonal;
  int j = 0;
  int k = 0;

  static GeneratorLabel sym(int j, int k) { return {GeneratorKind::symmetric, j, k}; }
  static GeneratorLabel asym(int j, int k) { return {GeneratorKind::antisymmetric, j, k}; }
  static GeneratorLabel diag(int l) { return {GeneratorKind::diagonal, l, 0}; }

  /// "sym(1,2)", "asym(2,3)", "diag(1)".
  std::string str() const;
  bool operator==(const GeneratorLabel&) const = default;
};

struct Generator {
  GeneratorLabel label;
  HermitianOperator op;
};

/// The d^2 - 1 generalized Gell-Mann operators, normalized so that
/// Tr(F F') = delta. Order: all symmetric pairs, all antisymmetric pairs
/// (j < k, lexicographic), then diagonals l = 1..d-1.
///
///   sym(j,k)  = (|j><k| + |k><j|) / sqrt(2)
///   asym(j,k) = -i (|j><k| - |k><j|) / sqrt(2)
///   diag(l)   = (sum_{m<=l} |m><m| - l |l+1><l+1|) / sqrt(l(l+1))
std::vector<Generator> gellmann_generators(int d);

/// Matrix of a single labelled generator in dimension d.
HermitianOperator gellmann_operator(int d, const GeneratorLabel& label);

/// Named assignment of generators to the (b, n) grid. `groups[b][n]` holds
/// the label placed in cell (b+1, n+1); the n-order matters for rotated
/// witnesses.
struct PartitionScheme {
  std::string name;
  int version = 1;
  std::vector<std::vector<GeneratorLabel>> groups;
};

/// Known schemes:
///  - "default" (any d >= 2): group b <= d collects sym(j,b) for j < b and then
///    asym(b,k) for k > b; group d+1 holds diag(1..d-1). This reproduces the
///    sparsity pattern of the mum-d6 fixture.
///  - "paper-d3" (d = 3 only): the explicit d = 3 grouping
///    {asym(1,2), asym(1,3)}, {sym(1,2), asym(2,3)}, {sym(1,3), sym(2,3)},
///    {diag(1), diag(2)}.
///  - "sequential" (any d >= 2): Gell-Mann order chunked into groups of d-1.
PartitionScheme partition_scheme(std::string_view name, int d);
std::vector<std::string> partition_scheme_names();

/// Traceless orthonormal generators arranged on the (b, n) grid,
/// b = 1..d+1, n = 1..d-1.
struct GeneratorBasis {
  int d = 0;
  std::string scheme;
  std::vector<std::vector<Generator>> cells;  // [b-1][n-1]

  const Generator& at(int b, int n) const;
  std::size_t size() const;
};

/// Places `gens` on the grid prescribed by `scheme`. Throws if the count is
/// not d^2 - 1, a required label is missing, or the input is not orthonormal.
GeneratorBasis partition_generators(std::span<const Generator> gens, int d, std::string_view scheme,
                                    const ToleranceConfig& cfg = {});

/// gellmann_generators(d) partitioned with `scheme`.
GeneratorBasis make_generator_basis(int d, std::string_view scheme = "default");

/// Checks "orthonormality", "trace", "hermiticity" and "count" against cfg.
VerificationReport verify_generator_axioms(const GeneratorBasis& basis,
                                           const ToleranceConfig& cfg = {});

}  // namespace mumw

#endif  // MUMW_GENERATORS_H
