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


#ifndef MUMW_MEASUREMENTS_H
#define MUMW_MEASUREMENTS_H

#include <optional>
#include <string>
#include <vector>

#include "mumw/generators.h"
#include "mumw/numerics.h"
#include "mumw/report.h"

namespace mumw {

/// A family of L d-outcome POVMs with uniform element purity kappa.
///
/// Unit trace, completeness, cross-family overlap 1/d and same-family
/// overlaps kappa / (1-kappa)/(d-1) are the defining axioms; they are checked
/// by verify_mum_axioms() rather than enforced on construction, so that
/// rounded reference tables can be carried and inspected.
struct MUM {
  int d = 0;
  /// Construction parameter; empty for fixtures and MUB-derived ensembles.
  std::optional<double> t;
  double kappa = 0.0;
  std::vector<std::vector<HermitianOperator>> elements;  // [b-1][n-1]
  /// Free-form identifier carried into witness provenance and reports.
  std::string id;

  int L() const { return static_cast<int>(elements.size()); }
  /// 1-based access.
  const HermitianOperator& at(int b, int n) const;
};

/// Assembles a MUM from its elements and computes kappa via kappa_of().
/// Throws on shape errors or when kappa cannot be defined.
MUM make_mum(int d, std::vector<std::vector<HermitianOperator>> elements, std::optional<double> t,
             std::string id, const ToleranceConfig& cfg = {},
             ValidationPolicy policy = ValidationPolicy::strict);

/// P_n^(b) = I/d + t F_n^(b) with F^(b) = sum_n F_{n,b},
/// F_n^(b) = F^(b) - (d + sqrt d) F_{n,b} for n < d and (1 + sqrt d) F^(b) for n = d.
///
/// Throws std::invalid_argument if t <= 0, if the basis fails its axioms, or if
/// some element has an eigenvalue below -psd_tol (t beyond max_feasible_t).
MUM build_mums(const GeneratorBasis& basis, double t, const ToleranceConfig& cfg = {});

/// The largest t for which every element of build_mums(basis, t) is PSD:
/// min over operators F_n^(b) with a negative eigenvalue of 1/(d |lambda_min|).
double max_feasible_t(const GeneratorBasis& basis);

/// The operators F_n^(b) (before scaling by t), [b-1][n-1].
std::vector<std::vector<HermitianOperator>> mum_directions(const GeneratorBasis& basis);

/// Mean element purity Tr(P^2). Throws if purities differ by more than the
/// policy's spread limit (100 * ortho_tol strict, fixture_tol fixture) or if
/// the mean falls outside [1/d, 1].
double kappa_of(const MUM& mum, const ToleranceConfig& cfg = {},
                ValidationPolicy policy = ValidationPolicy::strict);

/// Worst-case deviations for "psd", "completeness", "unit_trace",
/// "cross_basis" (target 1/d) and "same_basis" (target kappa / (1-kappa)/(d-1)).
/// Strict tolerances: psd_tol, herm_tol, herm_tol, 10*ortho_tol, 10*ortho_tol.
/// The fixture policy uses fixture_tol throughout.
VerificationReport verify_mum_axioms(const MUM& mum, const ToleranceConfig& cfg = {},
                                     ValidationPolicy policy = ValidationPolicy::strict);

/// A set of orthonormal bases of C^d, each stored as d column vectors.
struct MUBSet {
  int d = 0;
  std::vector<std::vector<ComplexVector>> bases;

  int size() const { return static_cast<int>(bases.size()); }
};

/// Computational basis plus the discrete Fourier basis (1/sqrt d) sum_j w^{jk} |j>.
MUBSet fourier_mub_pair(int d);

/// "orthonormality" (ortho_tol) and "unbiasedness" (10*ortho_tol): every
/// cross-basis |<i|j>| equals 1/sqrt d. Fixture policy uses fixture_tol.
VerificationReport verify_mub_axioms(const MUBSet& mubs, const ToleranceConfig& cfg = {},
                                     ValidationPolicy policy = ValidationPolicy::strict);

/// Rank-one projectors |b,n><b,n|; kappa = 1, no t. Throws if the set fails
/// verify_mub_axioms under `policy`.
MUM mub_to_mum(const MUBSet& mubs, const ToleranceConfig& cfg = {},
               ValidationPolicy policy = ValidationPolicy::strict, std::string id = "mub");

}  // namespace mumw

#endif  // MUMW_MEASUREMENTS_H
