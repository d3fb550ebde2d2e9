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


#ifndef MUMW_WITNESS_H
#define MUMW_WITNESS_H

#include <cstdint>
#include <string>
#include <vector>

#include "mumw/measurements.h"
#include "mumw/numerics.h"
#include "mumw/rotations.h"
#include "mumw/states.h"

namespace mumw {

/// How the first tensor factor enters W.
///
/// conjugated: conj(P_l) (x) P_k, entrywise conjugation in the computational
///             basis. This is the Choi form of the positive map.
/// plain:      P_l (x) P_k.
///
/// Both are block-positive for any valid MUM and rotation set: product-state
/// values agree up to conjugating the first factor's vector.
enum class FactorConvention { conjugated, plain };

std::string to_string(FactorConvention c);
FactorConvention factor_convention_from_string(const std::string& name);

enum class WitnessRoute { choi, direct };

std::string to_string(WitnessRoute r);

struct Provenance {
  std::string mum_id;
  std::string rotations;  // "identity", "circulant", "custom"
  WitnessRoute route = WitnessRoute::direct;
  FactorConvention convention = FactorConvention::conjugated;
  /// Circulant angles when the rotations came from one; empty otherwise.
  std::vector<double> angles;
};

struct Witness {
  int d = 0;
  int L = 0;
  double kappa = 0.0;
  HermitianOperator matrix;  // dimension d^2
  Provenance provenance;
};

/// PhiX = I Tr(X)/d - 1/(d kappa - 1) sum_a sum_kl O^(a)_kl Tr(X~ P^(a)_l) P^(a)_k,
/// X~ = X - I Tr(X)/d.
///
/// Throws std::invalid_argument on dimension or L mismatch, or when
/// kappa <= 1/d + psd_tol (the prefactor diverges).
HermitianOperator apply_positive_map(const MUM& mum, const RotationSet& rots, const HermitianOperator& x,
                                     const ToleranceConfig& cfg = {});

/// W = (d kappa - 1) sum_ij |i><j| (x) Phi(|i><j|). Conjugated convention only.
/// Same preconditions as apply_positive_map().
Witness build_witness_choi(const MUM& mum, const RotationSet& rots, const ToleranceConfig& cfg = {});

/// W = ((d kappa + L - 1)/d) I (x) I - sum_a sum_kl O^(a)_kl A(P^(a)_l) (x) P^(a)_k,
/// A = conj or identity per `convention`. For L = d+1 the prefactor is 1 + kappa.
/// kappa = 1/d is allowed here.
Witness build_witness_direct(const MUM& mum, const RotationSet& rots,
                             FactorConvention convention = FactorConvention::conjugated);

/// Tr(W rho). Throws on dimension mismatch or if the imaginary residue
/// exceeds herm_tol (scaled by the operator norms).
double evaluate_witness(const Witness& w, const DensityMatrix& rho, const ToleranceConfig& cfg = {});
double evaluate_witness(const HermitianOperator& w, const DensityMatrix& rho, const ToleranceConfig& cfg = {});

struct BlockPositivityReport {
  std::size_t samples = 0;
  /// min <a (x) b| W |a (x) b> over the sampled Haar product vectors.
  double product_minimum = 0.0;
  double min_eigenvalue = 0.0;
};

/// Samples product vectors |a>|b>, sample i drawn from Rng::stream(seed, i),
/// so the result does not depend on `workers` (0 = hardware concurrency).
/// `dim_a * dim_b` must equal dim(w).
BlockPositivityReport block_positivity_scan(const HermitianOperator& w, Index dim_a, Index dim_b,
                                            std::size_t samples, std::uint64_t seed, unsigned workers = 1);
BlockPositivityReport block_positivity_scan(const Witness& w, std::size_t samples, std::uint64_t seed,
                                            unsigned workers = 1);

}  // namespace mumw

#endif  // MUMW_WITNESS_H
