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


#ifndef MUMW_NUMERICS_H
#define MUMW_NUMERICS_H

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mumw {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Raised when an iterative numerical routine fails to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every tolerance used by the library. `fixture_tol` is the regime for
/// matrices transcribed from 3-decimal reference tables.
struct ToleranceConfig {
  double herm_tol = 1e-10;
  double psd_tol = 1e-9;
  double ortho_tol = 1e-10;
  double fixture_tol = 2e-3;

  /// Throws std::invalid_argument unless all tolerances are strictly positive.
  void validate() const;
};

/// How strictly rounded inputs are checked.
enum class ValidationPolicy { strict, fixture };

std::string to_string(ValidationPolicy policy);
ValidationPolicy validation_policy_from_string(const std::string& name);

/// A square complex matrix that is Hermitian to machine precision.
///
/// Construction symmetrizes the input as (M + M^dagger)/2, so the stored
/// matrix is exactly Hermitian even when the source was only approximately so.
/// Use validate_hermitian() when the source deviation must be policed.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(const ComplexMatrix& m);

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

 private:
  ComplexMatrix m_;
};

struct HermitianValidation {
  HermitianOperator op;
  /// max |M - M^dagger| entrywise, before symmetrization.
  double deviation = 0.0;
};

/// Symmetrizes `m` after checking its Hermiticity deviation: strict policy
/// admits up to 100 * herm_tol, fixture policy admits up to fixture_tol.
HermitianValidation validate_hermitian(const ComplexMatrix& m, const ToleranceConfig& cfg = {},
                                       ValidationPolicy policy = ValidationPolicy::strict);

/// Entrywise max |M - M^dagger|. Throws on non-square input.
double hermiticity_deviation(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
RealMatrix kron(const RealMatrix& a, const RealMatrix& b);

/// Tr(a b) for Hermitian a, b. The imaginary part of the raw trace must not
/// exceed herm_tol (scaled by the operator norms); it is dropped.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b,
                const ToleranceConfig& cfg = {});

/// Ascending eigenvalues from a dedicated Hermitian solver.
RealVector eigenvalues(const HermitianOperator& a);
double min_eigenvalue(const HermitianOperator& a);

ComplexMatrix identity(Index d);

/// Traces out the first (A) factor of an (dim_a * dim_b)-dimensional operator.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, Index dim_a, Index dim_b);
/// Traces out the second (B) factor.
ComplexMatrix partial_trace_second(const ComplexMatrix& m, Index dim_a, Index dim_b);

/// Integer square root of a perfect square; throws otherwise.
Index exact_sqrt(Index n);

}  // namespace mumw

#endif  // MUMW_NUMERICS_H
