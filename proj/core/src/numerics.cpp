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


#include "mumw/numerics.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mumw {

void ToleranceConfig::validate() const {
  if (!(herm_tol > 0) || !(psd_tol > 0) || !(ortho_tol > 0) || !(fixture_tol > 0)) {
    throw std::invalid_argument("all tolerances must be strictly positive");
  }
}

std::string to_string(ValidationPolicy policy) {
  return policy == ValidationPolicy::strict ? "strict" : "fixture";
}

ValidationPolicy validation_policy_from_string(const std::string& name) {
  if (name == "strict") return ValidationPolicy::strict;
  if (name == "fixture") return ValidationPolicy::fixture;
  throw std::invalid_argument("unknown validation policy '" + name + "' (expected strict|fixture)");
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("Hermitian operator requires a non-empty square matrix");
  }
  m_ = (m + m.adjoint()) / 2.0;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermiticity_deviation: matrix is not square");
  }
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianValidation validate_hermitian(const ComplexMatrix& m, const ToleranceConfig& cfg,
                                       ValidationPolicy policy) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream msg;
    msg << "validate_hermitian: expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw std::invalid_argument(msg.str());
  }
  const double dev = hermiticity_deviation(m);
  const double limit = policy == ValidationPolicy::strict ? 100.0 * cfg.herm_tol : cfg.fixture_tol;
  if (dev > limit) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: deviation " << dev << " exceeds " << limit << " ("
        << to_string(policy) << " policy)";
    throw std::invalid_argument(msg.str());
  }
  return {HermitianOperator(m), dev};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b, const ToleranceConfig& cfg) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << "hs_inner: dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw std::invalid_argument(msg.str());
  }
  // Tr(AB) = sum_ij A_ij B_ji, without forming the product.
  const Complex tr = (a.matrix().array() * b.matrix().transpose().array()).sum();
  const double scale = std::max(1.0, a.matrix().norm() * b.matrix().norm());
  if (std::abs(tr.imag()) > cfg.herm_tol * scale) {
    std::ostringstream msg;
    msg << "hs_inner: imaginary part " << tr.imag() << " signals a non-Hermitian input";
    throw std::invalid_argument(msg.str());
  }
  return tr.real();
}

RealVector eigenvalues(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigenvalue solver did not converge");
  }
  return solver.eigenvalues();
}

double min_eigenvalue(const HermitianOperator& a) { return eigenvalues(a)(0); }

ComplexMatrix identity(Index d) { return ComplexMatrix::Identity(d, d); }

namespace {

void check_bipartite(const ComplexMatrix& m, Index dim_a, Index dim_b) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
    throw std::invalid_argument("partial trace: operator dimension does not match dim_a*dim_b");
  }
}

}  // namespace

ComplexMatrix partial_trace_first(const ComplexMatrix& m, Index dim_a, Index dim_b) {
  check_bipartite(m, dim_a, dim_b);
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (Index i = 0; i < dim_a; ++i) {
    out += m.block(i * dim_b, i * dim_b, dim_b, dim_b);
  }
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, Index dim_a, Index dim_b) {
  check_bipartite(m, dim_a, dim_b);
  ComplexMatrix out(dim_a, dim_a);
  for (Index i = 0; i < dim_a; ++i) {
    for (Index j = 0; j < dim_a; ++j) {
      out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    }
  }
  return out;
}

Index exact_sqrt(Index n) {
  if (n < 1) throw std::invalid_argument("exact_sqrt: non-positive argument");
  auto r = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (r * r != n) {
    throw std::invalid_argument("dimension " + std::to_string(n) + " is not a perfect square");
  }
  return r;
}

}  // namespace mumw
