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


#include "mumw/witness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mumw/random.h"

namespace mumw {

std::string to_string(FactorConvention c) {
  return c == FactorConvention::conjugated ? "conjugated" : "plain";
}

FactorConvention factor_convention_from_string(const std::string& name) {
  if (name == "conjugated") return FactorConvention::conjugated;
  if (name == "plain") return FactorConvention::plain;
  throw std::invalid_argument("unknown factor convention '" + name + "' (expected conjugated|plain)");
}

std::string to_string(WitnessRoute r) { return r == WitnessRoute::choi ? "choi" : "direct"; }

namespace {

void require_compatible(const MUM& mum, const RotationSet& rots) {
  if (rots.d != mum.d) {
    throw std::invalid_argument("rotation dimension " + std::to_string(rots.d) + " does not match MUM dimension " +
                                std::to_string(mum.d));
  }
  if (rots.L() != mum.L()) {
    throw std::invalid_argument("rotation count " + std::to_string(rots.L()) + " does not match MUM count L=" +
                                std::to_string(mum.L()));
  }
  for (const auto& o : rots.rotations) {
    if (o.rows() != mum.d || o.cols() != mum.d) throw std::invalid_argument("rotation matrix has wrong shape");
  }
}

void require_nonsingular(const MUM& mum, const ToleranceConfig& cfg) {
  if (mum.kappa <= 1.0 / mum.d + cfg.psd_tol) {
    std::ostringstream msg;
    msg << "positive map undefined for kappa=" << mum.kappa << " <= 1/d";
    throw std::invalid_argument(msg.str());
  }
}

// Phi on an arbitrary (not necessarily Hermitian) matrix; linear extension.
ComplexMatrix apply_map_raw(const MUM& mum, const RotationSet& rots, const ComplexMatrix& x) {
  const int d = mum.d;
  const Complex tr = x.trace();
  const ComplexMatrix xt = x - identity(d) * (tr / static_cast<double>(d));
  ComplexMatrix out = identity(d) * (tr / static_cast<double>(d));
  const double scale = 1.0 / (d * mum.kappa - 1.0);
  for (int a = 0; a < mum.L(); ++a) {
    const auto& povm = mum.elements[a];
    const RealMatrix& o = rots.rotations[a];
    std::vector<Complex> overlap(d);
    for (int l = 0; l < d; ++l) overlap[l] = (xt * povm[l].matrix()).trace();
    for (int k = 0; k < d; ++k) {
      Complex coeff = 0.0;
      for (int l = 0; l < d; ++l) coeff += o(k, l) * overlap[l];
      out -= scale * coeff * povm[k].matrix();
    }
  }
  return out;
}

Provenance default_provenance(const MUM& mum, const RotationSet& rots, WitnessRoute route,
                              FactorConvention convention) {
  bool all_identity = true;
  for (const auto& o : rots.rotations) all_identity = all_identity && o.isIdentity(0.0);
  return {mum.id, all_identity ? "identity" : "custom", route, convention, {}};
}

}  // namespace

HermitianOperator apply_positive_map(const MUM& mum, const RotationSet& rots, const HermitianOperator& x,
                                     const ToleranceConfig& cfg) {
  require_compatible(mum, rots);
  require_nonsingular(mum, cfg);
  if (x.dim() != mum.d) throw std::invalid_argument("apply_positive_map: operand dimension mismatch");
  return HermitianOperator(apply_map_raw(mum, rots, x.matrix()));
}

Witness build_witness_choi(const MUM& mum, const RotationSet& rots, const ToleranceConfig& cfg) {
  require_compatible(mum, rots);
  require_nonsingular(mum, cfg);
  const int d = mum.d;
  const double pre = d * mum.kappa - 1.0;
  ComplexMatrix w = ComplexMatrix::Zero(static_cast<Index>(d) * d, static_cast<Index>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      ComplexMatrix unit = ComplexMatrix::Zero(d, d);
      unit(i, j) = 1.0;
      w.block(static_cast<Index>(i) * d, static_cast<Index>(j) * d, d, d) = pre * apply_map_raw(mum, rots, unit);
    }
  }
  return {d, mum.L(), mum.kappa, HermitianOperator(w),
          default_provenance(mum, rots, WitnessRoute::choi, FactorConvention::conjugated)};
}

Witness build_witness_direct(const MUM& mum, const RotationSet& rots, FactorConvention convention) {
  require_compatible(mum, rots);
  const int d = mum.d;
  const Index n = static_cast<Index>(d) * d;
  const double pre = (d * mum.kappa + mum.L() - 1.0) / d;
  ComplexMatrix w = pre * identity(n);
  for (int a = 0; a < mum.L(); ++a) {
    const auto& povm = mum.elements[a];
    const RealMatrix& o = rots.rotations[a];
    for (int l = 0; l < d; ++l) {
      const ComplexMatrix first =
          convention == FactorConvention::conjugated ? ComplexMatrix(povm[l].matrix().conjugate()) : povm[l].matrix();
      ComplexMatrix second = ComplexMatrix::Zero(d, d);
      for (int k = 0; k < d; ++k) second += o(k, l) * povm[k].matrix();
      w -= kron(first, second);
    }
  }
  return {d, mum.L(), mum.kappa, HermitianOperator(w), default_provenance(mum, rots, WitnessRoute::direct, convention)};
}

double evaluate_witness(const HermitianOperator& w, const DensityMatrix& rho, const ToleranceConfig& cfg) {
  if (w.dim() != rho.dim()) {
    throw std::invalid_argument("evaluate_witness: witness dimension " + std::to_string(w.dim()) +
                                " does not match state dimension " + std::to_string(rho.dim()));
  }
  return hs_inner(w, rho.op(), cfg);
}

double evaluate_witness(const Witness& w, const DensityMatrix& rho, const ToleranceConfig& cfg) {
  return evaluate_witness(w.matrix, rho, cfg);
}

BlockPositivityReport block_positivity_scan(const HermitianOperator& w, Index dim_a, Index dim_b,
                                            std::size_t samples, std::uint64_t seed, unsigned workers) {
  if (samples == 0) throw std::invalid_argument("block_positivity_scan: samples must be >= 1");
  if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != w.dim()) {
    throw std::invalid_argument("block_positivity_scan: factor dimensions do not match the witness");
  }
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, samples));

  const ComplexMatrix& m = w.matrix();
  auto run = [&](std::size_t begin, std::size_t end) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng = Rng::stream(seed, i);
      const ComplexVector a = haar_vector(dim_a, rng);
      const ComplexVector b = haar_vector(dim_b, rng);
      ComplexVector ab(dim_a * dim_b);
      for (Index p = 0; p < dim_a; ++p) ab.segment(p * dim_b, dim_b) = a(p) * b;
      best = std::min(best, ab.dot(m * ab).real());
    }
    return best;
  };

  std::vector<double> partial(workers, std::numeric_limits<double>::infinity());
  if (workers == 1) {
    partial[0] = run(0, samples);
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = (samples + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(samples, begin + chunk);
      threads.emplace_back([&, t, begin, end] { partial[t] = begin < end ? run(begin, end) : partial[t]; });
    }
    for (auto& th : threads) th.join();
  }
  return {samples, *std::min_element(partial.begin(), partial.end()), min_eigenvalue(w)};
}

BlockPositivityReport block_positivity_scan(const Witness& w, std::size_t samples, std::uint64_t seed,
                                            unsigned workers) {
  return block_positivity_scan(w.matrix, w.d, w.d, samples, seed, workers);
}

}  // namespace mumw
