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


#include "mumw/measurements.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mumw {

const HermitianOperator& MUM::at(int b, int n) const {
  if (b < 1 || b > L() || n < 1 || n > static_cast<int>(elements[b - 1].size())) {
    throw std::out_of_range("MUM element (" + std::to_string(b) + "," + std::to_string(n) +
                            ") out of range");
  }
  return elements[b - 1][n - 1];
}

MUM make_mum(int d, std::vector<std::vector<HermitianOperator>> elements, std::optional<double> t,
             std::string id, const ToleranceConfig& cfg, ValidationPolicy policy) {
  if (d < 2) throw std::invalid_argument("MUM dimension must be >= 2");
  if (elements.empty()) throw std::invalid_argument("MUM needs at least one POVM");
  for (const auto& povm : elements) {
    if (static_cast<int>(povm.size()) != d) {
      throw std::invalid_argument("each POVM of a d=" + std::to_string(d) + " MUM needs d elements");
    }
    for (const auto& p : povm) {
      if (p.dim() != d) throw std::invalid_argument("MUM element has wrong dimension");
    }
  }
  MUM mum{d, t, 0.0, std::move(elements), std::move(id)};
  mum.kappa = kappa_of(mum, cfg, policy);
  return mum;
}

std::vector<std::vector<HermitianOperator>> mum_directions(const GeneratorBasis& basis) {
  const int d = basis.d;
  const double sd = std::sqrt(static_cast<double>(d));
  std::vector<std::vector<HermitianOperator>> out;
  for (const auto& group : basis.cells) {
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& g : group) sum += g.op.matrix();
    std::vector<HermitianOperator> dirs;
    for (const auto& g : group) dirs.emplace_back(sum - (d + sd) * g.op.matrix());
    dirs.emplace_back((1.0 + sd) * sum);
    out.push_back(std::move(dirs));
  }
  return out;
}

double max_feasible_t(const GeneratorBasis& basis) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& dirs : mum_directions(basis)) {
    for (const auto& f : dirs) {
      const double lmin = min_eigenvalue(f);
      if (lmin < 0) best = std::min(best, 1.0 / (basis.d * -lmin));
    }
  }
  return best;
}

MUM build_mums(const GeneratorBasis& basis, double t, const ToleranceConfig& cfg) {
  if (!(t > 0)) throw std::invalid_argument("build_mums: t must be positive");
  const auto axioms = verify_generator_axioms(basis, cfg);
  if (!axioms.passed()) {
    throw std::invalid_argument("build_mums: generator basis fails axioms:\n" + axioms.summary());
  }
  const int d = basis.d;
  const ComplexMatrix id = identity(d) / static_cast<double>(d);
  std::vector<std::vector<HermitianOperator>> elements;
  for (const auto& dirs : mum_directions(basis)) {
    std::vector<HermitianOperator> povm;
    for (const auto& f : dirs) {
      HermitianOperator p(id + t * f.matrix());
      const double lmin = min_eigenvalue(p);
      if (lmin < -cfg.psd_tol) {
        std::ostringstream msg;
        msg << "build_mums: t=" << t << " is infeasible (element eigenvalue " << lmin
            << "; max feasible t=" << max_feasible_t(basis) << ")";
        throw std::invalid_argument(msg.str());
      }
      povm.push_back(std::move(p));
    }
    elements.push_back(std::move(povm));
  }
  std::ostringstream id_str;
  id_str.precision(17);
  id_str << "constructed:d=" << d << ":" << basis.scheme << ":t=" << t;
  return make_mum(d, std::move(elements), t, id_str.str(), cfg);
}

double kappa_of(const MUM& mum, const ToleranceConfig& cfg, ValidationPolicy policy) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& povm : mum.elements) {
    for (const auto& p : povm) {
      const double purity = hs_inner(p, p, cfg);
      lo = std::min(lo, purity);
      hi = std::max(hi, purity);
      sum += purity;
      ++count;
    }
  }
  if (count == 0) throw std::invalid_argument("kappa_of: empty MUM");
  const double spread_limit = policy == ValidationPolicy::strict ? 100.0 * cfg.ortho_tol : cfg.fixture_tol;
  if (hi - lo > spread_limit) {
    std::ostringstream msg;
    msg << "kappa_of: element purities spread by " << hi - lo << " (limit " << spread_limit
        << "); not a uniform-kappa MUM";
    throw std::invalid_argument(msg.str());
  }
  const double kappa = sum / static_cast<double>(count);
  const double slack = policy == ValidationPolicy::strict ? cfg.herm_tol : cfg.fixture_tol;
  if (kappa < 1.0 / mum.d - slack || kappa > 1.0 + slack) {
    std::ostringstream msg;
    msg << "kappa_of: kappa=" << kappa << " outside [1/d, 1]";
    throw std::invalid_argument(msg.str());
  }
  return kappa;
}

VerificationReport verify_mum_axioms(const MUM& mum, const ToleranceConfig& cfg, ValidationPolicy policy) {
  const bool strict = policy == ValidationPolicy::strict;
  const int d = mum.d;
  const ComplexMatrix id = identity(d);

  double psd = 0.0;
  double completeness = 0.0;
  double unit_trace = 0.0;
  double cross = 0.0;
  double same = 0.0;
  const double off_target = d > 1 ? (1.0 - mum.kappa) / (d - 1) : 0.0;

  for (int a = 0; a < mum.L(); ++a) {
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      const auto& p = mum.elements[a][i];
      sum += p.matrix();
      psd = std::max(psd, -min_eigenvalue(p));
      unit_trace = std::max(unit_trace, std::abs(p.trace() - 1.0));
      for (int j = 0; j < d; ++j) {
        const double target = i == j ? mum.kappa : off_target;
        same = std::max(same, std::abs(hs_inner(p, mum.elements[a][j], cfg) - target));
      }
      for (int b = a + 1; b < mum.L(); ++b) {
        for (int j = 0; j < d; ++j) {
          cross = std::max(cross, std::abs(hs_inner(p, mum.elements[b][j], cfg) - 1.0 / d));
        }
      }
    }
    completeness = std::max(completeness, (sum - id).cwiseAbs().maxCoeff());
  }

  VerificationReport report;
  const double f = cfg.fixture_tol;
  report.add("psd", std::max(psd, 0.0), strict ? cfg.psd_tol : f);
  report.add("completeness", completeness, strict ? cfg.herm_tol : f);
  report.add("unit_trace", unit_trace, strict ? cfg.herm_tol : f);
  report.add("cross_basis", cross, strict ? 10 * cfg.ortho_tol : f);
  report.add("same_basis", same, strict ? 10 * cfg.ortho_tol : f);
  return report;
}

MUBSet fourier_mub_pair(int d) {
  if (d < 2) throw std::invalid_argument("fourier_mub_pair: d must be >= 2");
  MUBSet set{d, {}};
  std::vector<ComplexVector> computational;
  std::vector<ComplexVector> fourier;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    computational.push_back(ComplexVector::Unit(d, k));
    ComplexVector f(d);
    for (int j = 0; j < d; ++j) {
      // Reduce jk mod d before the trig call to keep phases exact for large d.
      const double phase = 2.0 * std::numbers::pi * ((j * k) % d) / d;
      f(j) = norm * Complex(std::cos(phase), std::sin(phase));
    }
    fourier.push_back(std::move(f));
  }
  set.bases.push_back(std::move(computational));
  set.bases.push_back(std::move(fourier));
  return set;
}

VerificationReport verify_mub_axioms(const MUBSet& mubs, const ToleranceConfig& cfg, ValidationPolicy policy) {
  const bool strict = policy == ValidationPolicy::strict;
  const double target = 1.0 / std::sqrt(static_cast<double>(mubs.d));
  double ortho = 0.0;
  double unbiased = 0.0;
  for (std::size_t a = 0; a < mubs.bases.size(); ++a) {
    const auto& ba = mubs.bases[a];
    if (static_cast<int>(ba.size()) != mubs.d) {
      throw std::invalid_argument("MUB basis must contain d vectors");
    }
    for (std::size_t i = 0; i < ba.size(); ++i) {
      if (ba[i].size() != mubs.d) throw std::invalid_argument("MUB vector has wrong dimension");
      for (std::size_t j = 0; j < ba.size(); ++j) {
        const Complex g = ba[i].dot(ba[j]);
        ortho = std::max(ortho, std::abs(g - Complex(i == j ? 1.0 : 0.0)));
      }
    }
    for (std::size_t b = a + 1; b < mubs.bases.size(); ++b) {
      for (const auto& u : ba) {
        for (const auto& v : mubs.bases[b]) {
          unbiased = std::max(unbiased, std::abs(std::abs(u.dot(v)) - target));
        }
      }
    }
  }
  VerificationReport report;
  report.add("orthonormality", ortho, strict ? cfg.ortho_tol : cfg.fixture_tol);
  report.add("unbiasedness", unbiased, strict ? 10 * cfg.ortho_tol : cfg.fixture_tol);
  return report;
}

MUM mub_to_mum(const MUBSet& mubs, const ToleranceConfig& cfg, ValidationPolicy policy, std::string id) {
  const auto report = verify_mub_axioms(mubs, cfg, policy);
  if (!report.passed()) {
    throw std::invalid_argument("mub_to_mum: input fails MUB axioms:\n" + report.summary());
  }
  std::vector<std::vector<HermitianOperator>> elements;
  for (const auto& basis : mubs.bases) {
    std::vector<HermitianOperator> povm;
    for (const auto& v : basis) povm.emplace_back(v * v.adjoint());
    elements.push_back(std::move(povm));
  }
  return make_mum(mubs.d, std::move(elements), std::nullopt, std::move(id), cfg, policy);
}

}  // namespace mumw
