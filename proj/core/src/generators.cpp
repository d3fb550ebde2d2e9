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


#include "mumw/generators.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mumw {

std::string GeneratorLabel::str() const {
  std::ostringstream out;
  switch (kind) {
    case GeneratorKind::symmetric: out << "sym(" << j << "," << k << ")"; break;
    case GeneratorKind::antisymmetric: out << "asym(" << j << "," << k << ")"; break;
    case GeneratorKind::diagonal: out << "diag(" << j << ")"; break;
  }
  return out.str();
}

namespace {

void require_dimension(int d) {
  if (d < 2) throw std::invalid_argument("generator dimension must be >= 2, got " + std::to_string(d));
}

void require_label(int d, const GeneratorLabel& l) {
  const bool ok = l.kind == GeneratorKind::diagonal ? (l.j >= 1 && l.j <= d - 1)
                                                    : (l.j >= 1 && l.j < l.k && l.k <= d);
  if (!ok) throw std::invalid_argument("invalid generator label " + l.str() + " for d=" + std::to_string(d));
}

}  // namespace

HermitianOperator gellmann_operator(int d, const GeneratorLabel& label) {
  require_dimension(d);
  require_label(d, label);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  const double r2 = 1.0 / std::sqrt(2.0);
  const int j = label.j - 1;
  const int k = label.k - 1;
  switch (label.kind) {
    case GeneratorKind::symmetric:
      m(j, k) = r2;
      m(k, j) = r2;
      break;
    case GeneratorKind::antisymmetric:
      m(j, k) = Complex(0, -r2);
      m(k, j) = Complex(0, r2);
      break;
    case GeneratorKind::diagonal: {
      const int l = label.j;
      const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
      for (int i = 0; i < l; ++i) m(i, i) = norm;
      m(l, l) = -l * norm;
      break;
    }
  }
  return HermitianOperator(m);
}

std::vector<Generator> gellmann_generators(int d) {
  require_dimension(d);
  std::vector<GeneratorLabel> labels;
  for (int j = 1; j <= d; ++j)
    for (int k = j + 1; k <= d; ++k) labels.push_back(GeneratorLabel::sym(j, k));
  for (int j = 1; j <= d; ++j)
    for (int k = j + 1; k <= d; ++k) labels.push_back(GeneratorLabel::asym(j, k));
  for (int l = 1; l < d; ++l) labels.push_back(GeneratorLabel::diag(l));

  std::vector<Generator> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back({l, gellmann_operator(d, l)});
  return out;
}

PartitionScheme partition_scheme(std::string_view name, int d) {
  require_dimension(d);
  PartitionScheme s{std::string(name), 1, {}};
  if (name == "default") {
    for (int b = 1; b <= d; ++b) {
      std::vector<GeneratorLabel> g;
      for (int j = 1; j < b; ++j) g.push_back(GeneratorLabel::sym(j, b));
      for (int k = b + 1; k <= d; ++k) g.push_back(GeneratorLabel::asym(b, k));
      s.groups.push_back(std::move(g));
    }
    std::vector<GeneratorLabel> diag;
    for (int l = 1; l < d; ++l) diag.push_back(GeneratorLabel::diag(l));
    s.groups.push_back(std::move(diag));
  } else if (name == "paper-d3") {
    if (d != 3) throw std::invalid_argument("scheme 'paper-d3' is defined only for d=3");
    using L = GeneratorLabel;
    s.groups = {{L::asym(1, 2), L::asym(1, 3)},
                {L::sym(1, 2), L::asym(2, 3)},
                {L::sym(1, 3), L::sym(2, 3)},
                {L::diag(1), L::diag(2)}};
  } else if (name == "sequential") {
    const auto gens = gellmann_generators(d);
    for (std::size_t i = 0; i < gens.size(); i += static_cast<std::size_t>(d - 1)) {
      std::vector<GeneratorLabel> g;
      for (int n = 0; n < d - 1; ++n) g.push_back(gens[i + n].label);
      s.groups.push_back(std::move(g));
    }
  } else {
    throw std::invalid_argument("unknown partition scheme '" + std::string(name) + "'");
  }
  return s;
}

std::vector<std::string> partition_scheme_names() { return {"default", "paper-d3", "sequential"}; }

const Generator& GeneratorBasis::at(int b, int n) const {
  if (b < 1 || b > static_cast<int>(cells.size()) || n < 1 ||
      n > static_cast<int>(cells[b - 1].size())) {
    throw std::out_of_range("generator cell (" + std::to_string(b) + "," + std::to_string(n) +
                            ") out of range");
  }
  return cells[b - 1][n - 1];
}

std::size_t GeneratorBasis::size() const {
  std::size_t n = 0;
  for (const auto& g : cells) n += g.size();
  return n;
}

namespace {

double max_orthonormality_deviation(const std::vector<const HermitianOperator*>& ops,
                                    const ToleranceConfig& cfg) {
  double worst = 0.0;
  for (std::size_t a = 0; a < ops.size(); ++a) {
    for (std::size_t b = a; b < ops.size(); ++b) {
      const double target = a == b ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(hs_inner(*ops[a], *ops[b], cfg) - target));
    }
  }
  return worst;
}

}  // namespace

GeneratorBasis partition_generators(std::span<const Generator> gens, int d, std::string_view scheme,
                                    const ToleranceConfig& cfg) {
  require_dimension(d);
  const std::size_t expected = static_cast<std::size_t>(d) * d - 1;
  if (gens.size() != expected) {
    std::ostringstream msg;
    msg << "partition_generators: expected " << expected << " generators, got " << gens.size();
    throw std::invalid_argument(msg.str());
  }
  std::vector<const HermitianOperator*> ops;
  for (const auto& g : gens) {
    if (g.op.dim() != d) throw std::invalid_argument("partition_generators: generator of wrong dimension");
    ops.push_back(&g.op);
  }
  const double dev = max_orthonormality_deviation(ops, cfg);
  if (dev > cfg.ortho_tol) {
    std::ostringstream msg;
    msg << "partition_generators: input is not orthonormal (deviation " << dev << ")";
    throw std::invalid_argument(msg.str());
  }

  std::map<std::string, const Generator*> by_label;
  for (const auto& g : gens) {
    if (!by_label.emplace(g.label.str(), &g).second) {
      throw std::invalid_argument("partition_generators: duplicate label " + g.label.str());
    }
  }

  const PartitionScheme s = partition_scheme(scheme, d);
  GeneratorBasis basis{d, s.name, {}};
  for (const auto& group : s.groups) {
    std::vector<Generator> cells;
    for (const auto& label : group) {
      auto it = by_label.find(label.str());
      if (it == by_label.end()) {
        throw std::invalid_argument("partition_generators: scheme needs missing generator " + label.str());
      }
      cells.push_back(*it->second);
      by_label.erase(it);
    }
    basis.cells.push_back(std::move(cells));
  }
  if (!by_label.empty()) {
    throw std::invalid_argument("partition_generators: scheme left generator " +
                                by_label.begin()->first + " unassigned");
  }
  return basis;
}

GeneratorBasis make_generator_basis(int d, std::string_view scheme) {
  const auto gens = gellmann_generators(d);
  return partition_generators(gens, d, scheme);
}

VerificationReport verify_generator_axioms(const GeneratorBasis& basis, const ToleranceConfig& cfg) {
  VerificationReport report;
  std::vector<const HermitianOperator*> ops;
  bool shape_ok = static_cast<int>(basis.cells.size()) == basis.d + 1;
  for (const auto& group : basis.cells) {
    shape_ok = shape_ok && static_cast<int>(group.size()) == basis.d - 1;
    for (const auto& g : group) ops.push_back(&g.op);
  }
  const double expected = static_cast<double>(basis.d) * basis.d - 1;
  report.add("count", shape_ok ? std::abs(static_cast<double>(ops.size()) - expected) : 1.0, 0.5);

  double trace_dev = 0.0;
  double herm_dev = 0.0;
  for (const auto* op : ops) {
    trace_dev = std::max(trace_dev, std::abs(op->matrix().trace()));
    herm_dev = std::max(herm_dev, hermiticity_deviation(op->matrix()));
  }
  // Gram entries; the raw trace is used so that a broken operator cannot
  // abort the report through hs_inner's Hermiticity guard.
  double ortho_dev = 0.0;
  for (std::size_t a = 0; a < ops.size(); ++a) {
    for (std::size_t b = a; b < ops.size(); ++b) {
      const Complex g = (ops[a]->matrix() * ops[b]->matrix()).trace();
      ortho_dev = std::max(ortho_dev, std::abs(g - Complex(a == b ? 1.0 : 0.0)));
    }
  }
  report.add("orthonormality", ortho_dev, cfg.ortho_tol);
  report.add("trace", trace_dev, cfg.herm_tol);
  report.add("hermiticity", herm_dev, cfg.herm_tol);
  return report;
}

}  // namespace mumw
