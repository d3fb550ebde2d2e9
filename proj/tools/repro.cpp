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


#include "repro.h"

#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "mumw/criteria.h"
#include "mumw/generators.h"

namespace mumw::cli {

bool ReproResult::passed() const {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return !rows.empty();
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void add_row(ReproResult& out, std::string label, double reference, double tolerance,
             const std::function<double()>& compute) {
  ReproRow row{std::move(label), reference, kNaN, tolerance, false, {}};
  try {
    row.computed = compute();
    row.pass = std::abs(row.computed - reference) <= tolerance;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  out.rows.push_back(std::move(row));
}

// Zero of the (affine in alpha) full witness value on isotropic states.
double isotropic_crossing(int d, double t) {
  const MUM mum = build_mums(make_generator_basis(d), t);
  const Witness w = build_witness_direct(mum, identity_rotations(d, d + 1));
  const double v0 = evaluate_witness(w, isotropic_state(d, 0.0));
  const double v1 = evaluate_witness(w, isotropic_state(d, 0.5));
  return 0.5 * v0 / (v0 - v1);
}

}  // namespace

ReproResult run_repro(const FixtureStore& store) {
  ReproResult out;
  const double pi = std::numbers::pi;
  const std::vector<double> angles{pi / 3, pi / 3, 0.0, 0.0};

  add_row(out, "kappa, d=3 fixture MUMs", 0.358, 2e-3, [&] { return store.mum("mum-d3").kappa; });
  add_row(out, "d=3 fixture MUM axioms (worst deviation)", 0.0, ToleranceConfig{}.fixture_tol, [&] {
    double worst = 0.0;
    for (const auto& c : verify_mum_axioms(store.mum("mum-d3"), {}, ValidationPolicy::fixture).checks) {
      worst = std::max(worst, c.deviation);
    }
    return worst;
  });
  add_row(out, "Tr(rho W), d=3, angles pi/3,pi/3,0,0", -0.0017, 5e-4, [&] {
    const Witness w = build_witness_direct(store.mum("mum-d3"), circulant_rotations_d3(angles));
    return evaluate_witness(w, store.state("rho-3x3"));
  });
  add_row(out, "W(1,1), d=3", 0.001, ToleranceConfig{}.fixture_tol, [&] {
    return build_witness_choi(store.mum("mum-d3"), circulant_rotations_d3(angles)).matrix(0, 0).real();
  });
  add_row(out, "W(1,9), d=3", -0.028, ToleranceConfig{}.fixture_tol, [&] {
    return build_witness_choi(store.mum("mum-d3"), circulant_rotations_d3(angles)).matrix(0, 8).real();
  });
  add_row(out, "J(rho) - 1 - kappa, d=3", -0.0085, 1e-3, [&] {
    const MUM mum = store.mum("mum-d3");
    return j_index(store.state("rho-3x3"), mum) - 1.0 - mum.kappa;
  });
  add_row(out, "Tr(rho W), d=6 MUB witness", 0.68, 0.02, [&] {
    const MUM mum = mub_to_mum(store.mub("mub-d6"), {}, ValidationPolicy::fixture, "fixture:mub-d6");
    const Witness w =
        build_witness_direct(mum, identity_rotations(6, mum.L()), store.witness_convention("mub-d6"));
    return evaluate_witness(w, store.state("rho-6x6"));
  });
  add_row(out, "Tr(rho W), d=6 MUM witness", -0.0114, 3e-3, [&] {
    const MUM mum = store.mum("mum-d6");
    const Witness w =
        build_witness_direct(mum, identity_rotations(6, mum.L()), store.witness_convention("mum-d6"));
    return evaluate_witness(w, store.state("rho-6x6"));
  });
  add_row(out, "constructed (t=0.04066) vs fixture MUMs, d=3, max entry diff", 0.0, 2e-3, [&] {
    const MUM fixture = store.mum("mum-d3");
    const MUM built = build_mums(make_generator_basis(3, "paper-d3"), 0.04066);
    double worst = 0.0;
    for (int b = 1; b <= built.L(); ++b) {
      for (int n = 1; n <= 3; ++n) {
        worst = std::max(worst, (built.at(b, n).matrix() - fixture.at(b, n).matrix()).cwiseAbs().maxCoeff());
      }
    }
    return worst;
  });

  for (int d : {2, 3, 4}) {
    add_row(out, "isotropic zero crossing, d=" + std::to_string(d), 1.0 / (d + 1), 1e-9, [&, d] {
      return isotropic_crossing(d, 0.5 * max_feasible_t(make_generator_basis(d)));
    });
  }
  for (int d : {2, 3}) {
    const GeneratorBasis basis = make_generator_basis(d);
    const double t = 0.5 * max_feasible_t(basis);
    const MUM mum = build_mums(basis, t);
    const double closed = d * (1.0 - d * mum.kappa) / d;  // (L-1)(1 - d kappa)/d with L = d+1
    add_row(out, "Tr(W phi+), d=" + std::to_string(d) + " vs (L-1)(1-d kappa)/d", closed, 1e-10, [&, d] {
      return evaluate_witness(build_witness_direct(mum, identity_rotations(d, d + 1)), max_entangled(d));
    });
  }
  add_row(out, "coincidence sum, d=2 Fourier MUBs, |0>", 1.5, 1e-12, [] {
    const MUM mum = mub_to_mum(fourier_mub_pair(2));
    return coincidence_sum(ComplexVector::Unit(2, 0), mum).value;
  });

  try {
    const auto& blocks = store.raw("rho-6x6").at("blocks");
    const auto rows = blocks.at("A").size();
    out.notes.push_back("rho-6x6: blocks A, B are " + std::to_string(rows) + "x" + std::to_string(rows) +
                        " and alpha is " + std::to_string(blocks.at("alpha").size()) +
                        "x1; the displayed layout assembles to " + std::to_string(store.state("rho-6x6").dim()) +
                        " = 6*6 rows, not to six blocks of size 6");
  } catch (const std::exception& e) {
    out.notes.push_back(std::string("rho-6x6: ") + e.what());
  }
  try {
    const auto report = verify_mum_axioms(store.mum("mum-d6"), {}, ValidationPolicy::fixture);
    if (!report.passed()) {
      std::ostringstream note;
      note << "mum-d6: the transcription misses fixture tolerance on";
      for (const auto& name : report.failures()) note << ' ' << name << " (" << report.at(name).deviation << ')';
      out.notes.push_back(note.str());
    }
  } catch (const std::exception& e) {
    out.notes.push_back(std::string("mum-d6: ") + e.what());
  }
  return out;
}

std::string format_repro_table(const ReproResult& result) {
  std::ostringstream out;
  out << std::left << std::setw(64) << "quantity" << std::right << std::setw(14) << "reference" << std::setw(16)
      << "computed" << std::setw(10) << "tol" << "  result\n";
  for (const auto& r : result.rows) {
    out << std::left << std::setw(64) << r.label << std::right << std::setw(14) << std::setprecision(6) << r.reference
        << std::setw(16) << std::setprecision(9) << r.computed << std::setw(10) << std::setprecision(2) << r.tolerance
        << "  " << (r.pass ? "PASS" : "FAIL");
    if (!r.error.empty()) out << "  (" << r.error << ")";
    out << '\n';
  }
  for (const auto& n : result.notes) out << "note: " << n << '\n';
  out << (result.passed() ? "all rows pass" : "some rows FAIL") << '\n';
  return out.str();
}

Json repro_to_json(const ReproResult& result) {
  Json rows = Json::array();
  for (const auto& r : result.rows) {
    Json row = {{"label", r.label}, {"reference", r.reference}, {"tolerance", r.tolerance}, {"pass", r.pass}};
    row["computed"] = std::isnan(r.computed) ? Json(nullptr) : Json(r.computed);
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  return {{"rows", rows}, {"notes", result.notes}, {"pass", result.passed()}};
}

}  // namespace mumw::cli
