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


#include "cli.h"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "angles.h"
#include "mumw/criteria.h"
#include "mumw/fixtures.h"
#include "mumw/json_io.h"
#include "repro.h"

namespace mumw::cli {

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  ValidationPolicy policy = ValidationPolicy::strict;
  ToleranceConfig cfg;
};

/// Thrown for input problems that should exit 1 with a diagnostic.
struct CommandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::unique_ptr<FixtureStore> owned_store;

const FixtureStore& fixtures(const std::string& dir) {
  if (dir.empty()) return FixtureStore::embedded();
  owned_store = std::make_unique<FixtureStore>(FixtureStore::from_directory(dir));
  return *owned_store;
}

struct Ensemble {
  MUM mum;
  FactorConvention convention = FactorConvention::conjugated;
};

Ensemble load_ensemble(const Context& ctx, const std::string& mum_path, const std::string& fixture,
                       const std::string& fixtures_dir) {
  if (!fixture.empty()) {
    const FixtureStore& store = fixtures(fixtures_dir);
    const std::string kind = store.kind(fixture);
    if (kind == "mum") return {store.mum(fixture, ctx.cfg), store.witness_convention(fixture)};
    if (kind == "mub") {
      return {mub_to_mum(store.mub(fixture), ctx.cfg, ValidationPolicy::fixture, "fixture:" + fixture),
              store.witness_convention(fixture)};
    }
    throw CommandError("fixture '" + fixture + "' is a " + kind + ", not a measurement set");
  }
  const Json j = read_json_file(mum_path);
  if (j.contains("bases")) return {mub_to_mum(mub_from_json(j), ctx.cfg, ctx.policy, mum_path), FactorConvention::conjugated};
  return {mum_from_json(j, ctx.cfg, ctx.policy), FactorConvention::conjugated};
}

std::optional<DensityMatrix> load_state(const Context& ctx, const std::string& path, const std::string& fixture,
                                        const std::string& fixtures_dir, bool mixed, Index dim) {
  if (mixed) return maximally_mixed(dim);
  if (!fixture.empty()) return fixtures(fixtures_dir).state(fixture, ctx.cfg);
  if (!path.empty()) {
    Json j = read_json_file(path);
    if (!j.contains("policy")) j["policy"] = to_string(ctx.policy);
    return state_from_json(j, ctx.cfg);
  }
  return std::nullopt;
}

RotationSet rotations_for(const MUM& mum, const std::vector<double>& angles) {
  if (angles.empty()) return identity_rotations(mum.d, mum.L());
  if (mum.d != 3) throw CommandError("--angles selects the d=3 circulant rotations; ensemble has d=" + std::to_string(mum.d));
  if (static_cast<int>(angles.size()) != mum.L()) {
    throw CommandError("--angles needs " + std::to_string(mum.L()) + " values (one per POVM), got " +
                       std::to_string(angles.size()));
  }
  return circulant_rotations_d3(angles);
}

FactorConvention resolve_convention(const std::string& flag, FactorConvention fallback) {
  return flag == "auto" ? fallback : factor_convention_from_string(flag);
}

Witness make_witness(const Ensemble& e, const std::vector<double>& angles, FactorConvention convention,
                     const std::string& route) {
  const RotationSet rots = rotations_for(e.mum, angles);
  Witness w;
  if (route == "choi") {
    if (convention != FactorConvention::conjugated) throw CommandError("the Choi route builds the conjugated witness only");
    w = build_witness_choi(e.mum, rots);
  } else {
    w = build_witness_direct(e.mum, rots, convention);
  }
  if (!angles.empty()) {
    w.provenance.rotations = "circulant";
    w.provenance.angles = angles;
  }
  return w;
}

std::string fmt(double v, int precision = 10) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

int cmd_mum_build(Context& ctx, int d, std::optional<double> t, const std::string& scheme, const std::string& out_path) {
  const GeneratorBasis basis = make_generator_basis(d, scheme);
  const double t_star = max_feasible_t(basis);
  const double t_used = t.value_or(t_star);
  const MUM mum = build_mums(basis, t_used, ctx.cfg);
  const VerificationReport report = verify_mum_axioms(mum, ctx.cfg);
  ctx.out << "d=" << d << " L=" << mum.L() << " scheme=" << scheme << " t=" << fmt(t_used) << " t*=" << fmt(t_star)
          << " kappa=" << fmt(mum.kappa) << '\n'
          << report.summary();
  if (!report.passed()) {
    ctx.err << "error: constructed MUMs fail their axioms\n";
    return 1;
  }
  if (!out_path.empty()) {
    write_json_file(out_path, mum_to_json(mum));
    ctx.out << "wrote " << out_path << '\n';
  }
  return 0;
}

int cmd_witness_build(Context& ctx, const Ensemble& e, const std::vector<double>& angles, FactorConvention convention,
                      const std::string& route, const std::string& out_path) {
  const Witness w = make_witness(e, angles, convention, route);
  ctx.out << "d=" << w.d << " L=" << w.L << " kappa=" << fmt(w.kappa) << " convention=" << to_string(convention)
          << " route=" << route << '\n'
          << "trace=" << fmt(w.matrix.trace()) << " min_eigenvalue=" << fmt(min_eigenvalue(w.matrix)) << '\n';
  if (convention == FactorConvention::conjugated && w.kappa > 1.0 / w.d + ctx.cfg.psd_tol) {
    const RotationSet rots = rotations_for(e.mum, angles);
    const Witness other = route == "choi" ? build_witness_direct(e.mum, rots) : build_witness_choi(e.mum, rots);
    ctx.out << "route_residual=" << fmt((w.matrix.matrix() - other.matrix.matrix()).cwiseAbs().maxCoeff(), 3) << '\n';
  } else {
    ctx.out << "route_residual=n/a\n";
  }
  if (!out_path.empty()) {
    write_json_file(out_path, witness_to_json(w));
    ctx.out << "wrote " << out_path << '\n';
  }
  return 0;
}

int cmd_scan_isotropic(Context& ctx, std::optional<int> d_flag, std::optional<double> kappa,
                       const std::optional<Ensemble>& ensemble, bool full, double from, double to, double step) {
  if (!(step > 0) || from < 0 || to >= 1 || from > to) {
    throw CommandError("alpha grid must satisfy 0 <= from <= to < 1 and step > 0");
  }
  int d = 0;
  double k = 0.0;
  if (ensemble) {
    d = ensemble->mum.d;
    k = ensemble->mum.kappa;
    if (d_flag && *d_flag != d) throw CommandError("-d does not match the ensemble dimension");
  } else {
    if (!d_flag) throw CommandError("-d is required with --kappa");
    d = *d_flag;
    k = *kappa;
  }
  std::optional<Witness> w;
  if (full) {
    if (!ensemble) throw CommandError("--full needs --mum or --t");
    if (ensemble->mum.L() != d + 1) throw CommandError("--full needs a complete ensemble (L = d+1)");
    w = build_witness_direct(ensemble->mum, identity_rotations(d, d + 1));
  }
  ctx.out << "# d=" << d << " kappa=" << fmt(k) << " evaluation=" << (full ? "full" : "closed-form") << '\n'
          << "# alpha value detected\n";
  const auto n = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
  int detections = 0;
  std::optional<double> crossing;
  double prev_alpha = 0.0;
  double prev_value = 0.0;
  for (long i = 0; i < n; ++i) {
    const double alpha = from + static_cast<double>(i) * step;
    const double value = full ? evaluate_witness(*w, isotropic_state(d, alpha)) : isotropic_witness_value(d, alpha, k);
    const bool detected = value < -1e-9;
    detections += detected ? 1 : 0;
    ctx.out << fmt(alpha, 6) << ' ' << fmt(value, 12) << ' ' << (detected ? "true" : "false") << '\n';
    if (!crossing && i > 0 && prev_value >= 0 && value < 0) {
      crossing = prev_alpha + (alpha - prev_alpha) * prev_value / (prev_value - value);
    }
    prev_alpha = alpha;
    prev_value = value;
  }
  ctx.out << "detections=" << detections << '\n'
          << "crossing=" << (crossing ? fmt(*crossing, 12) : std::string("none")) << '\n'
          << "expected=" << fmt(1.0 / (d + 1), 12) << '\n';
  return 0;
}

ValidationPolicy policy_from_env() {
  const char* v = std::getenv("MUMW_TOLERANCE_PROFILE");
  if (v == nullptr || *v == '\0') return ValidationPolicy::strict;
  return validation_policy_from_string(v);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err, ValidationPolicy::strict, ToleranceConfig{}};
  try {
    ctx.policy = policy_from_env();
  } catch (const std::exception& e) {
    err << "error: MUMW_TOLERANCE_PROFILE: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Mutually unbiased measurement witnesses", "mumw"};
  app.require_subcommand(1);

  // mum build
  auto* mum = app.add_subcommand("mum", "Build mutually unbiased measurements");
  mum->require_subcommand(1);
  auto* mum_build = mum->add_subcommand("build", "Construct d+1 MUMs from Gell-Mann generators");
  int mb_d = 0;
  std::optional<double> mb_t;
  std::string mb_scheme = "default";
  std::string mb_out;
  mum_build->add_option("-d", mb_d, "Dimension")->required()->check(CLI::Range(2, 64));
  mum_build->add_option("--t", mb_t, "Construction parameter (default: largest feasible)");
  mum_build->add_option("--scheme", mb_scheme, "Generator partition scheme")
      ->check(CLI::IsMember(partition_scheme_names()));
  mum_build->add_option("-o,--out", mb_out, "Output JSON path");

  // mub fourier
  auto* mub = app.add_subcommand("mub", "Mutually unbiased bases");
  mub->require_subcommand(1);
  auto* mub_fourier = mub->add_subcommand("fourier", "Computational and Fourier bases");
  int mf_d = 0;
  std::string mf_out;
  mub_fourier->add_option("-d", mf_d, "Dimension")->required()->check(CLI::Range(2, 64));
  mub_fourier->add_option("-o,--out", mf_out, "Output JSON path")->required();

  // witness build
  auto* witness = app.add_subcommand("witness", "Entanglement witnesses");
  witness->require_subcommand(1);
  auto* wb = witness->add_subcommand("build", "Build W from a measurement set and rotations");
  std::string wb_mum;
  std::string wb_fixture;
  std::string wb_angles;
  std::string wb_convention = "auto";
  std::string wb_route = "direct";
  std::string wb_out;
  std::string wb_dir;
  auto* wb_mum_opt = wb->add_option("--mum", wb_mum, "MUM or MUB JSON file");
  auto* wb_fix_opt = wb->add_option("--fixture", wb_fixture, "Named fixture (mum-d3, mum-d6, mub-d6)");
  wb_mum_opt->excludes(wb_fix_opt);
  wb->add_option("--angles", wb_angles, "Comma-separated circulant angles (d=3), e.g. pi/3,pi/3,0,0");
  wb->add_option("--convention", wb_convention, "First-factor convention")
      ->check(CLI::IsMember({"auto", "conjugated", "plain"}));
  wb->add_option("--route", wb_route, "Construction route")->check(CLI::IsMember({"direct", "choi"}));
  wb->add_option("-o,--out", wb_out, "Output JSON path");
  wb->add_option("--fixtures-dir", wb_dir, "Load fixtures from this directory");

  // eval
  auto* ev = app.add_subcommand("eval", "Evaluate a witness on a state");
  std::string ev_witness;
  std::string ev_state;
  std::string ev_fixture;
  std::string ev_dir;
  bool ev_mixed = false;
  double ev_margin = 1e-9;
  ev->add_option("--witness", ev_witness, "Witness JSON file")->required();
  auto* ev_s = ev->add_option("--state", ev_state, "State JSON file");
  auto* ev_f = ev->add_option("--fixture", ev_fixture, "Named state fixture (rho-3x3, rho-6x6)");
  auto* ev_m = ev->add_flag("--maximally-mixed", ev_mixed, "Use I/d^2");
  ev_s->excludes(ev_f)->excludes(ev_m);
  ev_f->excludes(ev_m);
  ev->add_option("--margin", ev_margin, "Detection margin")->check(CLI::NonNegativeNumber);
  ev->add_option("--fixtures-dir", ev_dir, "Load fixtures from this directory");

  // scan isotropic
  auto* scan = app.add_subcommand("scan", "Parameter scans");
  scan->require_subcommand(1);
  auto* iso = scan->add_subcommand("isotropic", "Witness value on isotropic states over an alpha grid");
  std::optional<int> si_d;
  std::optional<double> si_kappa;
  std::string si_mum;
  std::optional<double> si_t;
  bool si_full = false;
  double si_from = 0.0;
  double si_to = 0.99;
  double si_step = 0.01;
  iso->add_option("-d", si_d, "Dimension")->check(CLI::Range(2, 64));
  auto* si_k = iso->add_option("--kappa", si_kappa, "Closed form with this kappa");
  auto* si_m = iso->add_option("--mum", si_mum, "MUM JSON file");
  auto* si_tt = iso->add_option("--t", si_t, "Construct MUMs with this t (default scheme)");
  si_k->excludes(si_m)->excludes(si_tt);
  si_m->excludes(si_tt);
  iso->add_flag("--full", si_full, "Evaluate the assembled witness instead of the closed form");
  iso->add_option("--from", si_from, "First alpha");
  iso->add_option("--to", si_to, "Last alpha");
  iso->add_option("--step", si_step, "Grid step");

  // compare
  auto* cmp = app.add_subcommand("compare", "Witness and J-index side by side");
  std::string cm_mum;
  std::string cm_fixture;
  std::string cm_angles;
  std::string cm_convention = "auto";
  std::string cm_state;
  std::string cm_state_fixture;
  std::string cm_dir;
  auto* cm_m = cmp->add_option("--mum", cm_mum, "MUM JSON file");
  auto* cm_f = cmp->add_option("--fixture", cm_fixture, "Named measurement fixture");
  cm_m->excludes(cm_f);
  cmp->add_option("--angles", cm_angles, "Comma-separated circulant angles (d=3)");
  cmp->add_option("--convention", cm_convention, "First-factor convention")
      ->check(CLI::IsMember({"auto", "conjugated", "plain"}));
  auto* cm_s = cmp->add_option("--state", cm_state, "State JSON file");
  auto* cm_sf = cmp->add_option("--state-fixture", cm_state_fixture, "Named state fixture");
  cm_s->excludes(cm_sf);
  cmp->add_option("--fixtures-dir", cm_dir, "Load fixtures from this directory");

  // fixture list / export
  auto* fx = app.add_subcommand("fixture", "Bundled reference data sets");
  fx->require_subcommand(1);
  auto* fx_list = fx->add_subcommand("list", "List fixture names");
  auto* fx_export = fx->add_subcommand("export", "Write a fixture in the library JSON format");
  std::string fx_name;
  std::string fx_out;
  std::string fx_dir;
  fx_export->add_option("name", fx_name, "Fixture name")->required();
  fx_export->add_option("-o,--out", fx_out, "Output JSON path")->required();
  for (auto* sub : {fx_list, fx_export}) sub->add_option("--fixtures-dir", fx_dir, "Load fixtures from this directory");

  // repro
  auto* repro = app.add_subcommand("repro", "Reproduce every reference value");
  bool rp_json = false;
  std::string rp_dir;
  repro->add_flag("--json", rp_json, "Machine-readable output");
  repro->add_option("--fixtures-dir", rp_dir, "Load fixtures from this directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (mum_build->parsed()) return cmd_mum_build(ctx, mb_d, mb_t, mb_scheme, mb_out);

    if (mub_fourier->parsed()) {
      const MUBSet set = fourier_mub_pair(mf_d);
      out << verify_mub_axioms(set, ctx.cfg).summary();
      write_json_file(mf_out, mub_to_json(set));
      out << "wrote " << mf_out << '\n';
      return 0;
    }

    if (wb->parsed()) {
      if (wb_mum.empty() && wb_fixture.empty()) throw CommandError("one of --mum or --fixture is required");
      const Ensemble e = load_ensemble(ctx, wb_mum, wb_fixture, wb_dir);
      const auto angles = wb_angles.empty() ? std::vector<double>{} : parse_angle_list(wb_angles);
      return cmd_witness_build(ctx, e, angles, resolve_convention(wb_convention, e.convention), wb_route, wb_out);
    }

    if (ev->parsed()) {
      const Witness w = witness_from_json(read_json_file(ev_witness), ctx.cfg);
      const auto rho = load_state(ctx, ev_state, ev_fixture, ev_dir, ev_mixed, w.matrix.dim());
      if (!rho) throw CommandError("one of --state, --fixture or --maximally-mixed is required");
      out << report_to_json(detect(*rho, w, ev_margin)).dump(2) << '\n';
      return 0;
    }

    if (iso->parsed()) {
      std::optional<Ensemble> ensemble;
      if (!si_mum.empty()) {
        ensemble = load_ensemble(ctx, si_mum, "", "");
      } else if (si_t) {
        if (!si_d) throw CommandError("-d is required with --t");
        ensemble = Ensemble{build_mums(make_generator_basis(*si_d), *si_t, ctx.cfg)};
      } else if (!si_kappa) {
        throw CommandError("one of --kappa, --mum or --t is required");
      }
      return cmd_scan_isotropic(ctx, si_d, si_kappa, ensemble, si_full, si_from, si_to, si_step);
    }

    if (cmp->parsed()) {
      if (cm_mum.empty() && cm_fixture.empty()) throw CommandError("one of --mum or --fixture is required");
      const Ensemble e = load_ensemble(ctx, cm_mum, cm_fixture, cm_dir);
      const auto angles = cm_angles.empty() ? std::vector<double>{} : parse_angle_list(cm_angles);
      const FactorConvention convention = resolve_convention(cm_convention, e.convention);
      const Witness w = make_witness(e, angles, convention, "direct");
      const auto rho = load_state(ctx, cm_state, cm_state_fixture, cm_dir, false, 0);
      if (!rho) throw CommandError("one of --state or --state-fixture is required");
      Json result = {{"witness", report_to_json(detect(*rho, w))}};
      if (e.mum.L() == e.mum.d + 1) {
        result["j_index"] = report_to_json(j_criterion(*rho, e.mum, convention));
      } else {
        result["j_index"] = nullptr;
      }
      out << result.dump(2) << '\n';
      return 0;
    }

    if (fx_list->parsed()) {
      const FixtureStore& store = fixtures(fx_dir);
      for (const auto& name : store.names()) out << name << ' ' << store.kind(name) << '\n';
      return 0;
    }

    if (fx_export->parsed()) {
      const FixtureStore& store = fixtures(fx_dir);
      const std::string kind = store.kind(fx_name);
      if (kind == "mum") {
        write_json_file(fx_out, mum_to_json(store.mum(fx_name, ctx.cfg)));
      } else if (kind == "mub") {
        write_json_file(fx_out, mub_to_json(store.mub(fx_name)));
      } else {
        write_json_file(fx_out, state_to_json(store.state(fx_name, ctx.cfg)));
      }
      out << "wrote " << fx_out << '\n';
      return 0;
    }

    if (repro->parsed()) {
      ReproResult result;
      try {
        result = run_repro(fixtures(rp_dir));
      } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
      }
      if (rp_json) {
        out << repro_to_json(result).dump(2) << '\n';
      } else {
        out << format_repro_table(result);
      }
      return result.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace mumw::cli
