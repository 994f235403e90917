// Copyright 2026 The qdist developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// qdist command line: ingest states as JSON, run measures / bound sweeps /
// tradeoff curves / oracle comparisons / broadcast checks, emit JSON or CSV.
// Identical inputs and seed produce byte-identical outputs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdist/broadcast.hpp"
#include "qdist/io.hpp"
#include "qdist/oracle.hpp"
#include "qdist/tradeoff.hpp"

namespace {

using nlohmann::json;
using namespace qdist;

constexpr Real kLn2 = 0.6931471805599453;

json round12(Real v) {
  if (!std::isfinite(v)) return json(v > 0 ? "inf" : (v < 0 ? "-inf" : "nan"));
  return json::parse(format_real(v));
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) fail(Errc::BadInput, "cannot write " + tmp);
    out << text;
  }
  std::filesystem::rename(tmp, out_path);
}

struct MeasureArgs {
  std::string what, rho0_path, rho1_path, out;
  Real pi0 = 0.5;
  Real theta = M_PI / 4.0;
  int copies = 1;
  int grid = 7200;
  bool bits = false;
  bool deg = false;
};

int run_measure(const MeasureArgs& a) {
  Real unit = a.bits ? kLn2 : 1.0;
  json out;
  if (a.what == "photon") {
    Real theta = a.deg ? a.theta * M_PI / 180.0 : a.theta;
    PhotonSweepResult r = photon_angle_sweep(theta, a.copies, a.grid);
    out["best_angle_deg"] = round12(r.best_angle * 180.0 / M_PI);
    out["best_angle_rad"] = round12(r.best_angle);
    out["copies"] = a.copies;
    emit(out, a.out);
    return 0;
  }
  DensityOperator r0 = load_state(a.rho0_path);
  DensityOperator r1 = load_state(a.rho1_path);
  if (a.what == "fidelity") {
    FidelityResult f = fidelity_q(r0, r1);
    out["fidelity"] = round12(f.f);
    out["bures"] = round12(f.bures);
  } else if (a.what == "helstrom") {
    HelstromResult h = helstrom(r0, r1, a.pi0);
    out["pe"] = round12(h.pe);
    json eigs = json::array();
    for (Eigen::Index i = 0; i < h.gamma_eigs.size(); ++i)
      eigs.push_back(round12(h.gamma_eigs(i)));
    out["gamma_eigs"] = eigs;
  } else if (a.what == "kullback") {
    KullbackBounds lo = k_lower_bounds(r0, r1, /*allow_regularize=*/true);
    KullbackBounds hi = k_upper_bounds(r0, r1);
    out["k_f"] = round12(lo.k_f / unit);
    out["k_b"] = round12(lo.k_b / unit);
    out["hiai_lower"] = round12(lo.hiai_lower / unit);
    out["jensen_lower"] = round12(lo.jensen_lower / unit);
    out["k_umegaki"] = round12(hi.k_umegaki / unit);
    out["ando_upper"] = round12(hi.ando_upper / unit);
    out["jensen_upper"] = round12(hi.jensen_upper / unit);
    json hiai = json::object();
    for (const auto& [p, v] : hi.hiai_upper) hiai[format_real(p)] = round12(v / unit);
    out["hiai_upper"] = hiai;
  } else {
    fail(Errc::BadInput, "unknown measure: " + a.what);
  }
  emit(out, a.out);
  return 0;
}

struct BoundsArgs {
  Real a = 1.0, b = 2.0 / 3.0, theta = M_PI / 3.0;
  std::string rho0_path, rho1_path, out;
  int t_grid = 101;
  bool bits = false;
  bool deg = false;
};

int run_bounds(const BoundsArgs& args) {
  if (args.t_grid < 3 || args.t_grid % 2 == 0)
    fail(Errc::BadInput, "t grid must be odd and >= 3");
  Real unit = args.bits ? kLn2 : 1.0;
  std::optional<BinaryChannel> ch;
  if (!args.rho0_path.empty() || !args.rho1_path.empty()) {
    if (args.rho0_path.empty() || args.rho1_path.empty())
      fail(Errc::BadInput, "need both --rho0 and --rho1");
    ch.emplace(load_state(args.rho0_path), load_state(args.rho1_path), 0.5);
  } else {
    Real theta = args.deg ? args.theta * M_PI / 180.0 : args.theta;
    ch.emplace(bloch_channel(args.a, args.b, theta, 0.5));
  }
  if (ch->dim() != 2) fail(Errc::BadInput, "bounds sweep needs qubit states");
  std::vector<BoundCurve> curves = bounds_sweep(*ch, args.t_grid);
  std::vector<std::vector<Real>> rows(static_cast<size_t>(args.t_grid));
  for (int i = 0; i < args.t_grid; ++i) {
    rows[static_cast<size_t>(i)].push_back(curves[0].samples[static_cast<size_t>(i)].first);
    for (const BoundCurve& c : curves)
      rows[static_cast<size_t>(i)].push_back(c.samples[static_cast<size_t>(i)].second / unit);
  }
  std::string header = "t";
  for (const BoundCurve& c : curves) header += std::string(",") + bound_name(c.kind);
  if (args.out.empty()) fail(Errc::BadInput, "bounds needs --out");
  write_csv(args.out, header, rows);
  return 0;
}

struct TradeoffArgs {
  int theta_grid = 85;
  std::string out;
};

int run_tradeoff(const TradeoffArgs& args) {
  if (args.theta_grid < 3) fail(Errc::BadInput, "theta grid too coarse");
  std::vector<std::vector<Real>> rows;
  for (int i = 1; i <= args.theta_grid; ++i) {
    Real theta = (M_PI / 2.0) * i / (args.theta_grid + 1);
    Real phi = phi_opt(theta);
    TradeoffPoint p = restricted_example(theta, phi);
    Real xi = p.xi;
    DensityOperator s0 = bloch_to_density(Bloch(std::cos(2 * xi), std::sin(2 * xi), 0));
    DensityOperator s1 = bloch_to_density(
        Bloch(std::cos(2 * (xi + theta)), std::sin(2 * (xi + theta)), 0));
    rows.push_back({theta * 180.0 / M_PI, phi * 180.0 / M_PI, p.ps, p.c, p.ps + p.c,
                    loose_bound(s0, s1)});
  }
  if (args.out.empty()) fail(Errc::BadInput, "tradeoff needs --out");
  write_csv(args.out, "theta_deg,phi_opt_deg,ps,c,ps_plus_c,loose_bound", rows);
  return 0;
}

struct OracleArgs {
  std::string functional = "min_overlap";
  std::string rho0_path, rho1_path, out;
  Real pi0 = 0.5;
  int grid = 720;
  int refine = 60;
  int outcomes = 0;
  int restarts = 16;
  bool povm = false;
  std::optional<std::uint64_t> seed;
};

int run_oracle(const OracleArgs& a) {
  DensityOperator r0 = load_state(a.rho0_path);
  DensityOperator r1 = load_state(a.rho1_path);
  FunctionalKind kind;
  if (a.functional == "min_overlap") kind = FunctionalKind::MinOverlap;
  else if (a.functional == "min_error") kind = FunctionalKind::MinError;
  else if (a.functional == "max_kl") kind = FunctionalKind::MaxKl;
  else if (a.functional == "max_mutual") kind = FunctionalKind::MaxMutual;
  else fail(Errc::BadInput, "unknown functional: " + a.functional);
  Functional f(kind, r0, r1, a.pi0);
  json out;
  out["functional"] = a.functional;
  if (r0.dim() == 2) {
    ProjectiveOptimum p = optimize_projective_2d(f, a.grid, a.refine);
    out["projective"] = round12(p.value);
    out["projective_axis"] = {round12(p.n.x()), round12(p.n.y()), round12(p.n.z())};
  }
  if (a.povm) {
    if (!a.seed) fail(Errc::BadInput, "--seed is required for the POVM search");
    int n = a.outcomes > 0 ? a.outcomes : static_cast<int>(r0.dim() * r0.dim());
    PovmOptimum p = optimize_povm(f, n, *a.seed, a.restarts);
    out["povm"] = round12(p.value);
    out["povm_outcomes"] = n;
  }
  switch (kind) {
    case FunctionalKind::MinOverlap: out["closed_form"] = round12(fidelity_q(r0, r1).f); break;
    case FunctionalKind::MinError:
      out["closed_form"] = round12(helstrom(r0, r1, a.pi0).pe);
      break;
    default: break;
  }
  emit(out, a.out);
  return 0;
}

struct BroadcastArgs {
  std::string rho0_path, rho1_path, out;
};

int run_broadcast(const BroadcastArgs& a) {
  DensityOperator r0 = load_state(a.rho0_path);
  DensityOperator r1 = load_state(a.rho1_path);
  json out;
  bool commuting = can_broadcast(r0, r1);
  out["can_broadcast"] = commuting;
  out["cloning_feasible"] = cloning_feasible(r0, r1);
  out["fidelity"] = round12(fidelity_q(r0, r1).f);
  if (commuting) {
    Channel ch = build_commuting_broadcaster(r0, r1);
    DensityOperator joint = channel_apply(ch, r0);
    Eigen::Index d = r0.dim();
    Matrix ma = partial_trace_matrix(joint.matrix(), d, d, Keep::B);
    Matrix mb = partial_trace_matrix(joint.matrix(), d, d, Keep::A);
    out["marginal_residual"] =
        round12(std::max((ma - r0.matrix()).norm(), (mb - r0.matrix()).norm()));
  }
  emit(out, a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical and quantum distinguishability measures"};
  app.require_subcommand(1);

  MeasureArgs ma;
  CLI::App* measure = app.add_subcommand("measure", "Point measures on a state pair");
  measure->add_option("what", ma.what, "fidelity | helstrom | kullback | photon")->required();
  measure->add_option("--rho0", ma.rho0_path, "state JSON");
  measure->add_option("--rho1", ma.rho1_path, "state JSON");
  measure->add_option("--pi0", ma.pi0, "prior of rho0");
  measure->add_option("--theta", ma.theta, "photon separation angle");
  measure->add_option("--copies", ma.copies, "photon measurement repetitions");
  measure->add_option("--grid", ma.grid, "photon sweep grid");
  measure->add_flag("--bits", ma.bits, "report informations in bits");
  measure->add_flag("--deg", ma.deg, "angles are degrees");
  measure->add_option("--out", ma.out, "output file (default stdout)");

  BoundsArgs ba;
  CLI::App* bounds = app.add_subcommand("bounds", "Accessible-information bound sweep");
  bounds->add_option("--a", ba.a, "Bloch radius of rho0");
  bounds->add_option("--b", ba.b, "Bloch radius of rho1");
  bounds->add_option("--theta", ba.theta, "angle between Bloch vectors");
  bounds->add_option("--rho0", ba.rho0_path, "state JSON (overrides --a)");
  bounds->add_option("--rho1", ba.rho1_path, "state JSON (overrides --b)");
  bounds->add_option("--grid", ba.t_grid, "number of t samples (odd)");
  bounds->add_flag("--bits", ba.bits, "report informations in bits");
  bounds->add_flag("--deg", ba.deg, "angles are degrees");
  bounds->add_option("--out", ba.out, "CSV path")->required();

  TradeoffArgs ta;
  CLI::App* tradeoff = app.add_subcommand("tradeoff", "Restricted inference-disturbance curve");
  tradeoff->add_option("--theta-grid", ta.theta_grid, "interior theta samples");
  tradeoff->add_option("--out", ta.out, "CSV path")->required();

  OracleArgs oa;
  CLI::App* oracle = app.add_subcommand("oracle", "Measurement-optimization ground truth");
  oracle->add_option("--functional", oa.functional,
                     "min_overlap | min_error | max_kl | max_mutual");
  oracle->add_option("--rho0", oa.rho0_path, "state JSON")->required();
  oracle->add_option("--rho1", oa.rho1_path, "state JSON")->required();
  oracle->add_option("--pi0", oa.pi0, "prior of rho0");
  oracle->add_option("--grid", oa.grid, "projective grid");
  oracle->add_option("--refine", oa.refine, "golden refinement iterations");
  oracle->add_flag("--povm", oa.povm, "also run the rank-1 POVM search");
  oracle->add_option("--outcomes", oa.outcomes, "POVM outcomes (default D^2)");
  oracle->add_option("--restarts", oa.restarts, "POVM restarts");
  oracle->add_option("--seed", oa.seed, "RNG seed (required with --povm)");
  oracle->add_option("--out", oa.out, "output file (default stdout)");

  BroadcastArgs bra;
  CLI::App* broadcast = app.add_subcommand("broadcast", "No-broadcasting checks");
  broadcast->add_option("--rho0", bra.rho0_path, "state JSON")->required();
  broadcast->add_option("--rho1", bra.rho1_path, "state JSON")->required();
  broadcast->add_option("--out", bra.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (measure->parsed()) return run_measure(ma);
    if (bounds->parsed()) return run_bounds(ba);
    if (tradeoff->parsed()) return run_tradeoff(ta);
    if (oracle->parsed()) return run_oracle(oa);
    if (broadcast->parsed()) return run_broadcast(bra);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    nlohmann::json err{{"error", "BadInput"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const qdist::Error& e) {
    nlohmann::json err{{"error", qdist::errc_name(e.code())}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return e.code() == qdist::Errc::NoConvergence ? 3 : 2;
  } catch (const std::exception& e) {
    nlohmann::json err{{"error", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 0;
}
