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
// Acceptance suite. Each criterion prints one pass/fail line; the process
// exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qdist/accinfo.hpp"
#include "qdist/broadcast.hpp"
#include "qdist/classical.hpp"
#include "qdist/oracle.hpp"
#include "qdist/tradeoff.hpp"

using namespace qdist;

namespace {

constexpr Real kDeg = 180.0 / M_PI;

struct Criterion {
  std::string name;
  Real time_limit_s;
  std::function<bool(std::string&)> run;
};

bool expect(bool ok, const std::string& what, std::string& detail) {
  if (!ok && detail.empty()) detail = what;
  return ok;
}

DensityOperator seeded_full_rank(Eigen::Index d, std::uint64_t seed, Real min_eig = 1e-3) {
  for (std::uint64_t k = 0;; ++k) {
    DensityOperator rho = random_density(d, d, seed + 7919 * k);
    if (eig_hermitian(rho.matrix()).eigenvalues.minCoeff() > min_eig) return rho;
  }
}

Matrix seeded_unitary(Eigen::Index d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<Real> nd(0.0, 1.0);
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(nd(gen), nd(gen));
  return Matrix(Eigen::HouseholderQR<Matrix>(g).householderQ());
}

// --- 1. tradeoff optimum -------------------------------------------------
bool crit_tradeoff(std::string& detail) {
  bool ok = true;
  Real best_theta = 0.0, best_phi = -1.0;
  const int grid = 200000;
  for (int i = 1; i < grid; ++i) {
    Real theta = i * (M_PI / 2) / grid;
    Real phi = phi_opt(theta);
    if (phi > best_phi) { best_phi = phi; best_theta = theta; }
  }
  ok &= expect(std::abs(best_phi * kDeg - 6.99) <= 0.02,
               "max phi_opt = " + std::to_string(best_phi * kDeg), detail);
  ok &= expect(std::abs(best_theta * kDeg - 27.73) <= 0.05,
               "argmax theta = " + std::to_string(best_theta * kDeg), detail);
  return ok;
}

// --- 2. photon discrimination --------------------------------------------
bool crit_photon(std::string& detail) {
  const Real targets[3] = {67.50, 54.54, 49.94};
  bool ok = true;
  for (int m = 1; m <= 3; ++m) {
    Real angle = photon_angle_sweep(M_PI / 4, m, 7200).best_angle * kDeg;
    ok &= expect(std::abs(angle - targets[m - 1]) <= 0.02,
                 "m=" + std::to_string(m) + " angle " + std::to_string(angle), detail);
  }
  return ok;
}

// --- 3. two-sample comparison example ------------------------------------
bool crit_cover(std::string& detail) {
  RealVector p0(2), p1(2), q0(2), q1(2);
  p0 << 0.96, 0.04;
  p1 << 0.04, 0.96;
  q0 << 0.90, 0.10;
  q1 << 0.0, 1.0;
  bool ok = true;
  ok &= expect(std::abs(error_probability(p0, p1, 0.5).pe - 0.04) <= 1e-12, "P_e(p,1)", detail);
  ok &= expect(std::abs(error_probability(q0, q1, 0.5).pe - 0.05) <= 1e-12, "P_e(q,1)", detail);
  ok &= expect(std::abs(error_probability_iid(p0, p1, 0.5, 2) - 0.04) <= 1e-12, "P_e(p,2)",
               detail);
  ok &= expect(std::abs(error_probability_iid(q0, q1, 0.5, 2) - 0.005) <= 1e-12, "P_e(q,2)",
               detail);
  return ok;
}

// --- 4. figure channels: pointwise bound orderings -----------------------
bool crit_figures(std::string& detail) {
  struct Fig {
    Real a, b, angle;
    bool pure;
  };
  const std::vector<Fig> figs = {{1.0, 2.0 / 3.0, M_PI / 3.0, false},
                                 {1.0, 2.0 / 3.0, M_PI / 4.0, false},
                                 {1.0, 1.0, M_PI / 4.0, true},
                                 {0.9, 0.6, M_PI / 5.0, false},
                                 {2.0 / 3.0, 2.0 / 3.0, M_PI / 4.0, false}};
  bool ok = true;
  for (const Fig& fig : figs) {
    BinaryChannel ch = bloch_channel(fig.a, fig.b, fig.angle, 0.5);
    std::vector<BoundCurve> curves = bounds_sweep(ch, 101);
    auto curve = [&](BoundKind k) -> const BoundCurve& {
      for (const auto& c : curves)
        if (c.kind == k) return c;
      return curves.front();
    };
    for (size_t i = 1; i + 1 < 101; ++i) {
      Real q = curve(BoundKind::Q).samples[i].second;
      Real m = curve(BoundKind::M).samples[i].second;
      Real inum = curve(BoundKind::I_num).samples[i].second;
      Real l = curve(BoundKind::L).samples[i].second;
      Real n = curve(BoundKind::N).samples[i].second;
      Real r = curve(BoundKind::R).samples[i].second;
      Real p = curve(BoundKind::P).samples[i].second;
      Real s = curve(BoundKind::S).samples[i].second;
      ok &= expect(std::max(q, m) <= inum + 1e-6, "lower bounds exceed I_num", detail);
      ok &= expect(inum <= std::min({l, n, r, p, s}) + 2e-6, "I_num exceeds an upper bound",
                   detail);
      ok &= expect(l <= n + 2e-6 && n <= s + 2e-6, "L <= N <= S violated", detail);
      if (fig.pure) {
        ok &= expect(std::abs(m - inum) <= 1e-6 && std::abs(p - inum) <= 1e-6,
                     "pure channel M = P = I violated", detail);
      }
    }
  }
  return ok;
}

// --- 5. fidelity oracle equivalence --------------------------------------
bool crit_fidelity(std::string& detail) {
  bool ok = true;
  for (std::uint64_t s = 0; s < 100; ++s) {
    DensityOperator r0 = random_density(2, 2, 5000 + 2 * s);
    DensityOperator r1 = random_density(2, 2, 5001 + 2 * s);
    Real f = fidelity_q(r0, r1).f;
    Real oracle =
        optimize_projective_2d(Functional(FunctionalKind::MinOverlap, r0, r1), 720, 60).value;
    ok &= expect(oracle >= f - 1e-9 && oracle - f <= 1e-4, "oracle gap", detail);
    Real bloch = fidelity_bloch_2d(density_to_bloch(r0), density_to_bloch(r1));
    ok &= expect(std::abs(f - bloch) <= 1e-10, "Bloch form mismatch", detail);
    Matrix u = seeded_unitary(2, 6000 + s);
    Real rotated = fidelity_q(DensityOperator(u * r0.matrix() * u.adjoint()),
                              DensityOperator(u * r1.matrix() * u.adjoint()))
                       .f;
    ok &= expect(std::abs(rotated - f) <= 1e-9, "unitary invariance", detail);
    DensityOperator s0 = random_density(2, 2, 7000 + 2 * s);
    DensityOperator s1 = random_density(2, 2, 7001 + 2 * s);
    Real product = fidelity_q(tensor(r0, s0), tensor(r1, s1)).f;
    ok &= expect(std::abs(product - f * fidelity_q(s0, s1).f) <= 1e-9, "multiplicativity",
                 detail);
  }
  return ok;
}

// --- 6. Kullback sandwich -------------------------------------------------
bool crit_kullback(std::string& detail) {
  bool ok = true;
  for (std::uint64_t s = 0; s < 100; ++s) {
    DensityOperator r0 = seeded_full_rank(2, 9000 + 2 * s);
    DensityOperator r1 = seeded_full_rank(2, 9001 + 2 * s);
    KullbackBounds lo = k_lower_bounds(r0, r1);
    KullbackBounds hi = k_upper_bounds(r0, r1, {0.5, 1.0, 2.0});
    Real lo_max = std::max({lo.k_f, lo.k_b, lo.hiai_lower, lo.jensen_lower});
    Real hi_min = std::min({hi.k_umegaki, hi.ando_upper, hi.jensen_upper});
    for (const auto& [p, v] : hi.hiai_upper) hi_min = std::min(hi_min, v);
    Real oracle =
        optimize_projective_2d(Functional(FunctionalKind::MaxKl, r0, r1), 720, 60).value;
    ok &= expect(lo_max <= oracle + 1e-6, "lower bound exceeds oracle", detail);
    ok &= expect(oracle <= hi_min + 2e-6, "oracle exceeds upper bound", detail);
  }
  // Commuting pairs: everything equals the classical relative information.
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<Real> ud(0.05, 0.95);
  for (int k = 0; k < 20; ++k) {
    Real a = ud(gen), b = ud(gen);
    Matrix m0 = Matrix::Zero(2, 2), m1 = Matrix::Zero(2, 2);
    m0(0, 0) = a; m0(1, 1) = 1 - a;
    m1(0, 0) = b; m1(1, 1) = 1 - b;
    DensityOperator r0 = make_density(m0), r1 = make_density(m1);
    RealVector p0(2), p1(2);
    p0 << a, 1 - a;
    p1 << b, 1 - b;
    Real classical = kl_divergence(p0, p1);
    KullbackBounds lo = k_lower_bounds(r0, r1);
    KullbackBounds hi = k_upper_bounds(r0, r1, {0.5, 1.0, 2.0});
    for (Real v : {lo.k_f, lo.k_b, lo.hiai_lower, hi.k_umegaki, hi.ando_upper})
      ok &= expect(std::abs(v - classical) <= 1e-9, "commuting bound != classical KL", detail);
    for (const auto& [p, v] : hi.hiai_upper)
      ok &= expect(std::abs(v - classical) <= 1e-9, "commuting Hiai != classical KL", detail);
  }
  return ok;
}

// --- 7. Chernoff ----------------------------------------------------------
bool crit_chernoff(std::string& detail) {
  bool ok = true;
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<Real> ud(0.02, 0.98);
  for (int k = 0; k < 50; ++k) {
    Real q = ud(gen), r = ud(gen);
    if (std::abs(q - r) < 0.01) { q = 0.3; r = 0.7; }
    RealVector p0(2), p1(2);
    p0 << q, 1 - q;
    p1 << r, 1 - r;
    ChernoffResult c = chernoff(p0, p1);
    for (int n = 1; n <= 6; ++n)
      ok &= expect(error_probability_iid(p0, p1, 0.5, n) <= std::pow(c.lambda, n) + 1e-12,
                   "P_e(n) above lambda^n", detail);
    ok &= expect(std::abs(c.k0 - c.k1) <= 1e-8, "K(p*/p0) != K(p*/p1)", detail);
    ok &= expect(std::abs(c.exponent - c.k0) <= 1e-8, "-ln lambda != K", detail);
    ok &= expect(std::abs(c.alpha_star - chernoff_alpha_two_outcome(q, r)) <= 1e-8,
                 "alpha* closed form mismatch", detail);
  }
  return ok;
}

// --- 8. type-class bounds --------------------------------------------------
bool crit_typeclass(std::string& detail) {
  bool ok = true;
  std::vector<RealVector> ps;
  RealVector p2(2), p2b(2), p3(3), p3b(3);
  p2 << 0.5, 0.5;
  p2b << 0.85, 0.15;
  p3 << 0.5, 0.3, 0.2;
  p3b << 0.7, 0.2, 0.1;
  ps = {p2, p2b, p3, p3b};
  for (const RealVector& p : ps) {
    int outcomes = static_cast<int>(p.size());
    for (int n = 1; n <= 12; ++n) {
      std::vector<std::vector<int>> counts;
      if (outcomes == 2) {
        for (int a = 0; a <= n; ++a) counts.push_back({a, n - a});
      } else {
        for (int a = 0; a <= n; ++a)
          for (int b = 0; a + b <= n; ++b) counts.push_back({a, b, n - a - b});
      }
      for (const auto& c : counts) {
        RealVector f(outcomes);
        for (int i = 0; i < outcomes; ++i) f(i) = static_cast<Real>(c[static_cast<size_t>(i)]) / n;
        TypeClassProbability t = type_class_probability(p, f, n);
        ok &= expect(t.lower <= t.exact * (1 + 1e-12) + 1e-300, "lower bound fails", detail);
        ok &= expect(t.exact <= t.upper * (1 + 1e-12) + 1e-300, "upper bound fails", detail);
      }
    }
  }
  return ok;
}

// --- 9. broadcasting -------------------------------------------------------
bool crit_broadcast(std::string& detail) {
  bool ok = true;
  // Commuting-pair broadcaster marginals.
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<Real> ud(0.02, 0.98);
  for (int k = 0; k < 20; ++k) {
    Matrix m0 = Matrix::Zero(2, 2), m1 = Matrix::Zero(2, 2);
    Real a = ud(gen), b = ud(gen);
    m0(0, 0) = a; m0(1, 1) = 1 - a;
    m1(0, 0) = b; m1(1, 1) = 1 - b;
    DensityOperator r0 = make_density(m0), r1 = make_density(m1);
    Channel ch = build_commuting_broadcaster(r0, r1);
    for (const DensityOperator* rho : {&r0, &r1}) {
      DensityOperator joint = channel_apply(ch, *rho);
      Matrix ma = partial_trace_matrix(joint.matrix(), 2, 2, Keep::B);
      Matrix mb = partial_trace_matrix(joint.matrix(), 2, 2, Keep::A);
      ok &= expect((ma - rho->matrix()).norm() <= 1e-10 &&
                       (mb - rho->matrix()).norm() <= 1e-10,
                   "broadcaster marginal error", detail);
    }
  }
  // Fidelity monotonicity across 200 random channels.
  std::normal_distribution<Real> nd(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    DensityOperator r0 = random_density(2, 2, 20000 + 2 * static_cast<std::uint64_t>(k));
    DensityOperator r1 = random_density(2, 2, 20001 + 2 * static_cast<std::uint64_t>(k));
    int blocks = 2 + k % 3;
    Matrix stack(2 * blocks, 2);
    for (Eigen::Index i = 0; i < stack.rows(); ++i)
      for (Eigen::Index j = 0; j < 2; ++j) stack(i, j) = Complex(nd(gen), nd(gen));
    Matrix qmat = Matrix(Eigen::HouseholderQR<Matrix>(stack).householderQ()).leftCols(2);
    Channel ch;
    for (int bk = 0; bk < blocks; ++bk) ch.kraus.push_back(qmat.middleRows(2 * bk, 2));
    Real before = fidelity_q(r0, r1).f;
    Real after = fidelity_q(channel_apply(ch, r0), channel_apply(ch, r1)).f;
    ok &= expect(after >= before - 1e-9, "fidelity decreased under a channel", detail);
  }
  // Cloning feasibility only at the fidelity extremes.
  DensityOperator rho = random_density(2, 2, 41);
  ok &= expect(cloning_feasible(rho, rho), "identical states should clone", detail);
  Matrix e0 = Matrix::Zero(2, 2), e1 = Matrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  e1(1, 1) = 1.0;
  ok &= expect(cloning_feasible(make_density(e0), make_density(e1)),
               "orthogonal states should clone", detail);
  for (int k = 0; k < 50; ++k) {
    DensityOperator a = random_density(2, 2, 30000 + 2 * static_cast<std::uint64_t>(k));
    DensityOperator b = random_density(2, 2, 30001 + 2 * static_cast<std::uint64_t>(k));
    Real f = fidelity_q(a, b).f;
    if (f > 1e-6 && f < 1.0 - 1e-6)
      ok &= expect(!cloning_feasible(a, b), "nontrivial fidelity marked clonable", detail);
  }
  return ok;
}

// --- 10. solver hygiene -----------------------------------------------------
bool crit_solvers(std::string& detail) {
  bool ok = true;
  for (std::uint64_t s = 0; s < 20; ++s) {
    DensityOperator rho = seeded_full_rank(4, 40000 + s);
    DensityOperator sig = seeded_full_rank(4, 41000 + s);
    Matrix delta = sig.matrix() - rho.matrix();
    Matrix x = lowering_solve(rho.matrix(), delta);
    ok &= expect((rho.matrix() * x + x * rho.matrix() - 2.0 * delta).norm() <= 1e-10,
                 "lowering residual", detail);
  }
  std::mt19937_64 gen(17);
  std::normal_distribution<Real> nd(0.0, 1.0);
  auto rand2 = [&]() {
    Matrix m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = Complex(nd(gen), nd(gen));
    return m;
  };
  for (int k = 0; k < 50; ++k) {
    Matrix a = rand2(), x = rand2(), b = rand2();
    Vector lhs = vec(Matrix(a * x * b));
    Vector rhs = kron(b.transpose(), a) * vec(x);
    ok &= expect((lhs - rhs).norm() <= 1e-12 * std::max(1.0, lhs.norm()), "vec identity",
                 detail);
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    DensityOperator r0 = seeded_full_rank(2, 50000 + 2 * s, 5e-3);
    DensityOperator r1 = seeded_full_rank(2, 50001 + 2 * s, 5e-3);
    Real t = 0.1 + 0.8 * static_cast<Real>(s) / 19.0;
    BinaryChannel ch(r0, r1, t);
    ok &= expect(std::abs(upper_l_kron(ch) - upper_l(ch)) <= 1e-6,
                 "Kronecker L route off the closed form", detail);
    Matrix rho = ch.mean();
    Matrix l0 = lowering_solve(rho, r0.matrix());
    Matrix l1 = lowering_solve(rho, r1.matrix());
    ok &= expect((l0 * l1 - l1 * l0).norm() <= 1e-9, "lowering images do not commute", detail);
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"tradeoff-optimum phi_o(27.73deg) = 6.99deg", 1.0, crit_tradeoff},
      {"photon axes 67.50 / 54.54 / 49.94 deg", 5.0, crit_photon},
      {"two-sample error probabilities .04/.05 and .04/.005", 1.0, crit_cover},
      {"figure-channel bound orderings at 99 interior points", 60.0, crit_figures},
      {"fidelity oracle equivalence on 100 seeded pairs", 30.0, crit_fidelity},
      {"Kullback sandwich on 100 seeded pairs", 60.0, crit_kullback},
      {"Chernoff domination and exponent identities", 10.0, crit_chernoff},
      {"type-class bounds for all frequencies, n <= 12", 5.0, crit_typeclass},
      {"broadcasting marginals, monotonicity, clonability", 20.0, crit_broadcast},
      {"solver hygiene: lowering, vec, Kronecker L route", 20.0, crit_solvers},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    Real seconds = std::chrono::duration<Real>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criteria[i].time_limit_s) {
      ok = false;
      if (detail.empty()) detail = "time limit exceeded";
    }
    std::printf("[%s] %2zu. %s (%.2f s%s)\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), seconds,
                detail.empty() ? "" : (std::string("; ") + detail).c_str());
    if (!ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
