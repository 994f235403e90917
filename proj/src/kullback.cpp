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

#include "qdist/kullback.hpp"

#include <cmath>

#include "qdist/classical.hpp"

namespace qdist {

namespace {
constexpr Real kRegEps = 1e-9;

DensityOperator regularize(const DensityOperator& r) {
  Eigen::Index d = r.dim();
  return DensityOperator((1.0 - kRegEps) * r.matrix() +
                         (kRegEps / static_cast<Real>(d)) * Matrix::Identity(d, d));
}

void check_dims(const DensityOperator& r0, const DensityOperator& r1) {
  if (r0.dim() != r1.dim()) fail(Errc::DimMismatch, "state dimensions differ");
}
}  // namespace

Real weighted_log_trace(const MatrixRef& weight, const MatrixRef& arg) {
  // Bound arguments are Hermitian by construction but can carry amplified
  // roundoff from near-singular factors; drop the anti-Hermitian noise.
  EigenDecomposition d = eig_hermitian(hermitian_part(arg));
  Real out = 0.0;
  for (Eigen::Index i = 0; i < d.eigenvalues.size(); ++i) {
    Real lam = d.eigenvalues(i);
    Real w = (d.eigenvectors.col(i).adjoint() * weight * d.eigenvectors.col(i))(0, 0).real();
    if (lam <= kTolNull) {
      if (w > 1e-8)
        fail(Errc::SupportViolation, "weight " + std::to_string(w) + " on null eigenvalue");
      continue;
    }
    out += w * std::log(lam);
  }
  return out;
}

Real k_measured(const DensityOperator& r0, const DensityOperator& r1, const Povm& m) {
  check_dims(r0, r1);
  RealVector p0 = measure_probabilities(r0, m);
  RealVector p1 = measure_probabilities(r1, m);
  Real out = 0.0;
  for (Eigen::Index b = 0; b < p0.size(); ++b) {
    if (p0(b) <= 1e-14) continue;
    if (p1(b) <= 1e-14) return std::numeric_limits<Real>::infinity();
    out += p0(b) * std::log(p0(b) / p1(b));
  }
  return std::max(out, 0.0);
}

KullbackBounds k_lower_bounds(const DensityOperator& r0, const DensityOperator& r1,
                              bool allow_regularize) {
  check_dims(r0, r1);
  KullbackBounds out;
  DensityOperator s1 = r1;
  if (!r1.is_invertible()) {
    if (!allow_regularize) fail(Errc::SingularState, "rho1 is singular");
    s1 = regularize(r1);
    out.regularized = true;
  }
  out.k_f = weighted_log_trace(r0.matrix(), lowering_solve(s1.matrix(), r0.matrix()));
  FidelityResult fid = fidelity_q(r0, s1);
  out.k_b = 2.0 * weighted_log_trace(r0.matrix(), fid.m_operator);
  Matrix is1 = inv_sqrt_psd(s1.matrix());
  out.hiai_lower = weighted_log_trace(r0.matrix(), is1 * r0.matrix() * is1);
  out.jensen_lower = -2.0 * std::log(std::max(fidelity_q(r0, r1).f, 1e-300));
  return out;
}

KullbackBounds k_upper_bounds(const DensityOperator& r0, const DensityOperator& r1,
                              const std::vector<Real>& p_list) {
  check_dims(r0, r1);
  if (!r1.is_invertible()) fail(Errc::SingularState, "rho1 is singular");
  KullbackBounds out;
  // Umegaki needs supp(rho0) within supp(rho1); the weighted log enforces it.
  out.k_umegaki = weighted_log_trace(r0.matrix(), r0.matrix()) -
                  weighted_log_trace(r0.matrix(), r1.matrix());
  Matrix is1 = inv_sqrt_psd(r1.matrix());
  Matrix w = is1 * r0.matrix() * is1;
  // tr(rho1 W ln W); x ln x extends continuously by 0.
  Matrix wlnw = func_hermitian(w, [](Real x) { return xlnx(std::max(x, 0.0)); });
  out.ando_upper = (r1.matrix() * wlnw).trace().real();
  for (Real p : p_list) {
    if (p <= 0.0) fail(Errc::BadInput, "Hiai exponent must be positive");
    Matrix hp = pow_psd(r0.matrix(), p / 2.0);
    out.hiai_upper[p] =
        weighted_log_trace(r0.matrix(), hp * pow_psd(r1.matrix(), -p) * hp) / p;
  }
  out.jensen_upper =
      std::log((r0.matrix() * lowering_solve(r1.matrix(), r0.matrix())).trace().real());
  return out;
}

KParamResult k_param(const DensityOperator& r0, const DensityOperator& r1, Real alpha) {
  check_dims(r0, r1);
  if (alpha < 0.0 || alpha > 1.0) fail(Errc::BadAlpha, "alpha must lie in [0,1]");
  if (!r0.is_invertible() || !r1.is_invertible())
    fail(Errc::SingularState, "k_param needs invertible states");
  const Matrix& rho0 = r0.matrix();
  const Matrix& rho1 = r1.matrix();

  Matrix x = alpha >= 0.5 ? lowering_solve(rho1, rho0) : fidelity_q(r0, r1).m_operator;
  auto residual = [&](const Matrix& xx) -> Matrix {
    return 0.5 * alpha * (rho1 * xx + xx * rho1) + (1.0 - alpha) * (xx * rho1 * xx) - rho0;
  };
  auto project_psd = [&](const Matrix& xx) -> Matrix {
    return func_hermitian(xx, [](Real v) { return std::max(v, 0.0); });
  };

  Matrix res = residual(x);
  Real rnorm = res.norm();
  bool done = rnorm < 1e-12;
  for (int it = 0; it < 200 && !done; ++it) {
    // Linearized step: A H + H A^dagger = -R with A = alpha/2 rho1 + (1-alpha) X rho1.
    Matrix a = 0.5 * alpha * rho1 + (1.0 - alpha) * (x * rho1);
    Matrix h = sylvester_solve(a, a.adjoint(), -res);
    h = 0.5 * (h + h.adjoint());
    Real step = 1.0;
    Matrix xn = x;
    Matrix rn = res;
    Real rn_norm = rnorm;
    for (int bt = 0; bt < 40; ++bt) {
      xn = project_psd(x + step * h);
      rn = residual(xn);
      rn_norm = rn.norm();
      if (rn_norm < rnorm) break;
      step *= 0.5;
    }
    if (rn_norm >= rnorm && rnorm > 1e-8)
      fail(Errc::NoConvergence, "Newton stalled at residual " + std::to_string(rnorm));
    x = xn;
    res = rn;
    rnorm = rn_norm;
    done = rnorm < 1e-12;
  }
  if (rnorm > 1e-8) fail(Errc::NoConvergence, "residual " + std::to_string(rnorm));

  KParamResult out;
  out.x = x;
  Matrix arg = (1.0 - alpha) * (x * x) + alpha * x;
  out.bound = weighted_log_trace(rho0, 0.5 * (arg + arg.adjoint()));
  return out;
}

}  // namespace qdist
