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

#include "qdist/qdisc.hpp"

#include <algorithm>
#include <cmath>

#include "qdist/classical.hpp"

namespace qdist {

RealVector measure_probabilities(const DensityOperator& rho, const Povm& m) {
  if (m.dim() != rho.dim()) fail(Errc::DimMismatch, "POVM dimension");
  RealVector p(static_cast<Eigen::Index>(m.elements.size()));
  for (size_t b = 0; b < m.elements.size(); ++b) {
    Real v = (rho.matrix() * m.elements[b]).trace().real();
    // Trace noise of order 1e-16 must read as an exact zero, or square roots
    // of probabilities pick up 1e-8 artifacts.
    p(static_cast<Eigen::Index>(b)) = v < 1e-13 ? 0.0 : std::min(v, 1.0);
  }
  return p;
}

HelstromResult helstrom(const DensityOperator& r0, const DensityOperator& r1, Real pi0) {
  if (r0.dim() != r1.dim()) fail(Errc::DimMismatch, "state dimensions differ");
  if (pi0 < 0.0 || pi0 > 1.0) fail(Errc::BadInput, "prior out of [0,1]");
  Real pi1 = 1.0 - pi0;
  Matrix gamma = pi1 * r1.matrix() - pi0 * r0.matrix();
  EigenDecomposition d = eig_hermitian(gamma);
  Eigen::Index n = r0.dim();
  Matrix e0 = Matrix::Zero(n, n);
  Real pe = pi0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (d.eigenvalues(j) <= 0.0) {
      e0 += d.eigenvectors.col(j) * d.eigenvectors.col(j).adjoint();
      pe += d.eigenvalues(j);
    }
  }
  HelstromResult out;
  out.pe = std::min(std::max(pe, 0.0), std::min(pi0, pi1));
  out.gamma_eigs = d.eigenvalues;
  out.povm.elements = {e0, Matrix::Identity(n, n) - e0};
  return out;
}

HelstromResult helstrom_multicopy(const DensityOperator& r0, const DensityOperator& r1,
                                  Real pi0, int copies) {
  if (copies < 1) fail(Errc::BadInput, "copies must be >= 1");
  Real total = std::pow(static_cast<Real>(r0.dim()), copies);
  if (total > 64.0) fail(Errc::TooLarge, "multicopy dimension exceeds 64");
  DensityOperator u0 = r0, u1 = r1;
  for (int k = 1; k < copies; ++k) {
    u0 = tensor(u0, r0);
    u1 = tensor(u1, r1);
  }
  return helstrom(u0, u1, pi0);
}

PhotonSweepResult photon_angle_sweep(Real theta, int copies, int grid) {
  if (copies < 1 || copies > 4) fail(Errc::BadInput, "copies out of range");
  if (grid < 8) fail(Errc::BadGrid, "grid too coarse");
  auto pe_at = [&](Real phi) {
    RealVector p0(2), p1(2);
    p0 << std::cos(phi) * std::cos(phi), std::sin(phi) * std::sin(phi);
    p1 << std::cos(phi - theta) * std::cos(phi - theta),
        std::sin(phi - theta) * std::sin(phi - theta);
    return error_probability_iid(p0, p1, 0.5, copies);
  };
  const Real period = M_PI / 2.0;  // the axis, not its labeling, matters
  PhotonSweepResult out;
  out.pe_curve.reserve(static_cast<size_t>(grid));
  Real best = 2.0;
  int best_i = 0;
  for (int i = 0; i < grid; ++i) {
    Real phi = period * i / grid;
    Real pe = pe_at(phi);
    out.pe_curve.emplace_back(phi, pe);
    if (pe < best) { best = pe; best_i = i; }
  }
  auto refine = [&](int i) {
    Real lo = period * (i - 1) / grid, hi = period * (i + 1) / grid;
    Real phi = golden_min(pe_at, lo, hi, 200);
    return std::make_pair(std::fmod(phi + period, period), pe_at(phi));
  };
  auto [phi1, pe1] = refine(best_i);
  // The problem is symmetric under reflection about the bisector (composed
  // with outcome relabeling), so optima come in mirror pairs; report the
  // smaller representative.
  Real phi2 = std::fmod(theta - phi1 + 10.0 * period, period);
  Real pe2 = pe_at(phi2);
  Real best_phi = phi1;
  if (pe2 < pe1 - 1e-12 || (std::abs(pe2 - pe1) <= 1e-12 && phi2 < phi1)) best_phi = phi2;
  out.best_angle = best_phi;
  return out;
}

namespace {
// Support/null split of rho1: columns of s span the support, n the null space.
struct SupportSplit {
  Matrix s;           // D x r
  RealVector s_eigs;  // support eigenvalues of rho1
  Matrix n;           // D x (D - r)
};

SupportSplit split_support(const Matrix& rho1) {
  EigenDecomposition d = eig_hermitian(rho1);
  Eigen::Index dd = rho1.rows();
  std::vector<Eigen::Index> sup, nul;
  for (Eigen::Index i = 0; i < dd; ++i)
    (d.eigenvalues(i) > kTolNull ? sup : nul).push_back(i);
  SupportSplit out;
  out.s.resize(dd, static_cast<Eigen::Index>(sup.size()));
  out.s_eigs.resize(static_cast<Eigen::Index>(sup.size()));
  out.n.resize(dd, static_cast<Eigen::Index>(nul.size()));
  for (size_t k = 0; k < sup.size(); ++k) {
    out.s.col(static_cast<Eigen::Index>(k)) = d.eigenvectors.col(sup[k]);
    out.s_eigs(static_cast<Eigen::Index>(k)) = d.eigenvalues(sup[k]);
  }
  for (size_t k = 0; k < nul.size(); ++k)
    out.n.col(static_cast<Eigen::Index>(k)) = d.eigenvectors.col(nul[k]);
  return out;
}
}  // namespace

FidelityResult fidelity_q(const DensityOperator& r0, const DensityOperator& r1) {
  if (r0.dim() != r1.dim()) fail(Errc::DimMismatch, "state dimensions differ");
  Matrix s1 = sqrtm_psd(r1.matrix());
  Matrix core = s1 * r0.matrix() * s1;  // rho1^(1/2) rho0 rho1^(1/2)
  Matrix core_sqrt = sqrtm_psd(core);
  FidelityResult out;
  out.f = std::min(1.0, std::max(0.0, core_sqrt.trace().real()));
  out.bures = std::sqrt(std::max(0.0, 2.0 - 2.0 * out.f));
  out.u_c = polar_unitary(sqrtm_psd(r0.matrix()) * s1);

  SupportSplit sp = split_support(r1.matrix());
  Eigen::Index r = sp.s.cols();
  // M on the support block: R1^(-1/2) (Pi core_sqrt Pi) R1^(-1/2).
  RealVector inv_sqrt = sp.s_eigs.cwiseSqrt().cwiseInverse();
  Matrix m_block = hermitian_part(inv_sqrt.asDiagonal() *
                                  (sp.s.adjoint() * core_sqrt * sp.s) *
                                  inv_sqrt.asDiagonal());
  EigenDecomposition md = eig_hermitian(m_block);
  out.m_operator = sp.s * m_block * sp.s.adjoint();
  out.measurement.elements.clear();
  for (Eigen::Index k = 0; k < r; ++k) {
    Vector v = sp.s * md.eigenvectors.col(k);
    out.measurement.elements.push_back(v * v.adjoint());
  }
  if (sp.n.cols() > 0) out.measurement.elements.push_back(sp.n * sp.n.adjoint());
  return out;
}

Real fidelity_bloch_2d(const Bloch& a, const Bloch& b) {
  Real inner = 1.0 + a.dot(b) +
               std::sqrt(std::max(0.0, 1.0 - a.squaredNorm())) *
                   std::sqrt(std::max(0.0, 1.0 - b.squaredNorm()));
  return std::sqrt(std::max(0.0, 0.5 * inner));
}

Bloch braunstein_vector(const Bloch& a, const Bloch& b) {
  Real wa = 1.0 - a.squaredNorm(), wb = 1.0 - b.squaredNorm();
  if (wa < 1e-12 || wb < 1e-12)
    fail(Errc::PureStateVector, "n_B undefined for unit Bloch vectors");
  return a / std::sqrt(wa) - b / std::sqrt(wb);
}

MinOverG min_over_g(const DensityOperator& r0, const DensityOperator& r1) {
  if (r0.dim() != r1.dim()) fail(Errc::DimMismatch, "state dimensions differ");
  if (!r0.is_invertible() || !r1.is_invertible())
    fail(Errc::SingularState, "min_over_g needs invertible states");
  Matrix s0 = sqrtm_psd(r0.matrix());
  Matrix s0i = inv_sqrt_psd(r0.matrix());
  Matrix g = s0i * sqrtm_psd(s0 * r1.matrix() * s0) * s0i;
  Matrix gi = func_hermitian(g, [](Real x) { return 1.0 / x; });
  Real v0 = (r0.matrix() * g).trace().real();
  Real v1 = (r1.matrix() * gi).trace().real();
  return {std::sqrt(std::max(0.0, v0 * v1)), g};
}

Matrix geometric_mean(const MatrixRef& a, const MatrixRef& b, Real alpha) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::DimMismatch, "operand dimensions differ");
  if (alpha < 0.0 || alpha > 1.0) fail(Errc::BadAlpha, "alpha must lie in [0,1]");
  EigenDecomposition d = eig_hermitian(a);
  if (d.eigenvalues.minCoeff() <= kTolNull)
    fail(Errc::SingularBase, "geometric mean base not invertible");
  Matrix sa = sqrtm_psd(a);
  Matrix sai = inv_sqrt_psd(a);
  return sa * pow_psd(sai * hermitize(b) * sai, alpha) * sa;
}

}  // namespace qdist
