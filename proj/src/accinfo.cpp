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

#include "qdist/accinfo.hpp"

#include <algorithm>
#include <cmath>

#include "qdist/classical.hpp"

namespace qdist {

namespace {
// Projective qubit measurement along the unit vector n.
Povm projective_2d(const Bloch& n) {
  Bloch u = n.normalized();
  DensityOperator plus = bloch_to_density(u);
  Povm m;
  m.elements = {plus.matrix(), Matrix::Identity(2, 2) - plus.matrix()};
  return m;
}

Real subentropy_from_bloch_norm(Real c) {
  if (c < 1e-6) return std::log(2.0) - 0.5;  // series limit, error O(c^2)
  Real out = -(1.0 + c) * (1.0 + c) * std::log((1.0 + c) / 2.0);
  if (c < 1.0) out += (1.0 - c) * (1.0 - c) * std::log((1.0 - c) / 2.0);
  return out / (4.0 * c);
}
}  // namespace

BinaryChannel::BinaryChannel(DensityOperator a, DensityOperator b, Real prior)
    : r0(std::move(a)), r1(std::move(b)), t(prior) {
  if (r0.dim() != r1.dim()) fail(Errc::DimMismatch, "signal state dimensions differ");
  if (t < 0.0 || t > 1.0) fail(Errc::BadInput, "prior out of [0,1]");
}

BinaryChannel bloch_channel(Real radius_a, Real radius_b, Real angle, Real t) {
  Bloch a(radius_a, 0.0, 0.0);
  Bloch b(radius_b * std::cos(angle), radius_b * std::sin(angle), 0.0);
  return BinaryChannel(bloch_to_density(a), bloch_to_density(b), t);
}

const char* bound_name(BoundKind k) {
  switch (k) {
    case BoundKind::Q: return "Q";
    case BoundKind::M: return "M";
    case BoundKind::I_num: return "I_num";
    case BoundKind::L: return "L";
    case BoundKind::N: return "N";
    case BoundKind::R: return "R";
    case BoundKind::P: return "P";
    case BoundKind::S: return "S";
    case BoundKind::J: return "J";
    case BoundKind::I_pure: return "I_pure";
  }
  return "?";
}

Real mutual_info_q(const BinaryChannel& ch, const Povm& m) {
  RealVector p0 = measure_probabilities(ch.r0, m);
  RealVector p1 = measure_probabilities(ch.r1, m);
  return mutual_information(p0, p1, ch.t);
}

Real von_neumann_entropy(const DensityOperator& rho) {
  RealVector w = eig_hermitian(rho.matrix()).eigenvalues;
  Real s = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) s -= xlnx(std::max(w(i), 0.0));
  return s;
}

Real holevo_s(const BinaryChannel& ch) {
  Real s = von_neumann_entropy(DensityOperator(ch.mean())) -
           (1.0 - ch.t) * von_neumann_entropy(ch.r0) - ch.t * von_neumann_entropy(ch.r1);
  return std::max(s, 0.0);
}

Real subentropy(const DensityOperator& rho) {
  RealVector w = eig_hermitian(rho.matrix()).eigenvalues;
  if (rho.dim() == 2) {
    Real c = std::abs(w(1) - w(0));
    return std::max(0.0, subentropy_from_bloch_norm(c));
  }
  // Split eigenvalue clusters tighter than 1e-6 by +-1e-7 steps; the product
  // form is singular at exact degeneracy.
  std::vector<Real> lam(w.data(), w.data() + w.size());
  std::sort(lam.begin(), lam.end());
  for (size_t i = 0; i + 1 < lam.size();) {
    size_t j = i + 1;
    while (j < lam.size() && lam[j] - lam[j - 1] < 1e-6) ++j;
    if (j - i > 1) {
      Real mid = 0.5 * (static_cast<Real>(j - i) - 1.0);
      for (size_t k = i; k < j; ++k) lam[k] += 2e-7 * (static_cast<Real>(k - i) - mid);
    }
    i = j;
  }
  Real q = 0.0;
  for (size_t j = 0; j < lam.size(); ++j) {
    if (lam[j] <= kTolNull) continue;
    Real prod = 1.0;
    for (size_t k = 0; k < lam.size(); ++k)
      if (k != j) prod *= lam[j] / (lam[j] - lam[k]);
    q -= prod * lam[j] * std::log(lam[j]);
  }
  return std::max(q, 0.0);
}

Real jrw_q(const BinaryChannel& ch) {
  return subentropy(DensityOperator(ch.mean())) - (1.0 - ch.t) * subentropy(ch.r0) -
         ch.t * subentropy(ch.r1);
}

LowerM lower_m(const BinaryChannel& ch) {
  LowerM out;
  Eigen::Index d = ch.dim();
  if (ch.t <= 0.0 || ch.t >= 1.0) {
    out.value = 0.0;
    out.measurement.elements = {Matrix::Identity(d, d)};
    return out;
  }
  Matrix x = lowering_solve(ch.mean(), ch.delta());
  EigenDecomposition ed = eig_hermitian(x);
  out.measurement.elements.clear();
  for (Eigen::Index k = 0; k < d; ++k) {
    Vector v = ed.eigenvectors.col(k);
    out.measurement.elements.push_back(v * v.adjoint());
  }
  // M(t) = tr((1-t) rho0 ln(1 - t X) + t rho1 ln(1 + (1-t) X)); the logs act
  // on the lowering images of rho0 and rho1, which share X's eigenbasis.
  Matrix id = Matrix::Identity(d, d);
  Real v0 = weighted_log_trace(ch.r0.matrix(), id - ch.t * x);
  Real v1 = weighted_log_trace(ch.r1.matrix(), id + (1.0 - ch.t) * x);
  out.value = std::max(0.0, (1.0 - ch.t) * v0 + ch.t * v1);
  return out;
}

Real exact_pure_i(Real q, Real t) {
  if (q < 0.0 || q > 1.0) fail(Errc::BadInput, "overlap out of [0,1]");
  if (t <= 0.0 || t >= 1.0) return 0.0;
  Real n = std::sqrt(std::max(0.0, 1.0 - 4.0 * t * (1.0 - t) * q));
  if (n < 1e-15) {  // q = 1, t = 1/2: identical pure states
    return 0.0;
  }
  Real pa = xlny_ratio(n + 1.0 - 2.0 * t * q, 1.0 + n, 2.0 * (1.0 - t)) +
            xlny_ratio(n - 1.0 + 2.0 * t * q, 1.0 - n, 2.0 * (1.0 - t));
  Real pb = xlny_ratio(n + 1.0 - 2.0 * (1.0 - t) * q, 1.0 + n, 2.0 * t) +
            xlny_ratio(n - 1.0 + 2.0 * (1.0 - t) * q, 1.0 - n, 2.0 * t);
  return std::max(0.0, ((1.0 - t) * pa + t * pb) / (2.0 * n));
}

Real upper_p(const BinaryChannel& ch) {
  Real f = fidelity_q(ch.r0, ch.r1).f;
  return exact_pure_i(f * f, ch.t);
}

Real upper_r(const BinaryChannel& ch) {
  if (ch.delta().norm() < 1e-13) return 0.0;
  Matrix rho = ch.mean();
  Real out = 0.0;
  if (ch.t < 1.0) {
    Real v = (ch.r0.matrix() * lowering_solve(rho, ch.r0.matrix())).trace().real();
    out += (1.0 - ch.t) * std::log(v);
  }
  if (ch.t > 0.0) {
    Real v = (ch.r1.matrix() * lowering_solve(rho, ch.r1.matrix())).trace().real();
    out += ch.t * std::log(v);
  }
  return std::max(out, 0.0);
}

namespace {
struct BlochPair {
  Bloch a, b;
};

BlochPair bloch_pair(const BinaryChannel& ch) {
  return {density_to_bloch(ch.r0), density_to_bloch(ch.r1)};
}

Real upper_l_bloch(const Bloch& a, const Bloch& b, Real t) {
  Bloch d = b - a;
  Real dd = d.squaredNorm();
  if (dd < 1e-26) return 0.0;
  Real delta2 = std::pow(1.0 - a.dot(b), 2) - (1.0 - a.squaredNorm()) * (1.0 - b.squaredNorm());
  Real delta = std::sqrt(std::max(delta2, 0.0));
  Bloch c = a + t * d;
  Real la = xlnx(delta - a.dot(d)) + xlnx(delta + a.dot(d));
  Real lb = xlnx(delta - b.dot(d)) + xlnx(delta + b.dot(d)) - la;
  Real lc = -xlnx(delta - c.dot(d)) - xlnx(delta + c.dot(d));
  return std::max(0.0, delta / (2.0 * dd) * (lc + t * lb + la));
}
}  // namespace

Real upper_l(const BinaryChannel& ch) {
  if (ch.dim() == 2) {
    BlochPair p = bloch_pair(ch);
    return upper_l_bloch(p.a, p.b, ch.t);
  }
  return upper_l_kron(ch);
}

Real upper_l_kron(const BinaryChannel& ch, int grid) {
  if (grid < 3 || grid % 2 == 0) fail(Errc::BadGrid, "Simpson needs an odd grid");
  if (!ch.r0.is_invertible() || !ch.r1.is_invertible())
    fail(Errc::SingularState, "Kronecker route needs invertible signal states");
  if (ch.delta().norm() < 1e-13) return 0.0;
  Matrix delta = ch.delta();
  Eigen::Index d = ch.dim();
  auto lowering_at = [&](Real s) -> Matrix {
    Matrix rho = (1.0 - s) * ch.r0.matrix() + s * ch.r1.matrix();
    return kron_sum_solve(rho, rho, 2.0 * delta);
  };
  auto h_of = [&](Real upto) -> Matrix {
    Matrix acc = Matrix::Zero(d, d);
    if (upto <= 0.0) return acc;
    Real h = upto / (grid - 1);
    acc = lowering_at(0.0) + lowering_at(upto);
    for (int i = 1; i < grid - 1; ++i)
      acc += (i % 2 == 1 ? 4.0 : 2.0) * lowering_at(i * h);
    return acc * h / 3.0;
  };
  Matrix ht = h_of(ch.t);
  Matrix h1 = h_of(1.0);
  Real c1 = (ch.r1.matrix() * h1).trace().real();
  Matrix rho_t = ch.mean();
  return std::max(0.0, -(rho_t * ht).trace().real() + c1 * ch.t);
}

Real upper_n_dd(const BinaryChannel& ch) {
  Matrix rho = ch.mean();
  Matrix x = lowering_solve(sqrtm_psd(rho), ch.delta());
  return -(x * x).trace().real();
}

Real upper_n(const BinaryChannel& ch, int grid) {
  if (grid < 3 || grid % 2 == 0) fail(Errc::BadGrid, "Simpson needs an odd grid");
  Real t = ch.t;
  if (t <= 0.0 || t >= 1.0) return 0.0;
  if (ch.delta().norm() < 1e-13) return 0.0;
  // N = -Integral G(t,s) N''(s) ds with the Dirichlet kernel
  // G(t,s) = min(s,t)(1 - max(s,t)); the substitution s = (1 - cos(pi u))/2
  // clusters nodes at the endpoints where N'' may have integrable 1/s poles.
  auto integrand = [&](Real u) -> Real {
    Real s = 0.5 * (1.0 - std::cos(M_PI * u));
    if (s <= 0.0 || s >= 1.0) return 0.0;
    Real ds = 0.5 * M_PI * std::sin(M_PI * u);
    Real g = s < t ? s * (1.0 - t) : t * (1.0 - s);
    return g * upper_n_dd(ch.at(s)) * ds;
  };
  Real val = -integrate_scalar(integrand, 0.0, 1.0, grid);
  return std::max(val, 0.0);
}

OptimalProjective optimal_i_2d(const BinaryChannel& ch, int grid) {
  if (ch.dim() != 2) fail(Errc::DimMismatch, "projective search is 2D only");
  if (grid < 8) fail(Errc::BadGrid, "grid too coarse");
  BlochPair p = bloch_pair(ch);
  // Orthonormal frame of the signal plane; degenerate configurations fall
  // back to fixed axes so the search stays deterministic.
  Bloch e1 = p.a.norm() > 1e-12 ? Bloch(p.a.normalized()) : Bloch(1, 0, 0);
  Bloch bp = p.b - p.b.dot(e1) * e1;
  Bloch e2 = bp.norm() > 1e-10 ? Bloch(bp.normalized())
                               : (std::abs(e1.x()) < 0.9 ? e1.cross(Bloch(1, 0, 0)).normalized()
                                                         : e1.cross(Bloch(0, 1, 0)).normalized());
  auto value_at = [&](Real phi) {
    Bloch n = std::cos(phi) * e1 + std::sin(phi) * e2;
    return mutual_info_q(ch, projective_2d(n));
  };
  Real best = -1.0;
  int best_i = 0;
  for (int i = 0; i < grid; ++i) {
    Real v = value_at(M_PI * i / grid);
    if (v > best) { best = v; best_i = i; }
  }
  Real lo = M_PI * (best_i - 1) / grid, hi = M_PI * (best_i + 1) / grid;
  Real phi = golden_min([&](Real x) { return -value_at(x); }, lo, hi, 200);
  OptimalProjective out;
  out.value = value_at(phi);
  out.n = (std::cos(phi) * e1 + std::sin(phi) * e2).normalized();
  // Orient along the Helstrom side: n.(b - a) >= 0.
  if (out.n.dot(p.b - p.a) < 0.0) out.n = -out.n;
  return out;
}

std::vector<BoundCurve> bounds_sweep(const BinaryChannel& ch, int t_grid) {
  if (t_grid < 3) fail(Errc::BadGrid, "t grid too coarse");
  const bool is2d = ch.dim() == 2;
  std::vector<BoundKind> kinds = {BoundKind::Q, BoundKind::M, BoundKind::L, BoundKind::N,
                                  BoundKind::R, BoundKind::P, BoundKind::S};
  if (is2d) kinds.insert(kinds.begin() + 2, BoundKind::I_num);

  // N''(s) does not depend on t; share one cosine-graded sample across rows.
  const int ngrid = 801;
  std::vector<Real> ndd(static_cast<size_t>(ngrid));
  std::vector<Real> svals(static_cast<size_t>(ngrid)), dsvals(static_cast<size_t>(ngrid));
  bool flat = ch.delta().norm() < 1e-13;
  for (int i = 0; i < ngrid; ++i) {
    Real u = static_cast<Real>(i) / (ngrid - 1);
    Real s = 0.5 * (1.0 - std::cos(M_PI * u));
    svals[static_cast<size_t>(i)] = s;
    dsvals[static_cast<size_t>(i)] = 0.5 * M_PI * std::sin(M_PI * u);
    ndd[static_cast<size_t>(i)] =
        (s <= 0.0 || s >= 1.0 || flat) ? 0.0 : upper_n_dd(ch.at(s));
  }
  auto n_of_t = [&](Real t) -> Real {
    if (t <= 0.0 || t >= 1.0 || flat) return 0.0;
    Real acc = 0.0;
    Real h = 1.0 / (ngrid - 1);
    for (int i = 0; i < ngrid; ++i) {
      Real s = svals[static_cast<size_t>(i)];
      Real g = s < t ? s * (1.0 - t) : t * (1.0 - s);
      Real w = (i == 0 || i == ngrid - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      acc += w * g * ndd[static_cast<size_t>(i)] * dsvals[static_cast<size_t>(i)];
    }
    return std::max(0.0, -acc * h / 3.0);
  };

  std::vector<BoundCurve> out;
  for (BoundKind k : kinds) out.push_back({k, {}});
  for (int i = 0; i < t_grid; ++i) {
    Real t = static_cast<Real>(i) / (t_grid - 1);
    bool interior = t > 0.0 && t < 1.0;
    BinaryChannel c = ch.at(t);
    for (BoundCurve& curve : out) {
      Real v = 0.0;
      if (interior) {
        switch (curve.kind) {
          case BoundKind::Q: v = jrw_q(c); break;
          case BoundKind::M: v = lower_m(c).value; break;
          case BoundKind::I_num: v = optimal_i_2d(c).value; break;
          case BoundKind::L: v = upper_l(c); break;
          case BoundKind::N: v = n_of_t(t); break;
          case BoundKind::R: v = upper_r(c); break;
          case BoundKind::P: v = upper_p(c); break;
          case BoundKind::S: v = holevo_s(c); break;
          default: break;
        }
      }
      curve.samples.emplace_back(t, v);
    }
  }
  return out;
}

}  // namespace qdist
