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
// Bounds on the quantum Kullback information K(rho0/rho1) =
// max over POVMs of the measured relative information.

#ifndef QDIST_KULLBACK_HPP
#define QDIST_KULLBACK_HPP

#include <map>

#include "qdist/qdisc.hpp"

namespace qdist {

struct KullbackBounds {
  // Lower bounds.
  Real k_f = std::numeric_limits<Real>::quiet_NaN();          // tr(rho0 ln L_rho1(rho0))
  Real k_b = std::numeric_limits<Real>::quiet_NaN();          // 2 tr(rho0 ln M)
  Real hiai_lower = std::numeric_limits<Real>::quiet_NaN();   // tr(rho0 ln rho1^-1/2 rho0 rho1^-1/2)
  Real jensen_lower = std::numeric_limits<Real>::quiet_NaN(); // -2 ln F
  // Upper bounds.
  Real k_umegaki = std::numeric_limits<Real>::quiet_NaN();    // tr(rho0 ln rho0 - rho0 ln rho1)
  Real ando_upper = std::numeric_limits<Real>::quiet_NaN();
  Real jensen_upper = std::numeric_limits<Real>::quiet_NaN(); // ln tr(rho0 L_rho1(rho0))
  std::map<Real, Real> hiai_upper;                            // p -> (1/p) tr(rho0 ln rho0^p/2 rho1^-p rho0^p/2)
  bool regularized = false;  // rho1 was mixed toward I/D to restore invertibility
};

// Classical relative information of the distributions a POVM induces.
Real k_measured(const DensityOperator& r0, const DensityOperator& r1, const Povm& m);

KullbackBounds k_lower_bounds(const DensityOperator& r0, const DensityOperator& r1,
                              bool allow_regularize = false);

KullbackBounds k_upper_bounds(const DensityOperator& r0, const DensityOperator& r1,
                              const std::vector<Real>& p_list = {0.5, 1.0, 2.0});

struct KParamResult {
  Real bound;  // tr(rho0 ln((1-alpha) X^2 + alpha X))
  Matrix x;    // PSD solution of alpha/2 (rho1 X + X rho1) + (1-alpha) X rho1 X = rho0
};

// Interpolating lower-bound family; alpha = 1 recovers k_f, alpha = 0 recovers
// k_b. Newton iteration with PSD projection and backtracking, 200-step cap.
KParamResult k_param(const DensityOperator& r0, const DensityOperator& r1, Real alpha);

// tr(weight ln(arg)) for PSD arg with the support convention: a zero eigenvalue
// contributes nothing when its weight vanishes, else SupportViolation.
Real weighted_log_trace(const MatrixRef& weight, const MatrixRef& arg);

}  // namespace qdist

#endif  // QDIST_KULLBACK_HPP
