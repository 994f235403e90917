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
// Quantum minimum-error discrimination (Helstrom) and the quantum fidelity
// with the measurement that attains it.

#ifndef QDIST_QDISC_HPP
#define QDIST_QDISC_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qdist/states.hpp"

namespace qdist {

struct HelstromResult {
  Real pe;                // pi0 + sum of nonpositive eigenvalues of Gamma
  RealVector gamma_eigs;  // spectrum of pi1 rho1 - pi0 rho0, ascending
  Povm povm;              // {E0, E1}; zero eigenvalues routed to outcome 0
};

HelstromResult helstrom(const DensityOperator& r0, const DensityOperator& r1, Real pi0);

// Helstrom on rho^(x)m; dim^m must not exceed 64.
HelstromResult helstrom_multicopy(const DensityOperator& r0, const DensityOperator& r1,
                                  Real pi0, int copies);

struct PhotonSweepResult {
  Real best_angle;                          // radians from horizontal, in [0, pi/2)
  std::vector<std::pair<Real, Real>> pe_curve;  // (angle, Bayes error)
};

// Equal-prior linear polarizations at 0 and theta; the same yes/no polarizer
// angle is used on each of m copies and the Bayes decision acts on all
// outcomes. Ties between mirror-symmetric optima resolve to the smaller angle.
PhotonSweepResult photon_angle_sweep(Real theta, int copies, int grid);

struct FidelityResult {
  Real f;
  Real bures;          // sqrt(2 - 2f)
  Matrix m_operator;   // likelihood-ratio operator; zero on null(rho1)
  Povm measurement;    // eigenbasis of M (+ null projector when rho1 is singular)
  Matrix u_c;          // unitary from the polar step
};

// f = tr sqrt(rho1^(1/2) rho0 rho1^(1/2)). The returned POVM attains
// sum_b sqrt(p0 p1) = f; singular rho1 is handled by splitting off the null
// projector and building M on the support block.
FidelityResult fidelity_q(const DensityOperator& r0, const DensityOperator& r1);

// sqrt((1 + a.b + sqrt(1-a^2) sqrt(1-b^2)) / 2).
Real fidelity_bloch_2d(const Bloch& a, const Bloch& b);

// Optimal-measurement Bloch vector a/sqrt(1-a^2) - b/sqrt(1-b^2); undefined
// (PureStateVector) when either vector has unit norm.
Bloch braunstein_vector(const Bloch& a, const Bloch& b);

struct MinOverG {
  Real value;  // sqrt(tr(rho0 g) tr(rho1 g^-1)) at the optimum, equals f
  Matrix g;
};

MinOverG min_over_g(const DensityOperator& r0, const DensityOperator& r1);

// a #_alpha b = a^(1/2) (a^(-1/2) b a^(-1/2))^alpha a^(1/2); alpha = 1/2 is
// the geometric mean.
Matrix geometric_mean(const MatrixRef& a, const MatrixRef& b, Real alpha = 0.5);

// Outcome probabilities tr(rho E_b) of a POVM, clamped into [0,1].
RealVector measure_probabilities(const DensityOperator& rho, const Povm& m);

}  // namespace qdist

#endif  // QDIST_QDISC_HPP
