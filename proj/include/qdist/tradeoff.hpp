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
// Inference-disturbance tradeoff: Kraus operations grouped by outcome,
// success probability vs clonability, and the restricted two-state example
// with its least-disturbing rotation angle.

#ifndef QDIST_TRADEOFF_HPP
#define QDIST_TRADEOFF_HPP

#include "qdist/qdisc.hpp"

namespace qdist {

struct KrausOperation {
  // groups[b] holds the operators A_bi of outcome b.
  std::vector<std::vector<Matrix>> groups;
  Eigen::Index dim() const {
    return groups.empty() || groups[0].empty() ? 0 : groups[0][0].cols();
  }
  Povm induced_povm() const;  // E_b = sum_i A_bi^dagger A_bi
};

void validate_operation(const KrausOperation& op);

struct SelectiveResult {
  DensityOperator state;
  Real prob;
};

// Outcome-conditioned update; prob below 1e-14 raises ZeroProbabilityOutcome.
SelectiveResult apply_operation_selective(const KrausOperation& op,
                                          const DensityOperator& rho, int outcome);
// Nonselective update sum over all outcomes.
DensityOperator apply_operation(const KrausOperation& op, const DensityOperator& rho);

struct TradeoffPoint {
  Real ps;  // success probability, equal priors
  Real c;   // clonability: mean squared fidelity with the nonselective outputs
  Real theta = 0.0, xi = 0.0, phi = 0.0;
};

// Two-outcome operations only (guess-0 / guess-1), equal priors.
TradeoffPoint success_and_clonability(const KrausOperation& op, const DensityOperator& r0,
                                      const DensityOperator& r1);

// Pure states theta apart, measured in the straddling basis (xi = (pi/2-theta)/2)
// and resent rotated by phi toward each other:
//   c = cos^2(xi) cos^2(phi) + cos^2(xi+theta) cos^2(theta-phi).
TradeoffPoint restricted_example(Real theta, Real phi);

// The Kraus operators A_b = |phi_b><b| realizing restricted_example.
KrausOperation restricted_example_operation(Real theta, Real phi);

// Least-disturbing resend angle: maximizes c at fixed theta.
Real phi_opt(Real theta);

// 1 + (1 + sum of positive eigenvalues of rho1 - rho0)/2; bounds ps + c.
Real loose_bound(const DensityOperator& r0, const DensityOperator& r1);

}  // namespace qdist

#endif  // QDIST_TRADEOFF_HPP
