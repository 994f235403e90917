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
// Kraus channels, the commuting-pair broadcaster, and clonability checks.

#ifndef QDIST_BROADCAST_HPP
#define QDIST_BROADCAST_HPP

#include "qdist/qdisc.hpp"

namespace qdist {

struct Channel {
  std::vector<Matrix> kraus;  // dim_in -> dim_out, sum A^dagger A = 1 within 1e-9
  Eigen::Index dim_in() const { return kraus.empty() ? 0 : kraus[0].cols(); }
  Eigen::Index dim_out() const { return kraus.empty() ? 0 : kraus[0].rows(); }
};

void validate_channel(const Channel& ch);

DensityOperator channel_apply(const Channel& ch, const DensityOperator& rho);

// True iff the Frobenius norm of [rho0, rho1] is within 1e-9.
bool can_broadcast(const DensityOperator& r0, const DensityOperator& r1);

// Channel from D to D^2 cloning the simultaneous eigenbasis; both marginals of
// the output reproduce the input for commuting signal states.
Channel build_commuting_broadcaster(const DensityOperator& r0, const DensityOperator& r1);

// True iff F(rho0, rho1) is 0 or 1 within 1e-9 (orthogonal or identical).
bool cloning_feasible(const DensityOperator& r0, const DensityOperator& r1);

// Common eigenbasis of two commuting Hermitian matrices (blockwise within
// degenerate eigenspaces of the first).
Matrix simultaneous_eigenbasis(const MatrixRef& a, const MatrixRef& b);

}  // namespace qdist

#endif  // QDIST_BROADCAST_HPP
