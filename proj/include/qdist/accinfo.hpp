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
// Accessible information of a binary channel and its bound family:
// lower bounds Q (Jozsa-Robb-Wootters) and M, upper bounds L, N, R, P, S
// (Holevo), plus the 2D projective optimum found numerically.

#ifndef QDIST_ACCINFO_HPP
#define QDIST_ACCINFO_HPP

#include <vector>

#include "qdist/kullback.hpp"

namespace qdist {

struct BinaryChannel {
  DensityOperator r0;
  DensityOperator r1;
  Real t;  // prior of r1

  BinaryChannel(DensityOperator a, DensityOperator b, Real prior);
  Eigen::Index dim() const { return r0.dim(); }
  Matrix mean() const { return (1.0 - t) * r0.matrix() + t * r1.matrix(); }
  Matrix delta() const { return r1.matrix() - r0.matrix(); }
  BinaryChannel at(Real prior) const { return BinaryChannel(r0, r1, prior); }
};

// Channel from Bloch data: |a| = radius_a along x, |b| = radius_b at `angle`
// from a in the xy plane (the parametrization used for all figure channels).
BinaryChannel bloch_channel(Real radius_a, Real radius_b, Real angle, Real t);

enum class BoundKind { Q, M, I_num, L, N, R, P, S, J, I_pure };
const char* bound_name(BoundKind k);

struct BoundCurve {
  BoundKind kind;
  std::vector<std::pair<Real, Real>> samples;  // (t, value in nats)
};

// J = H(p) - (1-t)H(p0) - t H(p1) for the POVM's outcome statistics.
Real mutual_info_q(const BinaryChannel& ch, const Povm& m);

Real von_neumann_entropy(const DensityOperator& rho);
Real holevo_s(const BinaryChannel& ch);

// Sub-entropy; the 2D path uses the closed Bloch form (regular at c = 0),
// higher dimensions jitter near-degenerate eigenvalues before the product form.
Real subentropy(const DensityOperator& rho);
Real jrw_q(const BinaryChannel& ch);

struct LowerM {
  Real value;
  Povm measurement;  // eigenbasis of the lowering image of Delta
};
LowerM lower_m(const BinaryChannel& ch);

// Upper bound L(t). Dimension 2 evaluates the closed Bloch form; other
// dimensions fall back to the Kronecker-solve route below.
Real upper_l(const BinaryChannel& ch);

// One-integration route: L(t) = -tr(rho(t) H(t)) + t tr(rho1 H(1)) with
// H(t) = integral of the lowering image of Delta, each node solved through
// the Kronecker-sum form and integrated by Simpson. Needs invertible states;
// the default grid holds 1e-7 accuracy down to eigenvalues of a few 1e-3.
Real upper_l_kron(const BinaryChannel& ch, int grid = 801);

// N''(t) = -tr(X^2) with X the lowering image of Delta under sqrt(rho(t)),
// integrated against the Dirichlet Green's function on a cosine-graded grid.
Real upper_n(const BinaryChannel& ch, int grid = 801);
Real upper_n_dd(const BinaryChannel& ch);  // the second derivative at ch.t

Real upper_r(const BinaryChannel& ch);

// Closed form for two pure states with squared overlap q.
Real exact_pure_i(Real q, Real t);
Real upper_p(const BinaryChannel& ch);

struct OptimalProjective {
  Real value;
  Bloch n;  // unit measurement vector
};
// Best orthogonal projection-valued measurement for a 2D channel, found by a
// grid over the signal plane plus golden refinement.
OptimalProjective optimal_i_2d(const BinaryChannel& ch, int grid = 720);

// Curves for Q, M, I_num (dim 2 only), L, N, R, P, S on a t grid of n points
// including the endpoints (endpoint values are 0 by continuity).
std::vector<BoundCurve> bounds_sweep(const BinaryChannel& ch, int t_grid);

}  // namespace qdist

#endif  // QDIST_ACCINFO_HPP
