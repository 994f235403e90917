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
// Density operators, POVMs, Bloch vectors, purifications.

#ifndef QDIST_STATES_HPP
#define QDIST_STATES_HPP

#include <cstdint>
#include <vector>

#include "qdist/linops.hpp"

namespace qdist {

// Validated density operator: Hermitian, PSD within kTolNull, unit trace.
class DensityOperator {
 public:
  explicit DensityOperator(const MatrixRef& m);  // validates, symmetrizes, renormalizes
  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Real purity() const { return (m_ * m_).trace().real(); }
  bool is_invertible(Real tol = kTolNull) const;

 private:
  Matrix m_;
};

DensityOperator make_density(const MatrixRef& m);

struct Povm {
  std::vector<Matrix> elements;
  Eigen::Index dim() const { return elements.empty() ? 0 : elements[0].rows(); }
};

// PSD elements summing to the identity (1e-10 / 1e-9 tolerances).
void validate_povm(const Povm& p);

// rho = (1 + r.sigma)/2 and its inverse; density -> Bloch requires dim 2.
DensityOperator bloch_to_density(const Bloch& r);
Bloch density_to_bloch(const DensityOperator& rho);

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

enum class Keep { A, B };
DensityOperator partial_trace(const DensityOperator& ab, Eigen::Index dim_a,
                              Eigen::Index dim_b, Keep keep);
Matrix partial_trace_matrix(const MatrixRef& ab, Eigen::Index dim_a, Eigen::Index dim_b,
                            Keep keep);

struct Purification {
  Vector psi0;  // on the doubled space, dim D^2
  Vector psi1;
  Real q;  // |<psi0|psi1>|^2 — the squared fidelity
};

// Purifications whose overlap attains the fidelity: psi_s = (W_s (x) 1)|Omega>
// with W_0 = sqrt(rho_0) and W_1 = sqrt(rho_1) U, U from the polar
// decomposition of sqrt(rho_0) sqrt(rho_1).
Purification purify_pair(const DensityOperator& r0, const DensityOperator& r1);

// Ginibre sampling: G a dim x rank complex Gaussian, rho = G G^dagger / tr.
DensityOperator random_density(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed);

}  // namespace qdist

#endif  // QDIST_STATES_HPP
