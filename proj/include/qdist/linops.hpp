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
// Dense Hermitian linear algebra: spectral calculus, the lowering
// (anticommutator) solver rho X + X rho = 2 A, Kronecker-sum / Sylvester
// solves via vec'ing, polar decomposition, and composite Simpson quadrature.

#ifndef QDIST_LINOPS_HPP
#define QDIST_LINOPS_HPP

#include <functional>

#include "qdist/types.hpp"

namespace qdist {

struct EigenDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // unitary, columns match eigenvalues
};

// (a + a^dagger)/2. Rejects inputs whose anti-Hermitian part exceeds kTolHermInput.
Matrix hermitize(const MatrixRef& a);

// (a + a^dagger)/2 without the residual check, for matrices Hermitian by
// construction whose ill-conditioned assembly amplifies roundoff.
Matrix hermitian_part(const MatrixRef& a);

// Spectral decomposition of a Hermitian matrix. Eigenvalues ascending; each
// eigenvector is phase-fixed so its first significant component is real
// positive, which keeps degenerate subspaces reproducible downstream.
EigenDecomposition eig_hermitian(const MatrixRef& a);

// V f(Lambda) V^dagger. With support_only, eigenvalues |lambda| <= kTolNull map to 0
// instead of through f. Without it, a non-finite f(lambda) raises SingularInput.
Matrix func_hermitian(const MatrixRef& a, const std::function<Real(Real)>& f,
                      bool support_only = false);

Matrix sqrtm_psd(const MatrixRef& a);
Matrix log_support(const MatrixRef& a);
Matrix pow_psd(const MatrixRef& a, Real p);          // p < 0 uses the support pseudo-inverse
Matrix inv_sqrt_psd(const MatrixRef& a);             // support pseudo-inverse square root

// Solves rho X + X rho = 2 a on the support of rho; X vanishes on the null
// subspace. Requires a to vanish (within tolerance) on null-null blocks.
Matrix lowering_solve(const MatrixRef& rho, const MatrixRef& a);

Matrix kron(const MatrixRef& a, const MatrixRef& b);

// Column-stacking vec and its inverse.
Vector vec(const MatrixRef& a);
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

// Solves b X + X c^dagger = d for Hermitian b, c through
// (I (x) b + c^T (x) I) vec(X) = vec(d).
Matrix kron_sum_solve(const MatrixRef& b, const MatrixRef& c, const MatrixRef& d);

// General Sylvester solve A X + X B = C by the same vec route (no spectral
// precondition check; the caller owns conditioning).
Matrix sylvester_solve(const MatrixRef& a, const MatrixRef& b, const MatrixRef& c);

// Unitary U with U o = sqrt(o^dagger o); kernel directions completed by the SVD.
Matrix polar_unitary(const MatrixRef& o);

// Composite Simpson on n grid points (n odd, >= 3).
Real integrate_scalar(const std::function<Real(Real)>& f, Real lo, Real hi, int n);

// Golden-section minimizer; deterministic, fixed iteration count.
Real golden_min(const std::function<Real(Real)>& f, Real lo, Real hi, int iters = 200);

}  // namespace qdist

#endif  // QDIST_LINOPS_HPP
