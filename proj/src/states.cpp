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

#include "qdist/states.hpp"

#include <random>

namespace qdist {

namespace {
const Matrix& pauli(int i) {
  static const Matrix sx = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  static const Matrix sy = (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const Matrix sz = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  return i == 0 ? sx : (i == 1 ? sy : sz);
}
}  // namespace

DensityOperator::DensityOperator(const MatrixRef& m) {
  Matrix h;
  try {
    h = hermitize(m);
  } catch (const Error& e) {
    fail(Errc::NonHermitian, e.what());
  }
  Real tr = h.trace().real();
  if (std::abs(tr - 1.0) > 1e-6) fail(Errc::BadTrace, "trace = " + std::to_string(tr));
  h /= tr;
  RealVector w = eig_hermitian(h).eigenvalues;
  if (w.minCoeff() < -kTolNull)
    fail(Errc::NotPSD, "eigenvalue " + std::to_string(w.minCoeff()));
  m_ = h;
}

DensityOperator make_density(const MatrixRef& m) { return DensityOperator(m); }

bool DensityOperator::is_invertible(Real tol) const {
  return eig_hermitian(m_).eigenvalues.minCoeff() > tol;
}

void validate_povm(const Povm& p) {
  if (p.elements.empty()) fail(Errc::BadInput, "empty POVM");
  Eigen::Index d = p.elements[0].rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& e : p.elements) {
    if (e.rows() != d || e.cols() != d) fail(Errc::DimMismatch, "POVM element dimension");
    Matrix h = hermitize(e);
    if (eig_hermitian(h).eigenvalues.minCoeff() < -kTolNull)
      fail(Errc::NotPSD, "POVM element not PSD");
    sum += h;
  }
  if ((sum - Matrix::Identity(d, d)).norm() > 1e-9)
    fail(Errc::BadInput, "POVM does not sum to identity");
}

DensityOperator bloch_to_density(const Bloch& r) {
  if (r.norm() > 1.0 + 1e-12) fail(Errc::BadInput, "Bloch norm > 1");
  Matrix m = Matrix::Identity(2, 2);
  for (int i = 0; i < 3; ++i) m += r(i) * pauli(i);
  return DensityOperator(0.5 * m);
}

Bloch density_to_bloch(const DensityOperator& rho) {
  if (rho.dim() != 2) fail(Errc::DimMismatch, "Bloch conversion needs dim 2");
  Bloch r;
  for (int i = 0; i < 3; ++i) r(i) = (rho.matrix() * pauli(i)).trace().real();
  return r;
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(kron(a.matrix(), b.matrix()));
}

Matrix partial_trace_matrix(const MatrixRef& ab, Eigen::Index da, Eigen::Index db,
                            Keep keep) {
  if (ab.rows() != da * db) fail(Errc::DimMismatch, "partial trace dimensions");
  if (keep == Keep::A) {
    Matrix out = Matrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index j = 0; j < da; ++j)
        for (Eigen::Index k = 0; k < db; ++k) out(i, j) += ab(i * db + k, j * db + k);
    return out;
  }
  Matrix out = Matrix::Zero(db, db);
  for (Eigen::Index i = 0; i < db; ++i)
    for (Eigen::Index j = 0; j < db; ++j)
      for (Eigen::Index k = 0; k < da; ++k) out(i, j) += ab(k * db + i, k * db + j);
  return out;
}

DensityOperator partial_trace(const DensityOperator& ab, Eigen::Index da, Eigen::Index db,
                              Keep keep) {
  return DensityOperator(partial_trace_matrix(ab.matrix(), da, db, keep));
}

Purification purify_pair(const DensityOperator& r0, const DensityOperator& r1) {
  if (r0.dim() != r1.dim()) fail(Errc::DimMismatch, "purify_pair dimensions");
  Eigen::Index d = r0.dim();
  Matrix s0 = sqrtm_psd(r0.matrix());
  Matrix s1 = sqrtm_psd(r1.matrix());
  Matrix u = polar_unitary(s0 * s1);  // tr(U s0 s1) attains the fidelity
  Matrix w0 = s0;
  Matrix w1 = s1 * u;
  // psi_s = vec of W_s^T: component (i,j) of |i>|j> carries (W_s)_{ij}.
  Purification p;
  p.psi0 = Vector(d * d);
  p.psi1 = Vector(d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      p.psi0(i * d + j) = w0(i, j);
      p.psi1(i * d + j) = w1(i, j);
    }
  Complex ov = p.psi0.dot(p.psi1);
  p.q = std::norm(ov);
  return p;
}

DensityOperator random_density(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed) {
  if (rank < 1 || rank > dim) fail(Errc::BadRank, "rank out of range");
  std::mt19937_64 gen(seed);
  std::normal_distribution<Real> nd(0.0, 1.0);
  Matrix g(dim, rank);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < rank; ++j) g(i, j) = Complex(nd(gen), nd(gen));
  Matrix rho = g * g.adjoint();
  return DensityOperator(rho / rho.trace().real());
}

}  // namespace qdist
