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

#include "qdist/broadcast.hpp"

namespace qdist {

void validate_channel(const Channel& ch) {
  if (ch.kraus.empty()) fail(Errc::BadInput, "empty Kraus set");
  Eigen::Index din = ch.kraus[0].cols(), dout = ch.kraus[0].rows();
  Matrix acc = Matrix::Zero(din, din);
  for (const Matrix& a : ch.kraus) {
    if (a.cols() != din || a.rows() != dout) fail(Errc::DimMismatch, "Kraus shapes differ");
    acc += a.adjoint() * a;
  }
  if ((acc - Matrix::Identity(din, din)).norm() > 1e-9)
    fail(Errc::BadInput, "Kraus completeness violated");
}

DensityOperator channel_apply(const Channel& ch, const DensityOperator& rho) {
  validate_channel(ch);
  if (ch.dim_in() != rho.dim()) fail(Errc::DimMismatch, "channel input dimension");
  Matrix out = Matrix::Zero(ch.dim_out(), ch.dim_out());
  for (const Matrix& a : ch.kraus) out += a * rho.matrix() * a.adjoint();
  return DensityOperator(out);
}

bool can_broadcast(const DensityOperator& r0, const DensityOperator& r1) {
  if (r0.dim() != r1.dim()) fail(Errc::DimMismatch, "state dimensions differ");
  Matrix comm = r0.matrix() * r1.matrix() - r1.matrix() * r0.matrix();
  return comm.norm() <= 1e-9;
}

Matrix simultaneous_eigenbasis(const MatrixRef& a, const MatrixRef& b) {
  EigenDecomposition da = eig_hermitian(a);
  Eigen::Index d = a.rows();
  Matrix v = da.eigenvectors;
  // Rotate inside each degenerate eigenspace of a to diagonalize b there.
  Eigen::Index i = 0;
  while (i < d) {
    Eigen::Index j = i + 1;
    while (j < d && da.eigenvalues(j) - da.eigenvalues(i) < 1e-8) ++j;
    if (j - i > 1) {
      Matrix block = v.middleCols(i, j - i);
      EigenDecomposition db = eig_hermitian(block.adjoint() * b * block);
      v.middleCols(i, j - i) = block * db.eigenvectors;
    }
    i = j;
  }
  return v;
}

Channel build_commuting_broadcaster(const DensityOperator& r0, const DensityOperator& r1) {
  if (!can_broadcast(r0, r1))
    fail(Errc::NonCommuting, "signal states do not commute");
  Eigen::Index d = r0.dim();
  Matrix v = simultaneous_eigenbasis(r0.matrix(), r1.matrix());
  // Single Kraus operator |b>|b><b| over the common eigenbasis: the isometry
  // that clones each simultaneous eigenstate.
  Matrix a = Matrix::Zero(d * d, d);
  for (Eigen::Index b = 0; b < d; ++b) {
    Vector vb = v.col(b);
    Vector vv = Vector::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) vv(i * d + j) = vb(i) * vb(j);
    a += vv * vb.adjoint();
  }
  Channel ch;
  ch.kraus = {a};
  validate_channel(ch);
  return ch;
}

bool cloning_feasible(const DensityOperator& r0, const DensityOperator& r1) {
  Real f = fidelity_q(r0, r1).f;
  return f <= 1e-9 || f >= 1.0 - 1e-9;
}

}  // namespace qdist
