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

#include "qdist/tradeoff.hpp"

#include <cmath>

namespace qdist {

Povm KrausOperation::induced_povm() const {
  Povm m;
  Eigen::Index d = dim();
  for (const auto& group : groups) {
    Matrix e = Matrix::Zero(d, d);
    for (const Matrix& a : group) e += a.adjoint() * a;
    m.elements.push_back(e);
  }
  return m;
}

void validate_operation(const KrausOperation& op) {
  if (op.groups.empty()) fail(Errc::BadInput, "empty operation");
  Eigen::Index d = op.dim();
  if (d == 0) fail(Errc::BadInput, "empty Kraus group");
  Matrix acc = Matrix::Zero(d, d);
  for (const auto& group : op.groups)
    for (const Matrix& a : group) {
      if (a.cols() != d || a.rows() != d) fail(Errc::DimMismatch, "Kraus shapes differ");
      acc += a.adjoint() * a;
    }
  if ((acc - Matrix::Identity(d, d)).norm() > 1e-9)
    fail(Errc::BadInput, "Kraus completeness violated");
}

SelectiveResult apply_operation_selective(const KrausOperation& op,
                                          const DensityOperator& rho, int outcome) {
  validate_operation(op);
  if (outcome < 0 || outcome >= static_cast<int>(op.groups.size()))
    fail(Errc::BadInput, "outcome index out of range");
  if (op.dim() != rho.dim()) fail(Errc::DimMismatch, "operation dimension");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& a : op.groups[static_cast<size_t>(outcome)])
    out += a * rho.matrix() * a.adjoint();
  Real p = out.trace().real();
  if (p <= 1e-14) fail(Errc::ZeroProbabilityOutcome, "outcome probability vanishes");
  return {DensityOperator(out / p), p};
}

DensityOperator apply_operation(const KrausOperation& op, const DensityOperator& rho) {
  validate_operation(op);
  if (op.dim() != rho.dim()) fail(Errc::DimMismatch, "operation dimension");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const auto& group : op.groups)
    for (const Matrix& a : group) out += a * rho.matrix() * a.adjoint();
  return DensityOperator(out);
}

TradeoffPoint success_and_clonability(const KrausOperation& op, const DensityOperator& r0,
                                      const DensityOperator& r1) {
  validate_operation(op);
  if (op.groups.size() != 2) fail(Errc::BadGrouping, "need a guess-0/guess-1 grouping");
  if (r0.dim() != r1.dim() || r0.dim() != op.dim())
    fail(Errc::DimMismatch, "dimensions differ");
  Povm e = op.induced_povm();
  TradeoffPoint out;
  out.ps = 0.5 * (r0.matrix() * e.elements[0]).trace().real() +
           0.5 * (r1.matrix() * e.elements[1]).trace().real();
  DensityOperator out0 = apply_operation(op, r0);
  DensityOperator out1 = apply_operation(op, r1);
  Real f0 = fidelity_q(r0, out0).f;
  Real f1 = fidelity_q(r1, out1).f;
  out.c = 0.5 * (f0 * f0 + f1 * f1);
  return out;
}

namespace {
Vector real_ket_2d(Real angle) {
  Vector v(2);
  v << std::cos(angle), std::sin(angle);
  return v;
}
}  // namespace

KrausOperation restricted_example_operation(Real theta, Real phi) {
  Real xi = 0.5 * (M_PI / 2.0 - theta);
  // Measurement basis at angles 0 and pi/2; signals at xi and xi + theta;
  // resent kets rotated by phi from each signal toward the other.
  Vector b0 = real_ket_2d(0.0), b1 = real_ket_2d(M_PI / 2.0);
  Vector phi0 = real_ket_2d(xi + phi), phi1 = real_ket_2d(xi + theta - phi);
  KrausOperation op;
  op.groups = {{Matrix(phi0 * b0.adjoint())}, {Matrix(phi1 * b1.adjoint())}};
  return op;
}

TradeoffPoint restricted_example(Real theta, Real phi) {
  if (theta < 0.0 || theta > M_PI / 2.0) fail(Errc::BadInput, "theta out of [0, pi/2]");
  Real xi = 0.5 * (M_PI / 2.0 - theta);
  TradeoffPoint out;
  out.theta = theta;
  out.xi = xi;
  out.phi = phi;
  Real c0 = std::cos(xi), c1 = std::cos(xi + theta);
  out.c = c0 * c0 * std::cos(phi) * std::cos(phi) +
          c1 * c1 * std::cos(theta - phi) * std::cos(theta - phi);
  out.ps = 0.5 * (1.0 + std::sin(theta));  // Helstrom success for the pure pair
  return out;
}

Real phi_opt(Real theta) {
  if (theta <= 0.0 || theta >= M_PI / 2.0) return 0.0;
  Real s = std::sin(theta);
  // tan(2 phi) = (1-s) sin(2 theta) / ((1+s) + (1-s) cos(2 theta));
  // written multiplied through by (1-s) to stay finite at theta = pi/2.
  return 0.5 * std::atan2((1.0 - s) * std::sin(2.0 * theta),
                          (1.0 + s) + (1.0 - s) * std::cos(2.0 * theta));
}

Real loose_bound(const DensityOperator& r0, const DensityOperator& r1) {
  if (r0.dim() != r1.dim()) fail(Errc::DimMismatch, "state dimensions differ");
  RealVector w = eig_hermitian(r1.matrix() - r0.matrix()).eigenvalues;
  Real pos = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) > 0.0) pos += w(i);
  return 1.0 + 0.5 * (1.0 + pos);
}

}  // namespace qdist
