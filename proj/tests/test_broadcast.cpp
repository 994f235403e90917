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

#include <doctest.h>

#include <cmath>

#include "qdist/broadcast.hpp"
#include "test_helpers.hpp"

using namespace qdist;
using namespace qdist_test;

namespace {
// k Kraus blocks from a QR-orthonormalized stack of Ginibre samples.
Channel random_channel(Eigen::Index d, int k, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<Real> nd(0.0, 1.0);
  Matrix stack(d * k, d);
  for (Eigen::Index i = 0; i < d * k; ++i)
    for (Eigen::Index j = 0; j < d; ++j) stack(i, j) = Complex(nd(gen), nd(gen));
  Eigen::HouseholderQR<Matrix> qr(stack);
  Matrix q = Matrix(qr.householderQ()).leftCols(d);
  Channel ch;
  for (int b = 0; b < k; ++b) ch.kraus.push_back(q.middleRows(b * d, d));
  return ch;
}

DensityOperator diag_state(Real a, Real b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return make_density(m);
}
}  // namespace

TEST_CASE("channel application") {
  DensityOperator rho = random_density(2, 2, 3);
  Channel identity;
  identity.kraus = {Matrix::Identity(2, 2)};
  CHECK((channel_apply(identity, rho).matrix() - rho.matrix()).norm() <= 1e-14);

  // Full depolarization through the D^2 unitary mixing channel.
  Channel depolarize;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix a = Matrix::Zero(2, 2);
      a(i, j) = 1.0 / std::sqrt(2.0);
      depolarize.kraus.push_back(a);
    }
  CHECK((channel_apply(depolarize, rho).matrix() - 0.5 * Matrix::Identity(2, 2)).norm() <=
        1e-12);

  for (std::uint64_t s = 0; s < 10; ++s) {
    Channel ch = random_channel(2, 3, 40 + s);
    CHECK(channel_apply(ch, rho).matrix().trace().real() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  Channel bad;
  bad.kraus = {0.5 * Matrix::Identity(2, 2)};
  CHECK_THROWS_AS(channel_apply(bad, rho), Error);
}

TEST_CASE("commutation decides broadcastability") {
  CHECK(can_broadcast(diag_state(0.25, 0.75), diag_state(0.5, 0.5)));
  DensityOperator x = bloch_to_density(Bloch(1, 0, 0));
  DensityOperator z = bloch_to_density(Bloch(0, 0, 1));
  CHECK_FALSE(can_broadcast(x, z));
  int noncommuting = 0;
  for (std::uint64_t s = 0; s < 50; ++s)
    if (!can_broadcast(random_density(2, 2, 100 + 2 * s), random_density(2, 2, 101 + 2 * s)))
      ++noncommuting;
  CHECK(noncommuting == 50);  // random pairs commute with probability zero
}

TEST_CASE("commuting broadcaster reproduces both marginals") {
  auto check_pair = [](const DensityOperator& r0, const DensityOperator& r1) {
    Channel ch = build_commuting_broadcaster(r0, r1);
    for (const DensityOperator* rho : {&r0, &r1}) {
      DensityOperator joint = channel_apply(ch, *rho);
      Matrix ma = partial_trace_matrix(joint.matrix(), rho->dim(), rho->dim(), Keep::B);
      Matrix mb = partial_trace_matrix(joint.matrix(), rho->dim(), rho->dim(), Keep::A);
      CHECK((ma - rho->matrix()).norm() <= 1e-10);
      CHECK((mb - rho->matrix()).norm() <= 1e-10);
    }
  };
  check_pair(diag_state(0.25, 0.75), diag_state(0.5, 0.5));
  DensityOperator rho = random_density(2, 2, 7);
  check_pair(rho, rho);

  // Orthogonal pure states are cloned outright: the joint output is a product.
  DensityOperator e0 = diag_state(1.0, 0.0), e1 = diag_state(0.0, 1.0);
  Channel ch = build_commuting_broadcaster(e0, e1);
  DensityOperator joint = channel_apply(ch, e0);
  CHECK((joint.matrix() - kron(e0.matrix(), e0.matrix())).norm() <= 1e-12);

  // A commuting pair with degenerate factors, in dimension 3.
  Matrix m0 = Matrix::Zero(3, 3), m1 = Matrix::Zero(3, 3);
  m0(0, 0) = 0.5; m0(1, 1) = 0.5; m0(2, 2) = 0.0;
  m1(0, 0) = 0.2; m1(1, 1) = 0.3; m1(2, 2) = 0.5;
  check_pair(make_density(m0), make_density(m1));

  CHECK_THROWS_AS(
      build_commuting_broadcaster(bloch_to_density(Bloch(1, 0, 0)),
                                  bloch_to_density(Bloch(0, 0, 1))),
      Error);
}

TEST_CASE("broadcast outputs preserve the fidelity chain") {
  DensityOperator r0 = diag_state(0.25, 0.75);
  DensityOperator r1 = diag_state(0.6, 0.4);
  Real f = fidelity_q(r0, r1).f;
  Channel ch = build_commuting_broadcaster(r0, r1);
  DensityOperator t0 = channel_apply(ch, r0);
  DensityOperator t1 = channel_apply(ch, r1);
  CHECK(std::abs(fidelity_q(t0, t1).f - f) <= 1e-8);
  // F_A / F_B representations through the optimal single-system POVM.
  FidelityResult fr = fidelity_q(r0, r1);
  Real fa = 0.0, fb = 0.0;
  for (const Matrix& e : fr.measurement.elements) {
    Matrix ea = kron(e, Matrix::Identity(2, 2));
    Matrix eb = kron(Matrix::Identity(2, 2), e);
    fa += std::sqrt(std::max(0.0, (t0.matrix() * ea).trace().real()) *
                    std::max(0.0, (t1.matrix() * ea).trace().real()));
    fb += std::sqrt(std::max(0.0, (t0.matrix() * eb).trace().real()) *
                    std::max(0.0, (t1.matrix() * eb).trace().real()));
  }
  CHECK(std::abs(fa - f) <= 1e-8);
  CHECK(std::abs(fb - f) <= 1e-8);
}

TEST_CASE("cloning feasibility is the fidelity dichotomy") {
  DensityOperator rho = random_density(2, 2, 9);
  CHECK(cloning_feasible(rho, rho));
  CHECK(cloning_feasible(diag_state(1, 0), diag_state(0, 1)));
  DensityOperator a = bloch_to_density(Bloch(0.9, 0, 0));
  DensityOperator b = bloch_to_density(Bloch(0.7, 0.3, 0));
  CHECK(fidelity_q(a, b).f > 0.1);
  CHECK(fidelity_q(a, b).f < 0.999);
  CHECK_FALSE(cloning_feasible(a, b));
}

TEST_CASE("fidelity never decreases under channels") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    DensityOperator r0 = random_density(2, 2, 1000 + 3 * s);
    DensityOperator r1 = random_density(2, 2, 1001 + 3 * s);
    Channel ch = random_channel(2, 2 + static_cast<int>(s % 3), 1002 + 3 * s);
    Real before = fidelity_q(r0, r1).f;
    Real after = fidelity_q(channel_apply(ch, r0), channel_apply(ch, r1)).f;
    CHECK(after >= before - 1e-9);
  }
}

TEST_CASE("attaching an ancilla leaves fidelity unchanged") {
  DensityOperator r0 = random_density(2, 2, 2001);
  DensityOperator r1 = random_density(2, 2, 2002);
  DensityOperator sigma = random_density(3, 2, 2003);
  Real f = fidelity_q(r0, r1).f;
  CHECK(std::abs(fidelity_q(tensor(r0, sigma), tensor(r1, sigma)).f - f) <= 1e-10);
}
