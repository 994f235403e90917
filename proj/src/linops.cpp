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

#include "qdist/linops.hpp"

#include <cmath>

namespace qdist {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonHermitianInput: return "NonHermitianInput";
    case Errc::SingularInput: return "SingularInput";
    case Errc::UnsolvableLyapunov: return "UnsolvableLyapunov";
    case Errc::SingularKroneckerSum: return "SingularKroneckerSum";
    case Errc::BadGrid: return "BadGrid";
    case Errc::NotPSD: return "NotPSD";
    case Errc::BadTrace: return "BadTrace";
    case Errc::NonHermitian: return "NonHermitian";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::BadRank: return "BadRank";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadAlpha: return "BadAlpha";
    case Errc::NonIntegralCounts: return "NonIntegralCounts";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::SingularState: return "SingularState";
    case Errc::SingularBase: return "SingularBase";
    case Errc::PureStateVector: return "PureStateVector";
    case Errc::SupportViolation: return "SupportViolation";
    case Errc::SingularDelta: return "SingularDelta";
    case Errc::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
    case Errc::BadGrouping: return "BadGrouping";
    case Errc::NonCommuting: return "NonCommuting";
    case Errc::BadFunctional: return "BadFunctional";
    case Errc::BadInput: return "BadInput";
  }
  return "UnknownError";
}

Matrix hermitize(const MatrixRef& a) {
  if (a.rows() != a.cols()) fail(Errc::DimMismatch, "matrix not square");
  Matrix h = 0.5 * (a + a.adjoint());
  Real resid = (a - h).norm();
  if (resid > kTolHermInput)
    fail(Errc::NonHermitianInput, "symmetrization residual " + std::to_string(resid));
  return h;
}

Matrix hermitian_part(const MatrixRef& a) {
  if (a.rows() != a.cols()) fail(Errc::DimMismatch, "matrix not square");
  return 0.5 * (a + a.adjoint());
}

EigenDecomposition eig_hermitian(const MatrixRef& a) {
  Matrix h = hermitize(a);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) fail(Errc::NoConvergence, "eigensolver failed");
  EigenDecomposition d{es.eigenvalues(), es.eigenvectors()};
  // Phase fixing: first component above 1e-8 * max|v_i| made real positive.
  for (Eigen::Index k = 0; k < d.eigenvectors.cols(); ++k) {
    auto col = d.eigenvectors.col(k);
    Real big = col.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < col.size(); ++i) {
      if (std::abs(col(i)) > 1e-8 * big) {
        Complex phase = col(i) / std::abs(col(i));
        d.eigenvectors.col(k) /= phase;
        break;
      }
    }
  }
  return d;
}

Matrix func_hermitian(const MatrixRef& a, const std::function<Real(Real)>& f,
                      bool support_only) {
  EigenDecomposition d = eig_hermitian(a);
  RealVector fw(d.eigenvalues.size());
  for (Eigen::Index i = 0; i < fw.size(); ++i) {
    Real lam = d.eigenvalues(i);
    if (support_only && std::abs(lam) <= kTolNull) {
      fw(i) = 0.0;
      continue;
    }
    Real v = f(lam);
    if (!std::isfinite(v))
      fail(Errc::SingularInput, "f not finite at eigenvalue " + std::to_string(lam));
    fw(i) = v;
  }
  return d.eigenvectors * fw.asDiagonal() * d.eigenvectors.adjoint();
}

Matrix sqrtm_psd(const MatrixRef& a) {
  // Eigenvalue noise of order +-1e-16 must not pass through the root (it
  // would surface as 1e-8 errors); genuine small eigenvalues, e.g. from
  // 1e-9-regularized states, stay above this cutoff and are kept.
  return func_hermitian(a, [](Real x) { return x > 1e-14 ? std::sqrt(x) : 0.0; });
}

Matrix log_support(const MatrixRef& a) {
  return func_hermitian(a, [](Real x) { return std::log(x); }, /*support_only=*/true);
}

Matrix pow_psd(const MatrixRef& a, Real p) {
  if (p >= 0.0)
    return func_hermitian(a, [p](Real x) { return std::pow(std::max(x, 0.0), p); });
  return func_hermitian(a, [p](Real x) { return std::pow(x, p); }, /*support_only=*/true);
}

Matrix inv_sqrt_psd(const MatrixRef& a) { return pow_psd(a, -0.5); }

Matrix lowering_solve(const MatrixRef& rho, const MatrixRef& a) {
  if (rho.rows() != a.rows() || rho.cols() != a.cols())
    fail(Errc::DimMismatch, "lowering_solve dimension mismatch");
  EigenDecomposition d = eig_hermitian(rho);
  Matrix at = d.eigenvectors.adjoint() * hermitize(a) * d.eigenvectors;
  Matrix x = Matrix::Zero(a.rows(), a.cols());
  for (Eigen::Index j = 0; j < a.rows(); ++j) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      Real s = d.eigenvalues(j) + d.eigenvalues(k);
      if (s > kTolNull) {
        x(j, k) = 2.0 * at(j, k) / s;
      } else if (std::abs(at(j, k)) > 1e-8) {
        fail(Errc::UnsolvableLyapunov,
             "right-hand side not supported on supp(rho): |a_jk| = " +
                 std::to_string(std::abs(at(j, k))));
      }
    }
  }
  Matrix out = d.eigenvectors * x * d.eigenvectors.adjoint();
  return 0.5 * (out + out.adjoint());
}

Matrix kron(const MatrixRef& a, const MatrixRef& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector vec(const MatrixRef& a) {
  Vector v(a.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) v(k++) = a(i, j);
  return v;
}

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) fail(Errc::DimMismatch, "unvec size mismatch");
  Matrix a(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = v(k++);
  return a;
}

Matrix sylvester_solve(const MatrixRef& a, const MatrixRef& b, const MatrixRef& c) {
  Eigen::Index n = a.rows();
  if (b.rows() != n || c.rows() != n || a.cols() != n || b.cols() != n || c.cols() != n)
    fail(Errc::DimMismatch, "sylvester_solve expects equal square dimensions");
  Matrix big = kron(Matrix::Identity(n, n), a) + kron(b.transpose(), Matrix::Identity(n, n));
  Vector x = big.partialPivLu().solve(vec(c));
  return unvec(x, n, n);
}

Matrix kron_sum_solve(const MatrixRef& b, const MatrixRef& c, const MatrixRef& d) {
  Matrix bh = hermitize(b);
  Matrix ch = hermitize(c);
  RealVector wb = eig_hermitian(bh).eigenvalues;
  RealVector wc = eig_hermitian(ch).eigenvalues;  // spectrum of c equals spectrum of c*
  for (Eigen::Index j = 0; j < wb.size(); ++j)
    for (Eigen::Index k = 0; k < wc.size(); ++k)
      if (std::abs(wb(j) + wc(k)) <= kTolNull)
        fail(Errc::SingularKroneckerSum, "eigenvalue sum vanishes");
  return sylvester_solve(bh, ch.adjoint(), d);
}

Matrix polar_unitary(const MatrixRef& o) {
  if (o.rows() != o.cols()) fail(Errc::DimMismatch, "polar_unitary expects square input");
  Eigen::JacobiSVD<Matrix> svd(o, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // o = W S V^dagger, so U = V W^dagger satisfies U o = V S V^dagger = sqrt(o^dagger o).
  return svd.matrixV() * svd.matrixU().adjoint();
}

Real integrate_scalar(const std::function<Real(Real)>& f, Real lo, Real hi, int n) {
  if (n < 3 || n % 2 == 0) fail(Errc::BadGrid, "Simpson needs an odd grid of >= 3 points");
  Real h = (hi - lo) / (n - 1);
  Real acc = f(lo) + f(hi);
  for (int i = 1; i < n - 1; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f(lo + i * h);
  return acc * h / 3.0;
}

Real golden_min(const std::function<Real(Real)>& f, Real lo, Real hi, int iters) {
  const Real g = (std::sqrt(5.0) - 1.0) / 2.0;
  Real x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  Real f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters && hi - lo > 1e-15; ++i) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - g * (hi - lo); f1 = f(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + g * (hi - lo); f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qdist
