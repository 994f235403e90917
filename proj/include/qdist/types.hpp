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

#ifndef QDIST_TYPES_HPP
#define QDIST_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qdist {

using Real = double;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Bloch = Eigen::Vector3d;

using MatrixRef = Eigen::Ref<const Matrix>;
using RealVectorRef = Eigen::Ref<const RealVector>;

// Numerical null-space threshold used throughout (double precision, dim <= 32).
inline constexpr Real kTolNull = 1e-10;
// Hermiticity is enforced by symmetrization; inputs further off than this are rejected.
inline constexpr Real kTolHermInput = 1e-8;

enum class Errc {
  NonHermitianInput,
  SingularInput,
  UnsolvableLyapunov,
  SingularKroneckerSum,
  BadGrid,
  NotPSD,
  BadTrace,
  NonHermitian,
  DimMismatch,
  BadRank,
  LengthMismatch,
  TooLarge,
  BadAlpha,
  NonIntegralCounts,
  NoConvergence,
  SingularState,
  SingularBase,
  PureStateVector,
  SupportViolation,
  SingularDelta,
  ZeroProbabilityOutcome,
  BadGrouping,
  NonCommuting,
  BadFunctional,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// x ln x with the 0 ln 0 = 0 convention.
inline Real xlnx(Real x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// coef * ln(num/den), treated as 0 when the coefficient vanishes.
inline Real xlny_ratio(Real coef, Real num, Real den) {
  if (std::abs(coef) < 1e-15) return 0.0;
  return coef * std::log(num / den);
}

}  // namespace qdist

#endif  // QDIST_TYPES_HPP
