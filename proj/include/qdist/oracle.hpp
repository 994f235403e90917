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
// Brute-force measurement optimization used as ground truth for the closed
// forms: projective sweeps on the Bloch sphere and rank-1 POVM searches.

#ifndef QDIST_ORACLE_HPP
#define QDIST_ORACLE_HPP

#include <cstdint>

#include "qdist/accinfo.hpp"

namespace qdist {

enum class FunctionalKind { MinOverlap, MinError, MaxKl, MaxMutual };

struct Functional {
  FunctionalKind kind;
  DensityOperator r0;
  DensityOperator r1;
  Real pi0 = 0.5;  // prior of r0 (MinError / MaxMutual)

  Functional(FunctionalKind k, DensityOperator a, DensityOperator b, Real prior = 0.5);
  // Objective value on a POVM, already signed so smaller is better.
  Real cost(const Povm& m) const;
  bool minimizing() const {
    return kind == FunctionalKind::MinOverlap || kind == FunctionalKind::MinError;
  }
  // The user-facing value (un-negated for max functionals).
  Real value_from_cost(Real c) const { return minimizing() ? c : -c; }
};

struct ProjectiveOptimum {
  Real value;
  Bloch n;
};

// Great-circle grid over the signal plane with golden refinement; refinement
// never worsens the incumbent.
ProjectiveOptimum optimize_projective_2d(const Functional& f, int grid = 720,
                                         int refine_iters = 60);

struct PovmOptimum {
  Real value;
  Povm povm;
};

// Rank-1 POVMs from columns of a D x n co-isometry V (V V^dagger = 1), reached
// by completeness-projecting an unconstrained complex matrix; refined by
// Nelder-Mead over seeded random restarts. Restarts evaluate concurrently and
// reduce deterministically.
PovmOptimum optimize_povm(const Functional& f, int outcomes, std::uint64_t seed,
                          int restarts = 16);

// Exact enumeration of the n-sample Bayes error over outcome strings; the
// independent counterpart of classical::error_probability_iid.
Real multicopy_error_exact(const RealVectorRef& p0, const RealVectorRef& p1, Real pi0, int n);

}  // namespace qdist

#endif  // QDIST_ORACLE_HPP
