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
// Distinguishability measures on finite probability distributions: Bayes
// error, Chernoff bound, Renyi overlaps, relative and mutual information,
// and type-class probabilities. All informations are in nats.

#ifndef QDIST_CLASSICAL_HPP
#define QDIST_CLASSICAL_HPP

#include <vector>

#include "qdist/types.hpp"

namespace qdist {

// Validates p >= 0, sum = 1 within 1e-12 (after renormalizing a drift < 1e-9).
RealVector make_distribution(const RealVectorRef& p);

struct BayesDecision {
  Real pe;
  std::vector<int> decision;  // outcome -> hypothesis, ties broken toward 0
};

// pe = sum_b min(pi0 p0(b), pi1 p1(b)).
BayesDecision error_probability(const RealVectorRef& p0, const RealVectorRef& p1, Real pi0);

// Bayes error over n-fold product distributions, grouped by outcome counts.
Real error_probability_iid(const RealVectorRef& p0, const RealVectorRef& p1, Real pi0, int n);

struct ChernoffResult {
  Real lambda;      // min_alpha F_alpha
  Real alpha_star;  // NaN when the supports are disjoint
  Real exponent;    // -ln lambda
  Real k0, k1;      // K(p_alpha* / p0), K(p_alpha* / p1)
  bool disjoint;
};

ChernoffResult chernoff(const RealVectorRef& p0, const RealVectorRef& p1);

// Closed-form optimal alpha for two-outcome distributions {q,1-q} vs {r,1-r}.
Real chernoff_alpha_two_outcome(Real q, Real r);

// F_alpha = sum p0^alpha p1^(1-alpha), 0 < alpha < 1.
Real renyi_overlap(const RealVectorRef& p0, const RealVectorRef& p1, Real alpha);

struct ClassicalFidelity {
  Real f;      // Bhattacharyya overlap
  Real angle;  // Fisher-metric geodesic distance arccos(f)
};
ClassicalFidelity fidelity_classical(const RealVectorRef& p0, const RealVectorRef& p1);

// +infinity when supp(p0) is not contained in supp(p1).
Real kl_divergence(const RealVectorRef& p0, const RealVectorRef& p1);

Real shannon_entropy(const RealVectorRef& p);

// H(p) - (1-t)H(p0) - tH(p1) for p = (1-t)p0 + t p1.
Real mutual_information(const RealVectorRef& p0, const RealVectorRef& p1, Real t);

struct TypeClassProbability {
  Real exact;  // multinomial(n; n f) prod p^(n f)
  Real lower;  // (n+1)^-B exp(-n K(f/p))
  Real upper;  // exp(-n K(f/p))
};
TypeClassProbability type_class_probability(const RealVectorRef& p_true,
                                            const RealVectorRef& freq, int n);

}  // namespace qdist

#endif  // QDIST_CLASSICAL_HPP
