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

#include "qdist/classical.hpp"

#include <cmath>
#include <limits>

#include "qdist/linops.hpp"

namespace qdist {

namespace {
constexpr Real kInf = std::numeric_limits<Real>::infinity();

void check_pair(const RealVectorRef& p0, const RealVectorRef& p1) {
  if (p0.size() != p1.size()) fail(Errc::LengthMismatch, "distribution sizes differ");
}

// Iterates over all count vectors (c_1,...,c_B) with sum n.
template <typename F>
void for_each_count_vector(int outcomes, int n, std::vector<int>& counts, int pos, int left,
                           F&& body) {
  if (pos == outcomes - 1) {
    counts[pos] = left;
    body(counts);
    return;
  }
  for (int c = 0; c <= left; ++c) {
    counts[pos] = c;
    for_each_count_vector(outcomes, n, counts, pos + 1, left - c, body);
  }
}

Real log_multinomial(int n, const std::vector<int>& counts) {
  Real out = std::lgamma(n + 1.0);
  for (int c : counts) out -= std::lgamma(c + 1.0);
  return out;
}
}  // namespace

RealVector make_distribution(const RealVectorRef& p) {
  RealVector q = p;
  if (q.size() == 0) fail(Errc::BadInput, "empty distribution");
  if (q.minCoeff() < -1e-12) fail(Errc::BadInput, "negative probability");
  q = q.cwiseMax(0.0);
  Real s = q.sum();
  if (std::abs(s - 1.0) > 1e-9) fail(Errc::BadInput, "probabilities sum to " + std::to_string(s));
  return q / s;
}

BayesDecision error_probability(const RealVectorRef& p0, const RealVectorRef& p1, Real pi0) {
  check_pair(p0, p1);
  if (pi0 < 0.0 || pi0 > 1.0) fail(Errc::BadInput, "prior out of [0,1]");
  Real pi1 = 1.0 - pi0;
  BayesDecision out{0.0, std::vector<int>(static_cast<size_t>(p0.size()), 0)};
  for (Eigen::Index b = 0; b < p0.size(); ++b) {
    Real w0 = pi0 * p0(b), w1 = pi1 * p1(b);
    out.pe += std::min(w0, w1);
    out.decision[static_cast<size_t>(b)] = w1 > w0 ? 1 : 0;
  }
  return out;
}

Real error_probability_iid(const RealVectorRef& p0, const RealVectorRef& p1, Real pi0, int n) {
  check_pair(p0, p1);
  if (n < 1) fail(Errc::BadInput, "n must be >= 1");
  if (std::pow(static_cast<Real>(p0.size()), n) > 1e7) fail(Errc::TooLarge, "outcome space too large");
  int outcomes = static_cast<int>(p0.size());
  Real pi1 = 1.0 - pi0;
  Real pe = 0.0;
  std::vector<int> counts(static_cast<size_t>(outcomes), 0);
  for_each_count_vector(outcomes, n, counts, 0, n, [&](const std::vector<int>& c) {
    Real lmult = log_multinomial(n, c);
    Real l0 = 0.0, l1 = 0.0;
    bool z0 = false, z1 = false;
    for (int b = 0; b < outcomes; ++b) {
      if (c[static_cast<size_t>(b)] == 0) continue;
      if (p0(b) <= 0.0) z0 = true; else l0 += c[static_cast<size_t>(b)] * std::log(p0(b));
      if (p1(b) <= 0.0) z1 = true; else l1 += c[static_cast<size_t>(b)] * std::log(p1(b));
    }
    Real w0 = z0 ? 0.0 : pi0 * std::exp(lmult + l0);
    Real w1 = z1 ? 0.0 : pi1 * std::exp(lmult + l1);
    pe += std::min(w0, w1);
  });
  return pe;
}

Real renyi_overlap(const RealVectorRef& p0, const RealVectorRef& p1, Real alpha) {
  check_pair(p0, p1);
  if (alpha <= 0.0 || alpha >= 1.0) fail(Errc::BadAlpha, "alpha must lie in (0,1)");
  Real s = 0.0;
  for (Eigen::Index b = 0; b < p0.size(); ++b)
    if (p0(b) > 0.0 && p1(b) > 0.0)
      s += std::exp(alpha * std::log(p0(b)) + (1.0 - alpha) * std::log(p1(b)));
  return s;
}

Real chernoff_alpha_two_outcome(Real q, Real r) {
  Real num = std::log(-((1.0 - r) / r) * (std::log(1.0 - q) - std::log(1.0 - r)) /
                      (std::log(q) - std::log(r)));
  Real den = std::log(q * (1.0 - r) / (r * (1.0 - q)));
  return num / den;
}

ChernoffResult chernoff(const RealVectorRef& p0, const RealVectorRef& p1) {
  check_pair(p0, p1);
  ChernoffResult out{};
  bool any_common = false;
  for (Eigen::Index b = 0; b < p0.size(); ++b)
    if (p0(b) > 0.0 && p1(b) > 0.0) any_common = true;
  if (!any_common) {
    out.lambda = 0.0;
    out.alpha_star = std::numeric_limits<Real>::quiet_NaN();
    out.exponent = kInf;
    out.k0 = out.k1 = kInf;
    out.disjoint = true;
    return out;
  }
  auto f = [&](Real a) { return renyi_overlap(p0, p1, std::min(std::max(a, 1e-12), 1.0 - 1e-12)); };
  // d/da and d2/da2 of F_a over the common support; F is convex in a.
  auto derivs = [&](Real a) {
    Real d1 = 0.0, d2 = 0.0;
    for (Eigen::Index b = 0; b < p0.size(); ++b) {
      if (p0(b) <= 0.0 || p1(b) <= 0.0) continue;
      Real lr = std::log(p0(b)) - std::log(p1(b));
      Real term = std::exp(a * std::log(p0(b)) + (1.0 - a) * std::log(p1(b)));
      d1 += term * lr;
      d2 += term * lr * lr;
    }
    return std::make_pair(d1, d2);
  };
  Real a_star = golden_min(f, 0.0, 1.0, 200);
  // The objective is flat to machine precision near the optimum, so polish the
  // interior root of F' with a few Newton steps.
  if (a_star > 1e-9 && a_star < 1.0 - 1e-9) {
    for (int it = 0; it < 50; ++it) {
      auto [d1, d2] = derivs(a_star);
      if (d2 <= 0.0) break;
      Real step = d1 / d2;
      a_star = std::min(std::max(a_star - step, 0.0), 1.0);
      if (std::abs(step) < 1e-14) break;
    }
  }
  out.alpha_star = a_star;
  out.lambda = f(a_star);
  out.exponent = -std::log(out.lambda);
  // Twisted distribution p_alpha on the common support.
  RealVector pa = RealVector::Zero(p0.size());
  for (Eigen::Index b = 0; b < p0.size(); ++b)
    if (p0(b) > 0.0 && p1(b) > 0.0)
      pa(b) = std::exp(a_star * std::log(p0(b)) + (1.0 - a_star) * std::log(p1(b))) / out.lambda;
  out.k0 = kl_divergence(pa, p0);
  out.k1 = kl_divergence(pa, p1);
  out.disjoint = false;
  return out;
}

ClassicalFidelity fidelity_classical(const RealVectorRef& p0, const RealVectorRef& p1) {
  check_pair(p0, p1);
  Real f = 0.0;
  for (Eigen::Index b = 0; b < p0.size(); ++b)
    f += std::sqrt(std::max(p0(b), 0.0)) * std::sqrt(std::max(p1(b), 0.0));
  Real c = std::min(std::max(f, 0.0), 1.0);
  return {f, std::acos(c)};
}

Real kl_divergence(const RealVectorRef& p0, const RealVectorRef& p1) {
  check_pair(p0, p1);
  Real out = 0.0;
  for (Eigen::Index b = 0; b < p0.size(); ++b) {
    if (p0(b) <= 1e-15) continue;
    if (p1(b) <= 1e-15) return kInf;
    out += p0(b) * std::log(p0(b) / p1(b));
  }
  return out;
}

Real shannon_entropy(const RealVectorRef& p) {
  Real h = 0.0;
  for (Eigen::Index b = 0; b < p.size(); ++b) h -= xlnx(p(b));
  return h;
}

Real mutual_information(const RealVectorRef& p0, const RealVectorRef& p1, Real t) {
  check_pair(p0, p1);
  if (t < 0.0 || t > 1.0) fail(Errc::BadInput, "prior out of [0,1]");
  RealVector p = (1.0 - t) * p0 + t * p1;
  Real j = shannon_entropy(p) - (1.0 - t) * shannon_entropy(p0) - t * shannon_entropy(p1);
  return std::max(j, 0.0);
}

TypeClassProbability type_class_probability(const RealVectorRef& p_true,
                                            const RealVectorRef& freq, int n) {
  check_pair(p_true, freq);
  if (n < 1 || n > 20) fail(Errc::BadInput, "n out of supported range");
  int outcomes = static_cast<int>(freq.size());
  std::vector<int> counts(static_cast<size_t>(outcomes));
  for (int b = 0; b < outcomes; ++b) {
    Real c = freq(b) * n;
    counts[static_cast<size_t>(b)] = static_cast<int>(std::lround(c));
    if (std::abs(c - counts[static_cast<size_t>(b)]) > 1e-9)
      fail(Errc::NonIntegralCounts, "n*f not integral at outcome " + std::to_string(b));
  }
  Real logp = log_multinomial(n, counts);
  bool zero = false;
  for (int b = 0; b < outcomes; ++b) {
    if (counts[static_cast<size_t>(b)] == 0) continue;
    if (p_true(b) <= 0.0) { zero = true; break; }
    logp += counts[static_cast<size_t>(b)] * std::log(p_true(b));
  }
  Real k = kl_divergence(freq, p_true);
  TypeClassProbability out{};
  out.exact = zero ? 0.0 : std::exp(logp);
  out.upper = std::isinf(k) ? 0.0 : std::exp(-n * k);
  out.lower = std::isinf(k) ? 0.0 : std::pow(n + 1.0, -outcomes) * out.upper;
  return out;
}

}  // namespace qdist
