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

#include "qdist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <random>
#include <thread>

#include "qdist/classical.hpp"

namespace qdist {

namespace {
int thread_cap() {
  if (const char* env = std::getenv("QDIST_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}
}  // namespace

Functional::Functional(FunctionalKind k, DensityOperator a, DensityOperator b, Real prior)
    : kind(k), r0(std::move(a)), r1(std::move(b)), pi0(prior) {
  if (r0.dim() != r1.dim()) fail(Errc::BadFunctional, "state dimensions differ");
  if (pi0 < 0.0 || pi0 > 1.0) fail(Errc::BadFunctional, "prior out of [0,1]");
}

Real Functional::cost(const Povm& m) const {
  RealVector p0 = measure_probabilities(r0, m);
  RealVector p1 = measure_probabilities(r1, m);
  switch (kind) {
    case FunctionalKind::MinOverlap: {
      Real s = 0.0;
      for (Eigen::Index b = 0; b < p0.size(); ++b) s += std::sqrt(p0(b) * p1(b));
      return s;
    }
    case FunctionalKind::MinError: {
      Real s = 0.0;
      for (Eigen::Index b = 0; b < p0.size(); ++b)
        s += std::min(pi0 * p0(b), (1.0 - pi0) * p1(b));
      return s;
    }
    case FunctionalKind::MaxKl: {
      Real k = kl_divergence(p0, p1);
      return std::isinf(k) ? -1e9 : -k;
    }
    case FunctionalKind::MaxMutual:
      return -mutual_information(p0, p1, 1.0 - pi0);
  }
  return 0.0;
}

ProjectiveOptimum optimize_projective_2d(const Functional& f, int grid, int refine_iters) {
  if (f.r0.dim() != 2) fail(Errc::DimMismatch, "projective oracle is 2D only");
  if (grid < 8) fail(Errc::BadGrid, "grid too coarse");
  Bloch a = density_to_bloch(f.r0), b = density_to_bloch(f.r1);
  Bloch e1 = a.norm() > 1e-12 ? Bloch(a.normalized()) : Bloch(1, 0, 0);
  Bloch bp = b - b.dot(e1) * e1;
  Bloch e2 = bp.norm() > 1e-10 ? Bloch(bp.normalized())
                               : (std::abs(e1.x()) < 0.9 ? e1.cross(Bloch(1, 0, 0)).normalized()
                                                         : e1.cross(Bloch(0, 1, 0)).normalized());
  auto povm_at = [&](Real phi) {
    Bloch n = std::cos(phi) * e1 + std::sin(phi) * e2;
    Matrix plus = bloch_to_density(n).matrix();
    Povm m;
    m.elements = {plus, Matrix::Identity(2, 2) - plus};
    return m;
  };
  auto cost_at = [&](Real phi) { return f.cost(povm_at(phi)); };
  Real best = cost_at(0.0);
  int best_i = 0;
  for (int i = 1; i < grid; ++i) {
    Real c = cost_at(M_PI * i / grid);
    if (c < best) { best = c; best_i = i; }
  }
  Real phi = golden_min(cost_at, M_PI * (best_i - 1) / grid, M_PI * (best_i + 1) / grid,
                        refine_iters);
  Real refined = cost_at(phi);
  if (refined > best) phi = M_PI * best_i / grid;  // keep the incumbent
  ProjectiveOptimum out;
  out.value = f.value_from_cost(std::min(best, refined));
  out.n = (std::cos(phi) * e1 + std::sin(phi) * e2).normalized();
  return out;
}

namespace {
// Completeness projection: V = (G G^dagger)^(-1/2) G has V V^dagger = 1.
Povm povm_from_params(const RealVector& params, Eigen::Index d, int n) {
  Matrix g(d, n);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < d; ++i) {
      g(i, j) = Complex(params(k), params(k + 1));
      k += 2;
    }
  Matrix gram = g * g.adjoint();
  Matrix v = inv_sqrt_psd(gram + 1e-14 * Matrix::Identity(d, d)) * g;
  Povm m;
  for (int j = 0; j < n; ++j) {
    Vector col = v.col(j);
    m.elements.push_back(col * col.adjoint());
  }
  return m;
}

struct NelderMeadResult {
  RealVector x;
  Real value;
};

NelderMeadResult nelder_mead(const std::function<Real(const RealVector&)>& f, RealVector x0,
                             Real scale, int max_iters) {
  const Real alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  int n = static_cast<int>(x0.size());
  std::vector<RealVector> xs(static_cast<size_t>(n + 1), x0);
  std::vector<Real> fs(static_cast<size_t>(n + 1));
  for (int i = 1; i <= n; ++i) xs[static_cast<size_t>(i)](i - 1) += scale;
  for (int i = 0; i <= n; ++i) fs[static_cast<size_t>(i)] = f(xs[static_cast<size_t>(i)]);
  auto order = [&]() {
    std::vector<int> idx(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) idx[static_cast<size_t>(i)] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int p, int q) { return fs[static_cast<size_t>(p)] < fs[static_cast<size_t>(q)]; });
    std::vector<RealVector> xs2;
    std::vector<Real> fs2;
    for (int i : idx) {
      xs2.push_back(xs[static_cast<size_t>(i)]);
      fs2.push_back(fs[static_cast<size_t>(i)]);
    }
    xs.swap(xs2);
    fs.swap(fs2);
  };
  for (int it = 0; it < max_iters; ++it) {
    order();
    if (std::abs(fs.back() - fs.front()) < 1e-12) break;
    RealVector centroid = RealVector::Zero(n);
    for (int i = 0; i < n; ++i) centroid += xs[static_cast<size_t>(i)];
    centroid /= n;
    RealVector xr = centroid + alpha * (centroid - xs.back());
    Real fr = f(xr);
    if (fr < fs.front()) {
      RealVector xe = centroid + gamma * (centroid - xs.back());
      Real fe = f(xe);
      if (fe < fr) { xs.back() = xe; fs.back() = fe; }
      else { xs.back() = xr; fs.back() = fr; }
    } else if (fr < fs[static_cast<size_t>(n - 1)]) {
      xs.back() = xr;
      fs.back() = fr;
    } else {
      RealVector xc = centroid + rho * (xs.back() - centroid);
      Real fc = f(xc);
      if (fc < fs.back()) { xs.back() = xc; fs.back() = fc; }
      else {
        for (int i = 1; i <= n; ++i) {
          xs[static_cast<size_t>(i)] = xs.front() + sigma * (xs[static_cast<size_t>(i)] - xs.front());
          fs[static_cast<size_t>(i)] = f(xs[static_cast<size_t>(i)]);
        }
      }
    }
  }
  order();
  return {xs.front(), fs.front()};
}
}  // namespace

PovmOptimum optimize_povm(const Functional& f, int outcomes, std::uint64_t seed,
                          int restarts) {
  Eigen::Index d = f.r0.dim();
  if (d > 4) fail(Errc::TooLarge, "POVM oracle supports dim <= 4");
  if (outcomes < d || outcomes > d * d)
    fail(Errc::BadFunctional, "outcome count must lie in [D, D^2]");
  if (restarts < 1) fail(Errc::BadInput, "restarts must be >= 1");
  const int nparams = 2 * static_cast<int>(d) * outcomes;

  auto run_restart = [&](int r) -> std::pair<Real, RealVector> {
    std::mt19937_64 gen(seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(r));
    std::normal_distribution<Real> nd(0.0, 1.0);
    RealVector x0(nparams);
    for (int i = 0; i < nparams; ++i) x0(i) = nd(gen);
    auto cost = [&](const RealVector& p) { return f.cost(povm_from_params(p, d, outcomes)); };
    NelderMeadResult nm = nelder_mead(cost, x0, 0.35, 4000);
    if (!std::isfinite(nm.value)) fail(Errc::NoConvergence, "objective not finite");
    return {nm.value, nm.x};
  };

  std::vector<std::pair<Real, RealVector>> results(static_cast<size_t>(restarts));
  int workers = std::min(thread_cap(), restarts);
  if (workers <= 1) {
    for (int r = 0; r < restarts; ++r) results[static_cast<size_t>(r)] = run_restart(r);
  } else {
    std::vector<std::future<std::pair<Real, RealVector>>> futs;
    futs.reserve(static_cast<size_t>(restarts));
    for (int r = 0; r < restarts; ++r)
      futs.push_back(std::async(std::launch::async, run_restart, r));
    for (int r = 0; r < restarts; ++r) results[static_cast<size_t>(r)] = futs[static_cast<size_t>(r)].get();
  }
  // Deterministic reduction: best value, earliest restart on ties.
  int best = 0;
  for (int r = 1; r < restarts; ++r)
    if (results[static_cast<size_t>(r)].first < results[static_cast<size_t>(best)].first) best = r;
  PovmOptimum out;
  out.value = f.value_from_cost(results[static_cast<size_t>(best)].first);
  out.povm = povm_from_params(results[static_cast<size_t>(best)].second, d, outcomes);
  return out;
}

Real multicopy_error_exact(const RealVectorRef& p0, const RealVectorRef& p1, Real pi0, int n) {
  if (p0.size() != p1.size()) fail(Errc::LengthMismatch, "distribution sizes differ");
  if (n < 1) fail(Errc::BadInput, "n must be >= 1");
  int outcomes = static_cast<int>(p0.size());
  Real total = std::pow(static_cast<Real>(outcomes), n);
  if (total > 1e7) fail(Errc::TooLarge, "string space too large");
  // Odometer over outcome strings; no grouping so this stays independent of
  // the multinomial route in the classical module.
  std::vector<int> digits(static_cast<size_t>(n), 0);
  Real pe = 0.0;
  while (true) {
    Real w0 = pi0, w1 = 1.0 - pi0;
    for (int k = 0; k < n; ++k) {
      w0 *= p0(digits[static_cast<size_t>(k)]);
      w1 *= p1(digits[static_cast<size_t>(k)]);
    }
    pe += std::min(w0, w1);
    int pos = 0;
    while (pos < n) {
      if (++digits[static_cast<size_t>(pos)] < outcomes) break;
      digits[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return pe;
}

}  // namespace qdist
