#pragma once

// Numerical exploration of the real relaxation: maximize the entry sum of
// A^k over nonnegative real matrices with fixed strictly upper triangular
// support and entry sum N. The equal thick path attains (N/k)^k.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "quiver/error.hpp"

namespace quiver {

using RealMatrix = std::vector<std::vector<double>>;

struct RelaxConfig {
  std::size_t max_dim = 6;       // random supports use k+1..max_dim vertices
  std::size_t restarts = 20;     // random-support runs
  std::size_t iterations = 3000;
  double step = 0.5;             // exponent scale of the multiplicative update
  double density = 0.7;          // chance that an upper entry joins the support
  std::uint64_t seed = 1;
  bool include_thick_path = true;
};

struct RelaxResult {
  double value = 0.0;
  RealMatrix argmax;
  std::vector<double> run_values;  // thick-path run first when included
};

//! Entry sum of A^k.
inline double relaxation_value(const RealMatrix& a, std::size_t k) {
  const std::size_t n = a.size();
  std::vector<double> v(n, 1.0), w(n);
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += a[i][j] * v[j];
      w[i] = acc;
    }
    std::swap(v, w);
  }
  double total = 0;
  for (double x : v) total += x;
  return total;
}

//! d/dA_ij of 1^T A^k 1 = sum_{a+b=k-1} (1^T A^a)_i (A^b 1)_j.
inline RealMatrix relaxation_gradient(const RealMatrix& a, std::size_t k) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> left{std::vector<double>(n, 1.0)}, right{std::vector<double>(n, 1.0)};
  for (std::size_t s = 1; s < k; ++s) {
    std::vector<double> l(n, 0.0), r(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        l[j] += left.back()[i] * a[i][j];
        r[i] += a[i][j] * right.back()[j];
      }
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  RealMatrix g(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g[i][j] += left[s][i] * right[k - 1 - s][j];
    }
  }
  return g;
}

//! k+1 vertices, N/k on every superdiagonal entry.
inline RealMatrix equal_thick_path(double N, std::size_t k) {
  RealMatrix a(k + 1, std::vector<double>(k + 1, 0.0));
  for (std::size_t i = 0; i < k; ++i) a[i][i + 1] = N / static_cast<double>(k);
  return a;
}

namespace detail {
inline void rescale(RealMatrix& a, double N) {
  double s = 0;
  for (const auto& r : a) {
    for (double x : r) s += x;
  }
  if (s <= 0) return;
  for (auto& r : a) {
    for (double& x : r) x *= N / s;
  }
}
}  // namespace detail

//! Exponentiated-gradient ascent from `start`; entries that start at zero
//! stay zero, so the support is fixed. Each update multiplies A_ij by
//! exp(step * (grad_ij / mean_grad - 1)) and rescales to sum N.
inline RealMatrix ascend(RealMatrix a, double N, std::size_t k, std::size_t iterations, double step) {
  detail::rescale(a, N);
  for (std::size_t it = 0; it < iterations; ++it) {
    auto g = relaxation_gradient(a, k);
    // Euler: sum_ij A_ij g_ij = k * f(A); f = 0 means no k-path in the support.
    double f = relaxation_value(a, k);
    if (f <= 0) break;
    double mean = static_cast<double>(k) * f / N;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[i][j] > 0) a[i][j] *= std::exp(std::min(step * (g[i][j] / mean - 1.0), 50.0));
      }
    }
    detail::rescale(a, N);
  }
  return a;
}

//! Random strictly upper triangular support with positive random weights.
inline RealMatrix random_support_start(std::size_t dim, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RealMatrix a(dim, std::vector<double>(dim, 0.0));
  bool any = false;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (unit(rng) < density) {
        a[i][j] = 0.05 + unit(rng);
        any = true;
      }
    }
  }
  if (!any && dim >= 2) a[0][1] = 1.0;
  return a;
}

inline void validate(const RelaxConfig& c, double N, std::size_t k) {
  if (!(N > 0) || !std::isfinite(N)) fail(ErrorCode::ConfigInvalid, "N must be a positive real");
  if (k < 1 || static_cast<double>(k) > std::floor(N)) fail(ErrorCode::ConfigInvalid, "need 1 <= k <= floor(N)");
  if (c.max_dim < k + 1) fail(ErrorCode::ConfigInvalid, "max_dim must be at least k+1");
  if (c.max_dim > 64) fail(ErrorCode::ConfigInvalid, "max_dim above 64");
  if (c.iterations == 0) fail(ErrorCode::ConfigInvalid, "iterations must be positive");
  if (!(c.step > 0) || !std::isfinite(c.step)) fail(ErrorCode::ConfigInvalid, "step must be positive");
  if (!(c.density > 0) || c.density > 1) fail(ErrorCode::ConfigInvalid, "density must lie in (0,1]");
  if (c.restarts == 0 && !c.include_thick_path) fail(ErrorCode::ConfigInvalid, "no runs requested");
}

//! Best value over the thick-path start (if enabled) and `restarts` random
//! supports, all seeded from `config.seed`.
inline RelaxResult explore_real_relaxation(double N, std::size_t k, const RelaxConfig& config = {}) {
  validate(config, N, k);
  std::mt19937_64 rng(config.seed);
  RelaxResult res;
  auto consider = [&](RealMatrix a) {
    double v = relaxation_value(a, k);
    res.run_values.push_back(v);
    if (res.argmax.empty() || v > res.value) {
      res.value = v;
      res.argmax = std::move(a);
    }
  };
  if (config.include_thick_path) consider(ascend(equal_thick_path(N, k), N, k, config.iterations, config.step));
  std::uniform_int_distribution<std::size_t> dims(k + 1, config.max_dim);
  for (std::size_t r = 0; r < config.restarts; ++r) {
    auto start = random_support_start(dims(rng), config.density, rng);
    consider(ascend(std::move(start), N, k, config.iterations, config.step));
  }
  return res;
}

}  // namespace quiver
