// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hydro {

// Legendre polynomial P_n and derivative at x (on [-1,1]).
static void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) { p = 1.0; dp = 0.0; return; }
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, Newton iteration
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p, dp;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, p, dp);
      double dx = -p / dp;
      x += dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre(n, x, p, dp);
    // map [-1,1] -> [0,1]; reverse so nodes are ascending
    r.x[n - 1 - i] = 0.5 * (x + 1.0);
    r.w[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);  // = w_[-1,1]/2
  }
  return r;
}

Rule1D gauss_lobatto(int n) {
  if (n < 2) throw std::invalid_argument("gauss_lobatto: n >= 2 required");
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  const int m = n - 1;
  for (int i = 0; i < n; ++i) {
    // roots of (1-x^2) P'_m(x); initial guess from Chebyshev-Lobatto points
    double x = std::cos(M_PI * i / m);
    if (i == 0 || i == m) {
      // endpoints: P_m(+-1) = (+-1)^m, weight 2/(m(m+1)) on [-1,1]
      r.x[n - 1 - i] = i == 0 ? 1.0 : 0.0;
      r.w[n - 1 - i] = 1.0 / (m * (m + 1));
      continue;
    }
    for (int it = 0; it < 100; ++it) {
      double p, dp;
      legendre(m, x, p, dp);
      // f = (1-x^2) P'_m, Newton using Legendre ODE:
      // ((1-x^2) P'_m)' = -m(m+1) P_m
      double f = (1.0 - x * x) * dp;
      double df = -m * (m + 1) * p;
      if (std::abs(df) < 1e-300) break;
      double dx = -f / df;
      x += dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p, dp;
    legendre(m, x, p, dp);
    r.x[n - 1 - i] = 0.5 * (x + 1.0);
    r.w[n - 1 - i] = 1.0 / (m * (m + 1) * p * p);  // halved for [0,1]
  }
  r.x.front() = 0.0;
  r.x.back() = 1.0;
  return r;
}

Rule1D gauss_legendre_for_degree(int degree) {
  int n = (degree + 2) / 2;
  if (2 * n - 1 < degree) ++n;
  return gauss_legendre(n);
}

TensorRule tensor_rule(const Rule1D& line, int dim) {
  TensorRule t;
  t.dim = dim;
  t.line = line;
  const int n = line.n();
  if (dim == 1) {
    t.pts = line.x;
    t.wts = line.w;
  } else {
    t.pts.resize(static_cast<size_t>(n) * n * 2);
    t.wts.resize(static_cast<size_t>(n) * n);
    int q = 0;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i, ++q) {
        t.pts[q * 2 + 0] = line.x[i];
        t.pts[q * 2 + 1] = line.x[j];
        t.wts[q] = line.w[i] * line.w[j];
      }
  }
  return t;
}

}  // namespace hydro
