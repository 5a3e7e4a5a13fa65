// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <vector>

namespace hydro {

// Tensor-product polynomial in scaled local coordinates
//   u_a = (x_a - center_a) / scale,
// with coefficients c[i + (deg+1)*j] for u0^i * u1^j (1D: c[i] for u^i).
//
// Directional structure is handled by restricting the polynomial to a line
// x(s) = x0 + s*d, which yields an exact 1D polynomial g(s); the k-th
// directional derivative at x0 is then k! * g_k and the truncated Taylor
// shift sum_{k=0..K} D^k_d p / k! is the partial coefficient sum of g.
struct TensorPoly {
  int dim = 1;
  int deg = 0;
  double center[2] = {0.0, 0.0};
  double scale = 1.0;
  std::vector<double> c;

  int ncoef() const {
    return dim == 1 ? deg + 1 : (deg + 1) * (deg + 1);
  }

  double eval(const double* x) const;
  void gradient(const double* x, double* g) const;

  // Coefficients of g(s) = p(x0 + s*d), degree dim*deg.
  std::vector<double> line_coeffs(const double* x0, const double* d) const;

  // sum_{k=0..terms} D^k_d p(x0) / k!  (terms >= dim*deg gives p(x0+d) exactly)
  double taylor_shift(const double* x0, const double* d, int terms) const;
  // sum_{k=1..terms} D^k_d p(x0) / k!  (the shift correction alone)
  double taylor_tail(const double* x0, const double* d, int terms) const;
};

// Least-squares fit of a TensorPoly of the given degree to samples
// (points[i*dim..], values[i]).  center/scale define the local frame.
// Returns false (and zero polynomial) if the normal equations are
// numerically rank deficient.
bool fit_poly(int dim, int deg, const double* center, double scale,
              const std::vector<double>& points,
              const std::vector<double>& values, TensorPoly& out);

// Shared-basis fitter for many value sets over the same sample points:
// factorizes once, then fits each column.  Used for per-element pressure /
// velocity / test-function polynomials.
struct PolyFitter {
  int dim = 1;
  int deg = 0;
  double center[2] = {0.0, 0.0};
  double scale = 1.0;
  bool ok = false;

  PolyFitter(int dim_, int deg_, const double* center_, double scale_,
             const std::vector<double>& points);
  TensorPoly fit(const std::vector<double>& values) const;

 private:
  std::vector<double> basis_;   // npts x ncoef design matrix
  std::vector<double> chol_;    // Cholesky factor of the normal matrix
  int npts_ = 0;
  int ncoef_ = 0;
};

}  // namespace hydro
