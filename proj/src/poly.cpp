// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/poly.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace hydro {

double TensorPoly::eval(const double* x) const {
  const double u = (x[0] - center[0]) / scale;
  if (dim == 1) {
    double acc = 0.0;
    for (int i = deg; i >= 0; --i) acc = acc * u + c[i];
    return acc;
  }
  const double v = (x[1] - center[1]) / scale;
  double acc = 0.0;
  for (int j = deg; j >= 0; --j) {
    double row = 0.0;
    for (int i = deg; i >= 0; --i) row = row * u + c[i + (deg + 1) * j];
    acc = acc * v + row;
  }
  return acc;
}

void TensorPoly::gradient(const double* x, double* g) const {
  const double u = (x[0] - center[0]) / scale;
  if (dim == 1) {
    double acc = 0.0;
    for (int i = deg; i >= 1; --i) acc = acc * u + i * c[i];
    g[0] = acc / scale;
    return;
  }
  const double v = (x[1] - center[1]) / scale;
  double gu = 0.0, gv = 0.0;
  for (int j = deg; j >= 0; --j) {
    double row = 0.0;
    for (int i = deg; i >= 1; --i) row = row * u + i * c[i + (deg + 1) * j];
    gu = gu * v + row;
  }
  for (int j = deg; j >= 1; --j) {
    double row = 0.0;
    for (int i = deg; i >= 0; --i) row = row * u + c[i + (deg + 1) * j];
    gv = gv * v + j * row;
  }
  g[0] = gu / scale;
  g[1] = gv / scale;
}

std::vector<double> TensorPoly::line_coeffs(const double* x0,
                                            const double* d) const {
  // per-axis: u_a(s) = b_a + m_a s; expand powers via binomial recurrence
  const int n = deg + 1;
  const double b0 = (x0[0] - center[0]) / scale, m0 = d[0] / scale;
  // pw[a][i] = coefficients (in s) of u_a^i, each of length i+1
  auto powers = [&](double b, double m) {
    std::vector<std::vector<double>> pw(n);
    pw[0] = {1.0};
    for (int i = 1; i < n; ++i) {
      pw[i].assign(i + 1, 0.0);
      for (int k = 0; k < i; ++k) {
        pw[i][k] += pw[i - 1][k] * b;
        pw[i][k + 1] += pw[i - 1][k] * m;
      }
    }
    return pw;
  };
  auto px = powers(b0, m0);
  if (dim == 1) {
    std::vector<double> g(deg + 1, 0.0);
    for (int i = 0; i <= deg; ++i)
      for (int k = 0; k <= i; ++k) g[k] += c[i] * px[i][k];
    return g;
  }
  const double b1 = (x0[1] - center[1]) / scale, m1 = d[1] / scale;
  auto py = powers(b1, m1);
  std::vector<double> g(2 * deg + 1, 0.0);
  for (int j = 0; j <= deg; ++j)
    for (int i = 0; i <= deg; ++i) {
      const double cij = c[i + (deg + 1) * j];
      if (cij == 0.0) continue;
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= j; ++l) g[k + l] += cij * px[i][k] * py[j][l];
    }
  return g;
}

double TensorPoly::taylor_shift(const double* x0, const double* d,
                                int terms) const {
  auto g = line_coeffs(x0, d);
  const int kmax = std::min<int>(terms, static_cast<int>(g.size()) - 1);
  double s = 0.0;
  for (int k = 0; k <= kmax; ++k) s += g[k];
  return s;
}

double TensorPoly::taylor_tail(const double* x0, const double* d,
                               int terms) const {
  auto g = line_coeffs(x0, d);
  const int kmax = std::min<int>(terms, static_cast<int>(g.size()) - 1);
  double s = 0.0;
  for (int k = 1; k <= kmax; ++k) s += g[k];
  return s;
}

static void monomials(int dim, int deg, const double* center, double scale,
                      const double* x, double* row) {
  const double u = (x[0] - center[0]) / scale;
  if (dim == 1) {
    double p = 1.0;
    for (int i = 0; i <= deg; ++i) { row[i] = p; p *= u; }
    return;
  }
  const double v = (x[1] - center[1]) / scale;
  double pu[16], pv[16];
  double p = 1.0;
  for (int i = 0; i <= deg; ++i) { pu[i] = p; p *= u; }
  p = 1.0;
  for (int j = 0; j <= deg; ++j) { pv[j] = p; p *= v; }
  for (int j = 0; j <= deg; ++j)
    for (int i = 0; i <= deg; ++i) row[i + (deg + 1) * j] = pu[i] * pv[j];
}

PolyFitter::PolyFitter(int dim_, int deg_, const double* center_, double scale_,
                       const std::vector<double>& points)
    : dim(dim_), deg(deg_), scale(scale_) {
  center[0] = center_[0];
  center[1] = dim == 2 ? center_[1] : 0.0;
  npts_ = static_cast<int>(points.size()) / dim;
  ncoef_ = dim == 1 ? deg + 1 : (deg + 1) * (deg + 1);
  basis_.resize(static_cast<size_t>(npts_) * ncoef_);
  for (int i = 0; i < npts_; ++i)
    monomials(dim, deg, center, scale, &points[i * dim], &basis_[i * ncoef_]);

  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      B(basis_.data(), npts_, ncoef_);
  Eigen::MatrixXd N = B.transpose() * B;
  Eigen::LLT<Eigen::MatrixXd> llt(N);
  ok = (llt.info() == Eigen::Success);
  if (ok) {
    // guard against near-singular normal matrices that LLT still accepts
    Eigen::MatrixXd L = llt.matrixL();
    double dmin = 1e300, dmax = 0.0;
    for (int i = 0; i < ncoef_; ++i) {
      dmin = std::min(dmin, L(i, i));
      dmax = std::max(dmax, L(i, i));
    }
    if (!(dmin > 1e-10 * dmax)) ok = false;
  }
  if (ok) {
    Eigen::MatrixXd L = llt.matrixL();
    chol_.assign(L.data(), L.data() + ncoef_ * ncoef_);
  }
}

TensorPoly PolyFitter::fit(const std::vector<double>& values) const {
  TensorPoly p;
  p.dim = dim;
  p.deg = deg;
  p.center[0] = center[0];
  p.center[1] = center[1];
  p.scale = scale;
  p.c.assign(ncoef_, 0.0);
  if (!ok) return p;
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      B(basis_.data(), npts_, ncoef_);
  Eigen::Map<const Eigen::VectorXd> y(values.data(), npts_);
  Eigen::Map<const Eigen::MatrixXd> L(chol_.data(), ncoef_, ncoef_);
  Eigen::VectorXd rhs = B.transpose() * y;
  Eigen::VectorXd z = L.triangularView<Eigen::Lower>().solve(rhs);
  Eigen::VectorXd coef =
      L.transpose().triangularView<Eigen::Upper>().solve(z);
  for (int i = 0; i < ncoef_; ++i) p.c[i] = coef[i];
  return p;
}

bool fit_poly(int dim, int deg, const double* center, double scale,
              const std::vector<double>& points,
              const std::vector<double>& values, TensorPoly& out) {
  PolyFitter f(dim, deg, center, scale, points);
  out = f.fit(values);
  return f.ok;
}

}  // namespace hydro
