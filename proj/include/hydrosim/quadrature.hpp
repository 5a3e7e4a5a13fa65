// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <vector>

namespace hydro {

// 1D quadrature / node rules on the reference interval [0,1].
struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
  int n() const { return static_cast<int>(x.size()); }
};

// Gauss-Legendre rule with n points, exact for polynomials of degree 2n-1.
Rule1D gauss_legendre(int n);

// Gauss-Lobatto nodes (n points, includes both endpoints).  Weights are the
// usual Lobatto quadrature weights, though we mostly use the node locations.
Rule1D gauss_lobatto(int n);

// Smallest Gauss-Legendre rule exact for the given polynomial degree.
Rule1D gauss_legendre_for_degree(int degree);

// Tensor-product rule on [0,1]^dim built from a 1D rule.
struct TensorRule {
  int dim = 1;
  Rule1D line;
  // flattened points: x-fastest ordering, point q has coords pt(q, a)
  std::vector<double> pts;  // size npts*dim
  std::vector<double> wts;  // size npts

  int npts() const { return static_cast<int>(wts.size()); }
  double pt(int q, int axis) const { return pts[q * dim + axis]; }
};

TensorRule tensor_rule(const Rule1D& line, int dim);

}  // namespace hydro
