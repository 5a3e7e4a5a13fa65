// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <vector>

#include "hydrosim/quadrature.hpp"

namespace hydro {

// 1D Lagrange nodal basis on an arbitrary node set in [0,1], evaluated with
// the barycentric formula.
struct Lagrange1D {
  std::vector<double> nodes;
  std::vector<double> bary;  // barycentric weights

  Lagrange1D() = default;
  explicit Lagrange1D(std::vector<double> nds);

  int n() const { return static_cast<int>(nodes.size()); }
  // values[i] = l_i(x); derivs may be null
  void eval(double x, double* values, double* derivs) const;
};

// Tensor-product nodal basis on [0,1]^dim.  Node ordering is x-fastest,
// matching TensorRule.  "order" is the per-axis polynomial degree; order 0
// means the single constant function (node at 0.5).
struct TensorBasis {
  int dim = 1;
  int order = 1;
  Lagrange1D line;

  TensorBasis() = default;
  TensorBasis(int dim_, int order_, bool lobatto_nodes = true);

  int ndof() const {
    int n = line.n();
    return dim == 1 ? n : n * n;
  }
  // values: size ndof; grads (optional): size ndof*dim, reference-coordinate
  // gradients, grads[a*dim + c].
  void eval(const double* xi, double* values, double* grads) const;
};

}  // namespace hydro
