// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/lagrange.hpp"

#include <cmath>
#include <cstring>

namespace hydro {

Lagrange1D::Lagrange1D(std::vector<double> nds) : nodes(std::move(nds)) {
  const int n = static_cast<int>(nodes.size());
  bary.assign(n, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) bary[i] /= (nodes[i] - nodes[j]);
}

void Lagrange1D::eval(double x, double* values, double* derivs) const {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) {
    values[0] = 1.0;
    if (derivs) derivs[0] = 0.0;
    return;
  }
  // exact hit on a node: fall back to the product form for the derivative
  int hit = -1;
  for (int i = 0; i < n; ++i)
    if (x == nodes[i]) { hit = i; break; }

  if (hit < 0) {
    double l = 1.0;  // node polynomial \prod (x - x_j)
    for (int j = 0; j < n; ++j) l *= (x - nodes[j]);
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += 1.0 / (x - nodes[j]);
    for (int i = 0; i < n; ++i) {
      const double li = l * bary[i] / (x - nodes[i]);
      values[i] = li;
      if (derivs) derivs[i] = li * (sum - 1.0 / (x - nodes[i]));
    }
  } else {
    for (int i = 0; i < n; ++i) values[i] = (i == hit) ? 1.0 : 0.0;
    if (derivs) {
      double shit = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != hit) shit += 1.0 / (nodes[hit] - nodes[j]);
      for (int i = 0; i < n; ++i) {
        if (i == hit) {
          derivs[i] = shit;
        } else {
          derivs[i] = bary[i] / bary[hit] / (nodes[hit] - nodes[i]);
        }
      }
    }
  }
}

TensorBasis::TensorBasis(int dim_, int order_, bool lobatto_nodes)
    : dim(dim_), order(order_) {
  std::vector<double> nds;
  if (order == 0) {
    nds = {0.5};
  } else if (lobatto_nodes) {
    nds = gauss_lobatto(order + 1).x;
  } else {
    nds = gauss_legendre(order + 1).x;
  }
  line = Lagrange1D(std::move(nds));
}

void TensorBasis::eval(const double* xi, double* values, double* grads) const {
  const int n = line.n();
  if (dim == 1) {
    line.eval(xi[0], values, grads);
    return;
  }
  double vx[16], dx[16], vy[16], dy[16];
  line.eval(xi[0], vx, grads ? dx : nullptr);
  line.eval(xi[1], vy, grads ? dy : nullptr);
  int a = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i, ++a) {
      values[a] = vx[i] * vy[j];
      if (grads) {
        grads[a * 2 + 0] = dx[i] * vy[j];
        grads[a * 2 + 1] = vx[i] * dy[j];
      }
    }
}

}  // namespace hydro
