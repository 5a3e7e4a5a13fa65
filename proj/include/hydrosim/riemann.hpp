// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <stdexcept>

namespace hydro {

// One side of a Riemann problem for a stiffened gas.
struct RiemannState {
  double rho, v, p;
  double gamma;
  double pinf = 0.0;
};

// Exact solution of the two-material Riemann problem.  Internally the
// stiffened gas reduces to an ideal gas in the shifted pressure p + pinf,
// so the classical two-gamma solver applies with each side shifted by its
// own pinf; the true pressure is continuous across the contact.
struct RiemannSolution {
  RiemannState left, right;
  double p_star = 0.0;   // true pressure in the star region
  double v_star = 0.0;   // contact speed
  double rho_star_l = 0.0, rho_star_r = 0.0;
  int iterations = 0;

  // self-similar sample at xi = x/t
  void sample(double xi, double& rho, double& v, double& p,
              bool& is_left) const;
};

// Solve with a Newton iteration (bisection fallback).  Throws
// std::runtime_error on vacuum formation or non-physical inputs.
RiemannSolution solve_riemann(const RiemannState& l, const RiemannState& r,
                              double tol = 1e-14);

}  // namespace hydro
