// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <functional>
#include <string>

#include "hydrosim/materials.hpp"

namespace hydro {

// A fully-resolved benchmark configuration: domain, mesh extents for the
// requested refinement, EOS pair, and analytic initial data.  Each
// material's fields are global analytic extensions; the indicator decides
// which one is physically present.
struct Problem {
  std::string name;
  int dim = 1;
  double lo[2] = {0, 0};
  double hi[2] = {1, 1};
  int ne[2] = {1, 1};
  double t_final = 1.0;
  Eos eos[2];
  std::function<double(const double*)> eta0;
  std::function<double(const double*)> rho0[2];
  std::function<double(const double*)> e0[2];
  std::function<void(const double*, double*)> v0;
  std::function<double(const double*, double)> esrc;      // may be empty
  std::function<void(const double*, double*)> vexact;     // may be empty
};

// Known problems: "taylor-green", "sod", "water-air", "triple-point".
// Throws std::invalid_argument for unknown names or bad refinement.
Problem make_problem(const std::string& name, int refine);

}  // namespace hydro
