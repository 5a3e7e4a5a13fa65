// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <functional>
#include <vector>

#include "hydrosim/mesh.hpp"

namespace hydro {

// Interface indicator carried as a continuous kinematic-space field whose
// nodal values never change: the zero set rides along with the mesh motion.
// Material 1 occupies eta >= 0.
struct LevelSet {
  std::vector<double> eta;  // size mesh.nnodes

  void init(const Mesh& mesh, const std::function<double(const double*)>& f);

  double value(const Mesh& mesh, int e, const double* xi) const {
    return mesh.eval_kin_scalar(e, xi, eta);
  }
};

// Pointwise distance data toward the interface, from the first-order
// renormalization d = eta / sqrt(eta^2 + |grad eta|^2).
struct DistSample {
  double dist = 0.0;       // signed distance estimate (positive in material 1)
  double d_vec[2] = {0, 0};  // step from the sample point toward the interface
  double n_true[2] = {0, 0}; // interface unit normal, points toward material 1
  bool valid = true;         // n_true evaluated at the shifted point
};

// Evaluate distance data at reference point xi of element e on configuration
// X.  The normal is re-evaluated at the shifted point x + d_vec when that
// point can be located in e or a neighboring element; otherwise it falls
// back to the local gradient direction (valid=false).
DistSample distance_sample(const Mesh& mesh, const LevelSet& ls,
                           const std::vector<double>& X, int e,
                           const double* xi);

}  // namespace hydro
