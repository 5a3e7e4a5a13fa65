// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <functional>
#include <vector>

#include "hydrosim/assembly.hpp"

namespace hydro {

struct Conservation {
  double mass[2] = {0, 0};
  double momentum[2] = {0, 0};
  double internal_energy = 0.0;
  double kinetic_energy = 0.0;
  double total_energy = 0.0;
  double emom_proxy = 0.0;  // magnitude of the interface momentum face terms
};

Conservation conservation(const Hydro& op, const StageCache& c,
                          const State& s);

struct ErrNorms {
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
};

// velocity error against an exact field evaluated at current positions
ErrNorms velocity_error(
    const Hydro& op, const StageCache& c, const State& s,
    const std::function<void(const double*, double*)>& exact);

// per-material L1 density error over that material's masked region
double density_error_l1(const Hydro& op, const StageCache& c, int material,
                        const std::function<double(const double*)>& exact);

// quadrature-point samples restricted to each material's initial region
// (indicator at the point's reference position; boundary points belong to
// both materials)
struct PointSample {
  int material;  // 0 or 1
  double x[2];
  double rho, e, p;
  double v[2];
};

std::vector<PointSample> point_samples(const Hydro& op, const StageCache& c,
                                       const State& s);

// 1D interface pressure gap: both reconstructed pressures at the indicator
// zero inside the cut element
struct GapInfo {
  bool found = false;
  double x = 0.0;
  double p1 = 0.0, p2 = 0.0;
};

GapInfo interface_gap_1d(const Hydro& op, const StageCache& c, const State& s);

// sign changes of the indicator along each mesh node line (2D):
// rows follow constant-y node lines, cols constant-x
void eta_sign_changes(const Mesh& mesh, const LevelSet& ls,
                      std::vector<int>& rows, std::vector<int>& cols);

}  // namespace hydro
