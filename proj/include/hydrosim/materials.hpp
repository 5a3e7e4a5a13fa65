// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "hydrosim/mesh.hpp"
#include "hydrosim/poly.hpp"
#include "hydrosim/topology.hpp"

namespace hydro {

// Stiffened-gas equation of state: p = (gamma-1) rho e - gamma pinf,
// c^2 = gamma (p + pinf) / rho (floored at zero).
struct Eos {
  double gamma = 1.4;
  double pinf = 0.0;

  double pressure(double rho, double e) const {
    return (gamma - 1.0) * rho * e - gamma * pinf;
  }
  double energy(double rho, double p) const {
    return (p + gamma * pinf) / ((gamma - 1.0) * rho);
  }
  double sound(double rho, double p) const {
    double c2 = gamma * (p + pinf) / rho;
    return c2 > 0.0 ? std::sqrt(c2) : 0.0;
  }
};

// Per-material thermodynamic data on the moving mesh.  Densities follow the
// algebraic law rho_i = rho_i(x0,0) alpha_i(0) / (J alpha_i(t)) with J the
// deformation determinant, so only the initial products need to be stored;
// they are cached at the volumetric quadrature points and at the pressure
// reconstruction lattice.
struct Materials {
  Eos eos[2];
  int recon_deg = 4;

  // reconstruction sampling lattice (reference coords) and basis tables
  TensorRule rec;
  std::vector<double> ene_rec;        // [s*nene + b]
  // cached per-qp initial data, [e*npts + q]
  std::vector<double> rho0a0_vol[2];
  std::vector<double> rho0a0_rec[2];
  std::vector<double> detJ0_vol;      // initial Jacobian determinants
  std::vector<double> detJ0_rec;
  std::vector<char> active[2];        // alpha_i(0) > 0 on element

  void init(const Mesh& mesh, const Topology& topo,
            const std::function<double(const double*)> rho0[2],
            int recon_deg_);

  // density from cached initial data; alpha floored at 1e-10
  static double density(double rho0a0, double jdef, double alpha) {
    return rho0a0 / (jdef * std::max(alpha, 1e-10));
  }

  // Fit the degree-recon_deg pressure polynomial of material i on element e
  // in current physical coordinates.  edofs = that material's energy DOFs.
  // Returns false if the fit is rank deficient (polynomial then zero).
  bool reconstruct_pressure(const Mesh& mesh, const std::vector<double>& X,
                            const std::vector<double>& alpha, int i, int e,
                            const std::vector<double>& edofs,
                            TensorPoly& out) const;

  // local frame of element e on configuration X (vertex centroid + size)
  static void local_frame(const Mesh& mesh, const std::vector<double>& X,
                          int e, double center[2], double& scale);
};

}  // namespace hydro
