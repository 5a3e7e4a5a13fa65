// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <functional>
#include <memory>
#include <vector>

#include "hydrosim/materials.hpp"
#include "hydrosim/shift.hpp"

namespace hydro {

struct AssemblyConfig {
  double q1 = 0.5;   // linear artificial-viscosity coefficient
  double q2 = 2.0;   // quadratic artificial-viscosity coefficient
  int taylor_p = 4;  // Taylor terms in the shifted pressure jump
  int taylor_v = 4;  // Taylor terms in the shifted velocity jump
  bool shift = true; // include the interface face integrals
  bool use_viscosity = true;
  // fine-grained switches for the face-term families (diagnostics)
  bool face_momentum = true;
  bool face_energy_flux = true;
  bool face_energy_jump = true;
};

// Dynamic state of a run: node positions, node velocities, and per-material
// specific internal energy DOFs.
struct State {
  std::vector<double> x;
  std::vector<double> v;
  std::vector<double> e[2];
  double t = 0.0;
};

// Per-element polynomial data in the interface band.
struct BandPolys {
  TensorPoly pres[2];
  bool pres_ok[2] = {false, false};
  TensorPoly vel[2];                // fitted per velocity component
  std::vector<TensorPoly> phi;      // thermodynamic test functions
};

// Everything that depends on the current geometry, rebuilt once per stage.
struct StageCache {
  bool geom_valid = true;
  std::vector<double> alpha;               // material-1 fraction per element
  // per element*nq:
  std::vector<double> detJ, jdef, xq, invJ;  // invJ row-major per qp
  std::vector<double> gradv;                 // velocity gradient, d*d per qp
  // per material, per element*nq:
  std::vector<double> rho[2], p[2], cs[2], mu[2];
  std::vector<double> sigma[2];            // full stress, d*d per qp
  std::vector<double> ell;                 // directional length scale per qp
  std::vector<double> dvmin;               // min eigenvalue of sym grad v
  std::vector<FaceData> faces;
  std::vector<int> band_idx;               // element -> band slot or -1
  std::vector<BandPolys> band;
  int invalid_normals = 0;
  double dt_est = 0.0;                     // unscaled stable dt estimate
};

// The semi-discrete two-material operator.
class Hydro {
 public:
  Hydro(const Mesh& mesh, const LevelSet& ls, const Topology& topo,
        const Materials& mat, AssemblyConfig cfg);

  // optional specific-internal-energy source, evaluated at (x, t)
  std::function<double(const double*, double)> esrc;

  void build_cache(const State& s, StageCache& c) const;

  // momentum right-hand side (force vector, size nnodes*dim), then the
  // mass-solve acceleration with slip walls applied
  void force(const StageCache& c, std::vector<double>& f) const;
  void accel(const StageCache& c, std::vector<double>& dv) const;

  // energy rates for both materials, using velocity vbar for the work terms
  // (refits the band velocity polynomials to vbar, hence non-const cache)
  void energy_rate(StageCache& c, const State& s,
                   const std::vector<double>& vbar,
                   std::vector<double> de[2]) const;

  // magnitude of the shifted-pressure face terms (momentum error proxy)
  double emom_proxy(const StageCache& c) const;

  const Mesh& mesh() const { return mesh_; }
  const Topology& topo() const { return topo_; }
  const Materials& mat() const { return mat_; }
  const LevelSet& levelset() const { return ls_; }
  const AssemblyConfig& config() const { return cfg_; }
  const std::vector<std::pair<int, int>>& constrained() const { return bdofs_; }

  // apply the slip-wall mask to a nodal vector
  void mask_bc(std::vector<double>& v) const;

 private:
  const Mesh& mesh_;
  const LevelSet& ls_;
  const Topology& topo_;
  const Materials& mat_;
  AssemblyConfig cfg_;

  std::vector<std::pair<int, int>> bdofs_;
  std::vector<char> constrained_[2];  // per component, per node
  std::unique_ptr<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>
      mass_solver_[2];
  std::vector<double> emass_inv_[2];  // per element nene*nene inverse, or empty

  void fit_band_velocity(const StageCache& c, const std::vector<double>& v,
                         std::vector<BandPolys>& band) const;
  void face_forces(const StageCache& c, std::vector<double>& f,
                   double* abs_sum) const;
};

}  // namespace hydro
