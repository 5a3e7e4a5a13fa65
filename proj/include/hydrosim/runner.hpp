// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hydrosim/diagnostics.hpp"
#include "hydrosim/problems.hpp"
#include "hydrosim/stepper.hpp"

namespace hydro {

struct RunConfig {
  std::string problem = "sod";
  int order = 2;
  int refine = 0;
  double cfl = 0.5;
  double tmax = -1.0;       // < 0: problem default
  int taylor_terms = 4;
  int recon_order = -1;     // < 0: max(4, order)
  bool shift = true;
  std::string out_dir;      // empty: no files written
  int output_every = 50;    // timeseries cadence in steps
  bool progress = true;
};

// Owns every piece of a configured simulation.
struct Simulation {
  Problem prob;
  Mesh mesh;
  LevelSet ls;
  Topology topo;
  Materials mat;
  std::unique_ptr<Hydro> op;
  State state;

  void setup(const RunConfig& cfg);
};

struct RunResult {
  bool ok = false;
  std::string error;
  long steps = 0;
  long rejections = 0;
  double t_end = 0.0;
  double wall_seconds = 0.0;
  Conservation initial, final_;
  double mass_drift[2] = {0, 0};     // relative
  double momentum_drift = 0.0;       // absolute vector norm
  double energy_drift = 0.0;         // relative
  ErrNorms vel_err;                  // if the problem has an exact velocity
  bool has_vel_err = false;
  GapInfo gap;                       // 1D interface pressure gap
  double p_star = 0.0;               // oracle star pressure (1D tubes)
  bool has_p_star = false;
  int invalid_normals = 0;
  long sample_rows = 0;
};

// Run one benchmark; writes point_samples.csv, timeseries.csv, summary.json
// and (2D) fields_*.vtk into cfg.out_dir when set.
RunResult run_benchmark(const RunConfig& cfg);

struct ConvRow {
  int order = 0;
  int refine = 0;
  double l1 = 0.0;
  double rate = 0.0;          // vs previous refinement of the same order
  double momentum_drift = 0.0;
  double energy_drift = 0.0;
  double wall_seconds = 0.0;
};

// Refinement ladder; writes convergence.csv into out_dir when set.
std::vector<ConvRow> convergence_study(const RunConfig& base,
                                       const std::vector<int>& orders,
                                       const std::vector<int>& refines,
                                       const std::string& out_dir);

// exposed for tests: initialize a state's DOFs from the problem data
void init_state(const Simulation& sim, State& s);

}  // namespace hydro
