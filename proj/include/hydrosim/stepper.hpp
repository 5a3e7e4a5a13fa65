// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <functional>
#include <string>

#include "hydrosim/assembly.hpp"

namespace hydro {

struct StepperConfig {
  double cfl = 0.5;
  double dt_max = 1e300;
  int max_retries = 10;     // dt halvings before giving up on a step
  bool progress = true;     // progress lines on stderr
  long max_steps = 1000000000L;
  // reject a step when any internal-energy DOF changes by more than this
  // factor of its element's energy scale; the interface relaxation terms are
  // explicit and turn stiff during impulsive starts, where the acoustic dt
  // estimate cannot see them.  The bound must stay well below the explicit
  // stability limit of those terms, otherwise accepted steps amplify the
  double max_de_ratio = 2.0;
};

struct RunStats {
  long steps = 0;
  long rejections = 0;
  bool ok = true;
  std::string error;
  double final_dt = 0.0;
};

// Two-stage midpoint scheme: velocity and energy are updated with the same
// midpoint force data and the energy work term uses the time-averaged
// velocity, so volumetric total energy exchange cancels exactly.  Steps that
// invert an element or spike the internal energy are rejected and retried
// with half the step.
class Stepper {
 public:
  Stepper(const Hydro& op, StepperConfig cfg) : op_(op), cfg_(cfg) {}

  // advance s to t_final; cb (optional) runs after each accepted step and
  // once for the initial state, with the cache at that state
  RunStats run(State& s, double t_final,
               const std::function<void(const State&, const StageCache&,
                                        long)>& cb = {});

 private:
  const Hydro& op_;
  StepperConfig cfg_;
  StageCache c0_, cmid_, cnew_;

  bool try_step(State& s, double dt);  // uses c0_, fills cnew_ on success
  bool energy_jump_ok(const State& s0, const std::vector<double> de[2],
                      double dt) const;
};

}  // namespace hydro
