// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/stepper.hpp"

#include <cmath>
#include <cstdio>

namespace hydro {

bool Stepper::energy_jump_ok(const State& s0, const std::vector<double> de[2],
                             double dt) const {
  const Mesh& mesh = op_.mesh();
  for (int i = 0; i < 2; ++i) {
    double gmax = 0.0;
    for (double v : s0.e[i]) gmax = std::max(gmax, std::abs(v));
    for (int e = 0; e < mesh.nelems; ++e) {
      if (!op_.mat().active[i][e]) continue;
      double es = 1e-3 * gmax;
      for (int b = 0; b < mesh.nene; ++b)
        es = std::max(es, std::abs(s0.e[i][e * mesh.nene + b]));
      for (int b = 0; b < mesh.nene; ++b)
        if (std::abs(dt * de[i][e * mesh.nene + b]) >
            cfg_.max_de_ratio * es)
          return false;
    }
  }
  return true;
}

bool Stepper::try_step(State& s, double dt) {
  const Mesh& mesh = op_.mesh();
  const size_t nv = s.v.size();
  const State s0 = s;

  std::vector<double> dv, vbar(nv);
  std::vector<double> de[2];

  // stage 1: rates at t^n, half-step to the midpoint
  op_.accel(c0_, dv);
  for (size_t k = 0; k < nv; ++k) vbar[k] = s0.v[k] + 0.5 * dt * dv[k];
  op_.energy_rate(c0_, s0, vbar, de);
  if (!energy_jump_ok(s0, de, 0.5 * dt)) { s = s0; return false; }
  for (size_t k = 0; k < nv; ++k) {
    s.v[k] = vbar[k];
    s.x[k] = s0.x[k] + 0.5 * dt * vbar[k];
  }
  for (int i = 0; i < 2; ++i)
    for (size_t k = 0; k < s.e[i].size(); ++k)
      s.e[i][k] = s0.e[i][k] + 0.5 * dt * de[i][k];
  s.t = s0.t + 0.5 * dt;

  op_.build_cache(s, cmid_);
  if (!cmid_.geom_valid) { s = s0; return false; }

  // stage 2: full step with midpoint rates and time-averaged velocity
  op_.accel(cmid_, dv);
  for (size_t k = 0; k < nv; ++k) vbar[k] = s0.v[k] + 0.5 * dt * dv[k];
  op_.energy_rate(cmid_, s, vbar, de);
  if (!energy_jump_ok(s0, de, dt)) { s = s0; return false; }
  for (size_t k = 0; k < nv; ++k) {
    s.v[k] = s0.v[k] + dt * dv[k];
    s.x[k] = s0.x[k] + dt * vbar[k];
  }
  for (int i = 0; i < 2; ++i)
    for (size_t k = 0; k < s.e[i].size(); ++k)
      s.e[i][k] = s0.e[i][k] + dt * de[i][k];
  s.t = s0.t + dt;

  op_.build_cache(s, cnew_);
  if (!cnew_.geom_valid) { s = s0; return false; }
  return true;
}

RunStats Stepper::run(State& s, double t_final,
                      const std::function<void(const State&, const StageCache&,
                                               long)>& cb) {
  RunStats st;
  op_.build_cache(s, c0_);
  if (!c0_.geom_valid) {
    st.ok = false;
    st.error = "initial mesh is inverted";
    return st;
  }
  if (cb) cb(s, c0_, 0);

  double dt = std::min(cfg_.cfl * c0_.dt_est, cfg_.dt_max);
  long last_report = -1;
  while (s.t < t_final * (1.0 - 1e-14) && st.steps < cfg_.max_steps) {
    dt = std::min({dt, cfg_.dt_max, t_final - s.t});
    int retries = 0;
    while (!try_step(s, dt)) {
      st.rejections++;
      dt *= 0.5;
      if (++retries > cfg_.max_retries) {
        st.ok = false;
        st.error = "step rejected " + std::to_string(retries) +
                   " times (element inversion or energy spike)";
        return st;
      }
    }
    std::swap(c0_, cnew_);
    st.steps++;
    st.final_dt = dt;
    if (cb) cb(s, c0_, st.steps);
    if (cfg_.progress && (st.steps - last_report >= 100 ||
                          s.t >= t_final * (1.0 - 1e-14))) {
      std::fprintf(stderr, "step %ld t=%.6g dt=%.3g\n", st.steps, s.t, dt);
      last_report = st.steps;
    }
    dt = cfg_.cfl * c0_.dt_est;
  }
  return st;
}

}  // namespace hydro
