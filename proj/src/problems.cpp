// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace hydro {

Problem make_problem(const std::string& name, int refine) {
  if (refine < 0) throw std::invalid_argument("refine must be >= 0");
  Problem p;
  p.name = name;
  const int scale = 1 << refine;

  if (name == "taylor-green") {
    p.dim = 2;
    p.hi[0] = p.hi[1] = 1.0;
    p.ne[0] = p.ne[1] = 2 * scale;  // refinement 2 -> 8x8
    p.t_final = 0.75;
    p.eos[0] = {5.0 / 3.0, 0.0};
    p.eos[1] = {5.0 / 3.0, 0.0};
    const double h = 1.0 / p.ne[0];
    // vertical interface strictly inside an element column right of center
    const double xc = 0.5 + 0.5 * h;
    p.eta0 = [xc](const double* x) { return xc - x[0]; };
    // the +1 baseline keeps pressure and internal energy positive; it drops
    // out of the dynamics (the flow is divergence-free and only the pressure
    // gradient acts), so the steady vortex is unchanged
    auto pres = [](const double* x) {
      return 0.25 * (std::cos(2 * M_PI * x[0]) + std::cos(2 * M_PI * x[1])) +
             1.0;
    };
    for (int i = 0; i < 2; ++i) {
      p.rho0[i] = [](const double*) { return 1.0; };
      Eos eos = p.eos[i];
      p.e0[i] = [eos, pres](const double* x) {
        return eos.energy(1.0, pres(x));
      };
    }
    p.v0 = [](const double* x, double* v) {
      v[0] = std::sin(M_PI * x[0]) * std::cos(M_PI * x[1]);
      v[1] = -std::cos(M_PI * x[0]) * std::sin(M_PI * x[1]);
    };
    p.vexact = p.v0;
    p.esrc = [](const double* x, double) {
      return 3.0 * M_PI / 8.0 *
             (std::cos(3 * M_PI * x[0]) * std::cos(M_PI * x[1]) -
              std::cos(M_PI * x[0]) * std::cos(3 * M_PI * x[1]));
    };
    return p;
  }

  if (name == "sod") {
    p.dim = 1;
    p.ne[0] = 100 * scale;
    p.t_final = 0.2;
    p.eos[0] = {2.0, 0.0};
    p.eos[1] = {1.4, 0.0};
    const double xc = 0.5 + 0.5 / p.ne[0];
    p.eta0 = [xc](const double* x) { return xc - x[0]; };
    p.rho0[0] = [](const double*) { return 1.0; };
    p.rho0[1] = [](const double*) { return 0.125; };
    p.e0[0] = [](const double*) { return 2.0; };
    p.e0[1] = [](const double*) { return 2.0; };
    p.v0 = [](const double*, double* v) { v[0] = 0.0; };
    return p;
  }

  if (name == "water-air") {
    p.dim = 1;
    p.ne[0] = 200 * scale;
    p.t_final = 2.2e-4;
    p.eos[0] = {4.4, 6.0e8};
    p.eos[1] = {1.4, 0.0};
    const double xc = 0.7 + 0.5 / p.ne[0];
    p.eta0 = [xc](const double* x) { return xc - x[0]; };
    p.rho0[0] = [](const double*) { return 1000.0; };
    p.rho0[1] = [](const double*) { return 50.0; };
    const Eos e0 = p.eos[0], e1 = p.eos[1];
    p.e0[0] = [e0](const double*) { return e0.energy(1000.0, 1.0e9); };
    p.e0[1] = [e1](const double*) { return e1.energy(50.0, 1.0e5); };
    p.v0 = [](const double*, double* v) { v[0] = 0.0; };
    return p;
  }

  if (name == "triple-point") {
    p.dim = 2;
    p.hi[0] = 7.0;
    p.hi[1] = 3.0;
    p.ne[0] = 70 * scale;
    p.ne[1] = 30 * scale;
    p.t_final = 5.0;
    p.eos[0] = {1.5, 0.0};
    p.eos[1] = {1.4, 0.0};
    // material 1 is left/top: {x<1} u {x>1, y>1.5}; smoothed union of the
    // two half-plane distances with corner radius h/2
    const double h = 0.1 / scale;
    const double r = 0.5 * h;
    p.eta0 = [r](const double* x) {
      const double d1 = 1.0 - x[0];
      const double d2 = x[1] - 1.5;
      return 0.5 * (d1 + d2 + std::sqrt((d1 - d2) * (d1 - d2) + r * r));
    };
    const Eos eosm[2] = {p.eos[0], p.eos[1]};
    p.rho0[0] = [](const double* x) {
      if (x[0] < 1.0) return 1.0;
      return x[1] > 1.5 ? 1.0 : 0.125;
    };
    p.rho0[1] = [](const double* x) { return x[1] < 1.5 ? 1.0 : 0.125; };
    p.e0[0] = [eosm](const double* x) {
      if (x[0] < 1.0) return eosm[0].energy(1.0, 1.0);
      return x[1] > 1.5 ? eosm[0].energy(1.0, 0.1)
                        : eosm[0].energy(0.125, 0.1);
    };
    p.e0[1] = [eosm](const double* x) {
      return x[1] < 1.5 ? eosm[1].energy(1.0, 0.1)
                        : eosm[1].energy(0.125, 0.1);
    };
    p.v0 = [](const double*, double* v) { v[0] = v[1] = 0.0; };
    return p;
  }

  throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace hydro
