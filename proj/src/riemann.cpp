// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace hydro {

namespace {

struct SideFn {
  double rho, pi, g, c;  // pi = p + pinf

  // f(p*): velocity change across the wave as a function of star pressure
  // (in true-pressure terms; pis = p* + pinf of this side)
  double f(double pis) const {
    if (pis > pi) {  // shock
      const double A = 2.0 / ((g + 1.0) * rho);
      const double B = (g - 1.0) / (g + 1.0) * pi;
      return (pis - pi) * std::sqrt(A / (pis + B));
    }
    // rarefaction
    return 2.0 * c / (g - 1.0) *
           (std::pow(pis / pi, (g - 1.0) / (2.0 * g)) - 1.0);
  }
  double df(double pis) const {
    if (pis > pi) {
      const double A = 2.0 / ((g + 1.0) * rho);
      const double B = (g - 1.0) / (g + 1.0) * pi;
      const double s = std::sqrt(A / (pis + B));
      return s * (1.0 - 0.5 * (pis - pi) / (pis + B));
    }
    return std::pow(pis / pi, -(g + 1.0) / (2.0 * g)) / (rho * c);
  }
  double rho_star(double pis) const {
    if (pis > pi) {
      const double b = (g - 1.0) / (g + 1.0);
      const double r = pis / pi;
      return rho * (r + b) / (b * r + 1.0);
    }
    return rho * std::pow(pis / pi, 1.0 / g);
  }
};

}  // namespace

RiemannSolution solve_riemann(const RiemannState& l, const RiemannState& r,
                              double tol) {
  const double pil = l.p + l.pinf, pir = r.p + r.pinf;
  if (!(l.rho > 0.0) || !(r.rho > 0.0) || !(pil > 0.0) || !(pir > 0.0))
    throw std::runtime_error("riemann: non-physical input state");
  SideFn L{l.rho, pil, l.gamma, std::sqrt(l.gamma * pil / l.rho)};
  SideFn R{r.rho, pir, r.gamma, std::sqrt(r.gamma * pir / r.rho)};
  const double dv = r.v - l.v;
  if (2.0 * L.c / (l.gamma - 1.0) + 2.0 * R.c / (r.gamma - 1.0) <= dv)
    throw std::runtime_error("riemann: vacuum formation");

  // residual in the true star pressure p
  auto res = [&](double p) { return L.f(p + l.pinf) + R.f(p + r.pinf) + dv; };

  // both shifted pressures must stay positive in the star region
  const double plo = -std::min(l.pinf, r.pinf);
  double phi = 2.0 * std::max(l.p, r.p) + 1.0;
  // ensure res(phi) > 0
  for (int k = 0; k < 200 && res(phi) < 0.0; ++k) phi *= 2.0;
  if (!(res(plo + 1e-12 * (phi - plo)) < 0.0))
    throw std::runtime_error("riemann: vacuum formation (stiffened limit)");
  double pguess = std::max(0.5 * (l.p + r.p), plo + 1e-9 * (phi - plo));

  RiemannSolution sol;
  sol.left = l;
  sol.right = r;

  double p = pguess;
  int it = 0;
  for (; it < 100; ++it) {
    const double f = res(p);
    const double d = L.df(p + l.pinf) + R.df(p + r.pinf);
    double pn = p - f / d;
    if (!(pn > plo)) pn = 0.5 * (p + plo);
    if (std::abs(pn - p) <= tol * (std::abs(pn) + 1e-30)) { p = pn; break; }
    p = pn;
  }
  // polish / fallback with bisection if Newton struggled
  if (!(std::abs(res(p)) < 1e-8 * (std::abs(dv) + L.c + R.c))) {
    double a = plo + 1e-12 * (phi - plo), b = phi;
    for (int k = 0; k < 2000; ++k) {
      const double m = 0.5 * (a + b);
      if (res(m) < 0.0) a = m; else b = m;
    }
    p = 0.5 * (a + b);
  }

  sol.p_star = p;
  sol.iterations = it;
  sol.v_star = 0.5 * (l.v + r.v) + 0.5 * (R.f(p + r.pinf) - L.f(p + l.pinf));
  sol.rho_star_l = L.rho_star(p + l.pinf);
  sol.rho_star_r = R.rho_star(p + r.pinf);
  return sol;
}

void RiemannSolution::sample(double xi, double& rho, double& v, double& p,
                             bool& is_left) const {
  const double pil = left.p + left.pinf, pir = right.p + right.pinf;
  const double cl = std::sqrt(left.gamma * pil / left.rho);
  const double cr = std::sqrt(right.gamma * pir / right.rho);

  if (xi <= v_star) {
    is_left = true;
    const double g = left.gamma;
    const double pis = p_star + left.pinf;
    if (pis > pil) {  // left shock
      const double sl =
          left.v - cl * std::sqrt((g + 1.0) / (2.0 * g) * pis / pil +
                                  (g - 1.0) / (2.0 * g));
      if (xi <= sl) { rho = left.rho; v = left.v; p = left.p; }
      else { rho = rho_star_l; v = v_star; p = p_star; }
    } else {  // left rarefaction
      const double cstar = cl * std::pow(pis / pil, (g - 1.0) / (2.0 * g));
      const double head = left.v - cl;
      const double tail = v_star - cstar;
      if (xi <= head) { rho = left.rho; v = left.v; p = left.p; }
      else if (xi >= tail) { rho = rho_star_l; v = v_star; p = p_star; }
      else {
        const double c = (2.0 * cl + (g - 1.0) * (left.v - xi)) / (g + 1.0);
        v = xi + c;
        const double pi = pil * std::pow(c / cl, 2.0 * g / (g - 1.0));
        p = pi - left.pinf;
        rho = g * pi / (c * c);
      }
    }
  } else {
    is_left = false;
    const double g = right.gamma;
    const double pis = p_star + right.pinf;
    if (pis > pir) {  // right shock
      const double sr =
          right.v + cr * std::sqrt((g + 1.0) / (2.0 * g) * pis / pir +
                                   (g - 1.0) / (2.0 * g));
      if (xi >= sr) { rho = right.rho; v = right.v; p = right.p; }
      else { rho = rho_star_r; v = v_star; p = p_star; }
    } else {  // right rarefaction
      const double cstar = cr * std::pow(pis / pir, (g - 1.0) / (2.0 * g));
      const double head = right.v + cr;
      const double tail = v_star + cstar;
      if (xi >= head) { rho = right.rho; v = right.v; p = right.p; }
      else if (xi <= tail) { rho = rho_star_r; v = v_star; p = p_star; }
      else {
        const double c = (2.0 * cr - (g - 1.0) * (right.v - xi)) / (g + 1.0);
        v = xi - c;
        const double pi = pir * std::pow(c / cr, 2.0 * g / (g - 1.0));
        p = pi - right.pinf;
        rho = g * pi / (c * c);
      }
    }
  }
}

}  // namespace hydro
