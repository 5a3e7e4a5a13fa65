// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/diagnostics.hpp"

#include <cmath>

namespace hydro {

Conservation conservation(const Hydro& op, const StageCache& c,
                          const State& s) {
  const Mesh& mesh = op.mesh();
  const int dim = mesh.dim;
  const int nq = mesh.vol.npts();
  Conservation out;
  std::vector<double> Ve(static_cast<size_t>(mesh.nkin) * dim);
  for (int e = 0; e < mesh.nelems; ++e) {
    mesh.gather_nodes(e, s.v, Ve.data());
    const double aw[2] = {c.alpha[e], 1.0 - c.alpha[e]};
    for (int q = 0; q < nq; ++q) {
      const size_t qi = static_cast<size_t>(e) * nq + q;
      const double wd = mesh.vol.wts[q] * c.detJ[qi];
      const double* N = &mesh.kin_val[q * mesh.nkin];
      double vq[2] = {0, 0};
      for (int a = 0; a < mesh.nkin; ++a)
        for (int r = 0; r < dim; ++r) vq[r] += N[a] * Ve[a * dim + r];
      double rhotot = 0.0;
      for (int i = 0; i < 2; ++i) {
        if (!op.mat().active[i][e]) continue;
        const double m = aw[i] * c.rho[i][qi];
        rhotot += m;
        out.mass[i] += wd * m;
        double en = 0.0;
        const double* P = &mesh.ene_val[q * mesh.nene];
        for (int b = 0; b < mesh.nene; ++b)
          en += P[b] * s.e[i][mesh.edof(e, b)];
        out.internal_energy += wd * m * en;
      }
      double v2 = 0.0;
      for (int r = 0; r < dim; ++r) {
        out.momentum[r] += wd * rhotot * vq[r];
        v2 += vq[r] * vq[r];
      }
      out.kinetic_energy += 0.5 * wd * rhotot * v2;
    }
  }
  out.total_energy = out.internal_energy + out.kinetic_energy;
  out.emom_proxy = op.emom_proxy(c);
  return out;
}

ErrNorms velocity_error(
    const Hydro& op, const StageCache& c, const State& s,
    const std::function<void(const double*, double*)>& exact) {
  const Mesh& mesh = op.mesh();
  const int dim = mesh.dim;
  const int nq = mesh.vol.npts();
  ErrNorms n;
  std::vector<double> Ve(static_cast<size_t>(mesh.nkin) * dim);
  for (int e = 0; e < mesh.nelems; ++e) {
    mesh.gather_nodes(e, s.v, Ve.data());
    for (int q = 0; q < nq; ++q) {
      const size_t qi = static_cast<size_t>(e) * nq + q;
      const double wd = mesh.vol.wts[q] * c.detJ[qi];
      const double* N = &mesh.kin_val[q * mesh.nkin];
      double vq[2] = {0, 0}, vx[2] = {0, 0};
      for (int a = 0; a < mesh.nkin; ++a)
        for (int r = 0; r < dim; ++r) vq[r] += N[a] * Ve[a * dim + r];
      exact(&c.xq[qi * dim], vx);
      double err2 = 0.0;
      for (int r = 0; r < dim; ++r) {
        const double d = vq[r] - vx[r];
        err2 += d * d;
      }
      const double err = std::sqrt(err2);
      n.l1 += wd * err;
      n.l2 += wd * err2;
      n.linf = std::max(n.linf, err);
    }
  }
  n.l2 = std::sqrt(n.l2);
  return n;
}

double density_error_l1(const Hydro& op, const StageCache& c, int material,
                        const std::function<double(const double*)>& exact) {
  const Mesh& mesh = op.mesh();
  const int nq = mesh.vol.npts();
  const LevelSet& ls = op.levelset();
  double acc = 0.0;
  for (int e = 0; e < mesh.nelems; ++e) {
    if (!op.mat().active[material][e]) continue;
    for (int q = 0; q < nq; ++q) {
      const double eta = ls.value(mesh, e, &mesh.vol.pts[q * mesh.dim]);
      const bool in = material == 0 ? eta >= 0.0 : eta <= 0.0;
      if (!in) continue;
      const size_t qi = static_cast<size_t>(e) * nq + q;
      const double wd = mesh.vol.wts[q] * c.detJ[qi];
      acc += wd * std::abs(c.rho[material][qi] - exact(&c.xq[qi * mesh.dim]));
    }
  }
  return acc;
}

std::vector<PointSample> point_samples(const Hydro& op, const StageCache& c,
                                       const State& s) {
  const Mesh& mesh = op.mesh();
  const int dim = mesh.dim;
  const int nq = mesh.vol.npts();
  const LevelSet& ls = op.levelset();
  std::vector<PointSample> out;
  std::vector<double> Ve(static_cast<size_t>(mesh.nkin) * dim);
  for (int e = 0; e < mesh.nelems; ++e) {
    mesh.gather_nodes(e, s.v, Ve.data());
    for (int q = 0; q < nq; ++q) {
      const size_t qi = static_cast<size_t>(e) * nq + q;
      const double eta = ls.value(mesh, e, &mesh.vol.pts[q * dim]);
      const double* N = &mesh.kin_val[q * mesh.nkin];
      double vq[2] = {0, 0};
      for (int a = 0; a < mesh.nkin; ++a)
        for (int r = 0; r < dim; ++r) vq[r] += N[a] * Ve[a * dim + r];
      for (int i = 0; i < 2; ++i) {
        if (!op.mat().active[i][e]) continue;
        const bool in = i == 0 ? eta >= 0.0 : eta <= 0.0;
        if (!in) continue;
        PointSample ps{};
        ps.material = i;
        for (int r = 0; r < dim; ++r) ps.x[r] = c.xq[qi * dim + r];
        ps.rho = c.rho[i][qi];
        ps.p = c.p[i][qi];
        double en = 0.0;
        const double* P = &mesh.ene_val[q * mesh.nene];
        for (int b = 0; b < mesh.nene; ++b)
          en += P[b] * s.e[i][mesh.edof(e, b)];
        ps.e = en;
        for (int r = 0; r < dim; ++r) ps.v[r] = vq[r];
        out.push_back(ps);
      }
    }
  }
  return out;
}

GapInfo interface_gap_1d(const Hydro& op, const StageCache& c,
                         const State& s) {
  const Mesh& mesh = op.mesh();
  const LevelSet& ls = op.levelset();
  GapInfo gi;
  if (mesh.dim != 1) return gi;
  for (int e : op.topo().cut_elems) {
    // bisection for the indicator zero in reference coords
    double a = 0.0, b = 1.0;
    double fa = ls.value(mesh, e, &a);
    double fb = ls.value(mesh, e, &b);
    if (fa == 0.0 && fb == 0.0) continue;
    if (fa * fb > 0.0) continue;
    for (int it = 0; it < 80; ++it) {
      const double m = 0.5 * (a + b);
      const double fm = ls.value(mesh, e, &m);
      if (fa * fm <= 0.0) { b = m; fb = fm; } else { a = m; fa = fm; }
    }
    const double xi = 0.5 * (a + b);
    GeomSample g = mesh.geom(e, &xi, s.x);
    const int k = c.band_idx[e];
    if (k < 0 || !c.band[k].pres_ok[0] || !c.band[k].pres_ok[1]) continue;
    gi.found = true;
    gi.x = g.x[0];
    gi.p1 = c.band[k].pres[0].eval(g.x);
    gi.p2 = c.band[k].pres[1].eval(g.x);
    return gi;
  }
  return gi;
}

void eta_sign_changes(const Mesh& mesh, const LevelSet& ls,
                      std::vector<int>& rows, std::vector<int>& cols) {
  rows.assign(mesh.nx[1], 0);
  cols.assign(mesh.nx[0], 0);
  for (int iy = 0; iy < mesh.nx[1]; ++iy) {
    int prev = 0;
    for (int ix = 0; ix < mesh.nx[0]; ++ix) {
      const double v = ls.eta[mesh.node_index(ix, iy)];
      const int sg = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
      if (sg != 0) {
        if (prev != 0 && sg != prev) rows[iy]++;
        prev = sg;
      }
    }
  }
  if (mesh.dim == 2) {
    for (int ix = 0; ix < mesh.nx[0]; ++ix) {
      int prev = 0;
      for (int iy = 0; iy < mesh.nx[1]; ++iy) {
        const double v = ls.eta[mesh.node_index(ix, iy)];
        const int sg = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (sg != 0) {
          if (prev != 0 && sg != prev) cols[ix]++;
          prev = sg;
        }
      }
    }
  }
}

}  // namespace hydro
