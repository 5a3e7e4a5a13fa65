// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/levelset.hpp"

#include <cmath>

namespace hydro {

void LevelSet::init(const Mesh& mesh,
                    const std::function<double(const double*)>& f) {
  eta.resize(mesh.nnodes);
  for (int n = 0; n < mesh.nnodes; ++n) eta[n] = f(&mesh.nodes0[n * mesh.dim]);
}

DistSample distance_sample(const Mesh& mesh, const LevelSet& ls,
                           const std::vector<double>& X, int e,
                           const double* xi) {
  DistSample s;
  double val, grad[2] = {0, 0};
  mesh.eval_kin_scalar_grad(e, xi, ls.eta, X, val, grad);
  double gn2 = grad[0] * grad[0] + (mesh.dim == 2 ? grad[1] * grad[1] : 0.0);
  double gn = std::sqrt(gn2);
  if (gn < 1e-300) {  // degenerate gradient: no usable direction
    s.dist = 0.0;
    s.valid = false;
    return s;
  }
  s.dist = val / std::sqrt(val * val + gn2);
  for (int c = 0; c < mesh.dim; ++c) {
    s.n_true[c] = grad[c] / gn;
    s.d_vec[c] = -s.dist * grad[c] / gn;
  }

  // re-evaluate the normal at the shifted point
  GeomSample g = mesh.geom(e, xi, X);
  double target[2] = {g.x[0] + s.d_vec[0],
                      mesh.dim == 2 ? g.x[1] + s.d_vec[1] : 0.0};
  int cands[9];
  int nc = 0;
  cands[nc++] = e;
  for (int dy = (mesh.dim == 2 ? -1 : 0); dy <= (mesh.dim == 2 ? 1 : 0); ++dy)
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      int ex = e % mesh.ne[0] + dx;
      int ey = e / mesh.ne[0] + dy;
      if (ex < 0 || ex >= mesh.ne[0]) continue;
      if (mesh.dim == 2 && (ey < 0 || ey >= mesh.ne[1])) continue;
      cands[nc++] = mesh.elem_index(ex, ey);
    }
  bool found = false;
  for (int k = 0; k < nc && !found; ++k) {
    double xi2[2];
    if (mesh.locate(cands[k], target, X, xi2)) {
      double v2, g2[2] = {0, 0};
      mesh.eval_kin_scalar_grad(cands[k], xi2, ls.eta, X, v2, g2);
      double n2 = std::sqrt(g2[0] * g2[0] +
                            (mesh.dim == 2 ? g2[1] * g2[1] : 0.0));
      if (n2 > 1e-300) {
        for (int c = 0; c < mesh.dim; ++c) s.n_true[c] = g2[c] / n2;
        found = true;
      }
    }
  }
  s.valid = found;
  return s;
}

}  // namespace hydro
