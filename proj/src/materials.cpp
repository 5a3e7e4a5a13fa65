// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/materials.hpp"

namespace hydro {

void Materials::init(const Mesh& mesh, const Topology& topo,
                     const std::function<double(const double*)> rho0[2],
                     int recon_deg_) {
  recon_deg = recon_deg_;
  rec = tensor_rule(gauss_legendre(recon_deg + 2), mesh.dim);

  const int ns = rec.npts();
  ene_rec.resize(static_cast<size_t>(ns) * mesh.nene);
  for (int s = 0; s < ns; ++s)
    mesh.ene.eval(&rec.pts[s * mesh.dim], &ene_rec[s * mesh.nene], nullptr);

  const int nq = mesh.vol.npts();
  detJ0_vol.resize(static_cast<size_t>(mesh.nelems) * nq);
  detJ0_rec.resize(static_cast<size_t>(mesh.nelems) * ns);
  for (int i = 0; i < 2; ++i) {
    rho0a0_vol[i].assign(static_cast<size_t>(mesh.nelems) * nq, 0.0);
    rho0a0_rec[i].assign(static_cast<size_t>(mesh.nelems) * ns, 0.0);
    active[i].assign(mesh.nelems, 0);
  }

  for (int e = 0; e < mesh.nelems; ++e) {
    const double a0[2] = {topo.alpha0[e], 1.0 - topo.alpha0[e]};
    for (int i = 0; i < 2; ++i) active[i][e] = a0[i] > 0.0 ? 1 : 0;
    for (int q = 0; q < nq; ++q) {
      GeomSample g = mesh.geom(e, &mesh.vol.pts[q * mesh.dim], mesh.nodes0);
      detJ0_vol[e * nq + q] = g.detJ;
      for (int i = 0; i < 2; ++i)
        if (active[i][e])
          rho0a0_vol[i][e * nq + q] = a0[i] * rho0[i](g.x);
    }
    for (int s = 0; s < ns; ++s) {
      GeomSample g = mesh.geom(e, &rec.pts[s * mesh.dim], mesh.nodes0);
      detJ0_rec[e * ns + s] = g.detJ;
      for (int i = 0; i < 2; ++i)
        if (active[i][e])
          rho0a0_rec[i][e * ns + s] = a0[i] * rho0[i](g.x);
    }
  }
}

void Materials::local_frame(const Mesh& mesh, const std::vector<double>& X,
                            int e, double center[2], double& scale) {
  // vertex nodes are the corners of the tensor connectivity
  const int n = mesh.order + 1;
  int corners[4];
  int ncor;
  if (mesh.dim == 1) {
    corners[0] = 0;
    corners[1] = n - 1;
    ncor = 2;
  } else {
    corners[0] = 0;
    corners[1] = n - 1;
    corners[2] = n * (n - 1);
    corners[3] = n * n - 1;
    ncor = 4;
  }
  center[0] = center[1] = 0.0;
  for (int k = 0; k < ncor; ++k) {
    const int gn = mesh.conn[e * mesh.nkin + corners[k]];
    for (int c = 0; c < mesh.dim; ++c) center[c] += X[gn * mesh.dim + c];
  }
  for (int c = 0; c < mesh.dim; ++c) center[c] /= ncor;
  double s2 = 0.0;
  for (int k = 0; k < ncor; ++k) {
    const int gn = mesh.conn[e * mesh.nkin + corners[k]];
    double d2 = 0.0;
    for (int c = 0; c < mesh.dim; ++c) {
      const double d = X[gn * mesh.dim + c] - center[c];
      d2 += d * d;
    }
    s2 = std::max(s2, d2);
  }
  scale = std::max(std::sqrt(s2), 1e-300);
}

bool Materials::reconstruct_pressure(const Mesh& mesh,
                                     const std::vector<double>& X,
                                     const std::vector<double>& alpha, int i,
                                     int e, const std::vector<double>& edofs,
                                     TensorPoly& out) const {
  const int ns = rec.npts();
  const double ai = i == 0 ? alpha[e] : 1.0 - alpha[e];
  std::vector<double> pts(static_cast<size_t>(ns) * mesh.dim);
  std::vector<double> vals(ns);
  for (int s = 0; s < ns; ++s) {
    GeomSample g = mesh.geom(e, &rec.pts[s * mesh.dim], X);
    for (int c = 0; c < mesh.dim; ++c) pts[s * mesh.dim + c] = g.x[c];
    const double jdef = g.detJ / detJ0_rec[e * ns + s];
    const double rho = density(rho0a0_rec[i][e * ns + s], jdef, ai);
    double en = 0.0;
    for (int b = 0; b < mesh.nene; ++b)
      en += ene_rec[s * mesh.nene + b] * edofs[mesh.edof(e, b)];
    vals[s] = eos[i].pressure(rho, en);
  }
  double center[2];
  double scale;
  local_frame(mesh, X, e, center, scale);
  return fit_poly(mesh.dim, recon_deg, center, scale, pts, vals, out);
}

}  // namespace hydro
