// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/shift.hpp"

#include <algorithm>
#include <cmath>

namespace hydro {

std::vector<FaceData> build_face_data(const Mesh& mesh, const LevelSet& ls,
                                      const Topology& topo,
                                      const std::vector<double>& X,
                                      int* invalid_normals) {
  std::vector<FaceData> out;
  int bad = 0;
  for (int fi : topo.active_faces) {
    const MeshFace& f = mesh.faces[fi];
    FaceData fd;
    fd.fi = fi;
    fd.set = topo.face_set[fi];
    const bool plus_lo = topo.face_plus_lo[fi] != 0;
    fd.ep = plus_lo ? f.elo : f.ehi;
    fd.em = plus_lo ? f.ehi : f.elo;
    fd.cut_is_plus = topo.cls[fd.ep] == ElemClass::Cut;

    const int nq = mesh.dim == 2 ? mesh.face_rule.n() : 1;
    fd.qps.resize(nq);
    for (int q = 0; q < nq; ++q) {
      FaceQP& qp = fd.qps[q];
      const double s = mesh.dim == 2 ? mesh.face_rule.x[q] : 0.5;
      const double ws = mesh.dim == 2 ? mesh.face_rule.w[q] : 1.0;
      mesh.face_ref_point(f, plus_lo, s, qp.xi_p);
      mesh.face_ref_point(f, !plus_lo, s, qp.xi_m);

      GeomSample g = mesh.geom(fd.ep, qp.xi_p, X);
      qp.x[0] = g.x[0];
      qp.x[1] = mesh.dim == 2 ? g.x[1] : 0.0;
      if (mesh.dim == 1) {
        qp.w = ws;
        qp.nplus[0] = plus_lo ? 1.0 : -1.0;
      } else {
        const int taxis = 1 - f.axis;
        const double tx = g.J[0 * 2 + taxis];
        const double ty = g.J[1 * 2 + taxis];
        const double measure = std::sqrt(tx * tx + ty * ty);
        qp.w = ws * measure;
        // outward reference normal of the plus element, pushed forward
        const double sgn = plus_lo ? 1.0 : -1.0;
        double n0 = sgn * g.invJ[f.axis * 2 + 0];
        double n1 = sgn * g.invJ[f.axis * 2 + 1];
        const double nn = std::sqrt(n0 * n0 + n1 * n1);
        qp.nplus[0] = n0 / nn;
        qp.nplus[1] = n1 / nn;
      }

      // distance data from the side containing the interface
      int de = fd.ep;
      const double* dxi = qp.xi_p;
      if (fd.set != FaceSet::CutInterior && !fd.cut_is_plus) {
        de = fd.em;
        dxi = qp.xi_m;
      }
      qp.dist = distance_sample(mesh, ls, X, de, dxi);
      if (!qp.dist.valid) ++bad;
    }
    out.push_back(std::move(fd));
  }
  if (invalid_normals) *invalid_normals = bad;
  return out;
}

std::vector<int> band_elements(const Mesh& mesh, const Topology& topo) {
  std::vector<char> in(mesh.nelems, 0);
  for (int fi : topo.active_faces) {
    in[mesh.faces[fi].elo] = 1;
    in[mesh.faces[fi].ehi] = 1;
  }
  std::vector<int> out;
  for (int e = 0; e < mesh.nelems; ++e)
    if (in[e]) out.push_back(e);
  return out;
}

}  // namespace hydro
