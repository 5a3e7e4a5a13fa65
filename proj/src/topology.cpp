// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/topology.hpp"

#include <cmath>

namespace hydro {

namespace {

// length fraction of {linear >= 0} on a segment with endpoint values a, b
double cell_fraction_1d(double a, double b) {
  if (a >= 0.0 && b >= 0.0) return 1.0;
  if (a <= 0.0 && b <= 0.0) return 0.0;
  const double t = a / (a - b);  // zero crossing
  return a > 0.0 ? t : 1.0 - t;
}

// area fraction of {plane >= 0} on a unit cell; the plane is the least-
// squares linear fit of the four corner values, clipped exactly
double cell_fraction_2d(double v00, double v10, double v01, double v11) {
  const double c = 0.25 * (v00 + v10 + v01 + v11);
  const double a = 0.5 * ((v10 - v00) + (v11 - v01));
  const double b = 0.5 * ((v01 - v00) + (v11 - v10));
  // clip the unit square against a*(x-1/2) + b*(y-1/2) + c >= 0
  double px[8] = {0, 1, 1, 0}, py[8] = {0, 0, 1, 1};
  double qx[8], qy[8];
  int n = 4, m = 0;
  auto lvl = [&](double x, double y) {
    return a * (x - 0.5) + b * (y - 0.5) + c;
  };
  for (int k = 0; k < n; ++k) {
    const int k1 = (k + 1) % n;
    const double fa = lvl(px[k], py[k]);
    const double fb = lvl(px[k1], py[k1]);
    if (fa >= 0.0) { qx[m] = px[k]; qy[m] = py[k]; ++m; }
    if ((fa > 0.0 && fb < 0.0) || (fa < 0.0 && fb > 0.0)) {
      const double t = fa / (fa - fb);
      qx[m] = px[k] + t * (px[k1] - px[k]);
      qy[m] = py[k] + t * (py[k1] - py[k]);
      ++m;
    }
  }
  double area2 = 0.0;
  for (int k = 0; k < m; ++k) {
    const int k1 = (k + 1) % m;
    area2 += qx[k] * qy[k1] - qx[k1] * qy[k];
  }
  return std::min(1.0, std::max(0.0, 0.5 * area2));
}

}  // namespace

void Topology::build(const Mesh& mesh, const LevelSet& ls, int lattice_points) {
  const int nel = mesh.nelems;
  cls.assign(nel, ElemClass::Pure1);
  alpha0.assign(nel, 1.0);
  cut_index.assign(nel, -1);
  cut_elems.clear();
  frac.clear();

  double emax = 0.0;
  for (double v : ls.eta) emax = std::max(emax, std::abs(v));
  // values within tol of zero count as material 1 ("positive")
  const double tol = 1e-14 * std::max(emax, 1e-300);

  // classify from indicator signs at geometry nodes and volumetric points
  for (int e = 0; e < nel; ++e) {
    int npos = 0, nneg = 0;
    for (int a = 0; a < mesh.nkin; ++a) {
      const double v = ls.eta[mesh.conn[e * mesh.nkin + a]];
      if (v > tol) ++npos;
      else if (v < -tol) ++nneg;
    }
    for (int q = 0; q < mesh.vol.npts(); ++q) {
      const double v = ls.value(mesh, e, &mesh.vol.pts[q * mesh.dim]);
      if (v > tol) ++npos;
      else if (v < -tol) ++nneg;
    }
    if (nneg == 0) cls[e] = ElemClass::Pure1;
    else if (npos == 0) cls[e] = ElemClass::Pure2;
    else cls[e] = ElemClass::Cut;
  }

  // midpoint lattice of G^dim cells per cut element
  const int G = lattice_points;
  Rule1D mid;
  mid.x.resize(G);
  mid.w.resize(G);
  for (int i = 0; i < G; ++i) {
    mid.x[i] = (i + 0.5) / G;
    mid.w[i] = 1.0 / G;
  }
  lat = tensor_rule(mid, mesh.dim);
  const int nl = lat.npts();

  // per-cell material-1 fractions from the linearized indicator, and the
  // t=0 volume fractions; slivers get reclassified as pure
  sliver_reclassified = 0;
  std::vector<double> corner((G + 1) * (mesh.dim == 2 ? G + 1 : 1));
  for (int e = 0; e < nel; ++e) {
    if (cls[e] != ElemClass::Cut) {
      alpha0[e] = cls[e] == ElemClass::Pure1 ? 1.0 : 0.0;
      continue;
    }
    // indicator at the lattice cell corners (reference coordinates)
    if (mesh.dim == 1) {
      for (int i = 0; i <= G; ++i) {
        const double xi = static_cast<double>(i) / G;
        corner[i] = ls.value(mesh, e, &xi);
      }
    } else {
      for (int j = 0; j <= G; ++j)
        for (int i = 0; i <= G; ++i) {
          const double xi[2] = {static_cast<double>(i) / G,
                                static_cast<double>(j) / G};
          corner[j * (G + 1) + i] = ls.value(mesh, e, xi);
        }
    }
    std::vector<double> fr(nl);
    for (int s = 0; s < nl; ++s) {
      if (mesh.dim == 1) {
        fr[s] = cell_fraction_1d(corner[s], corner[s + 1]);
      } else {
        const int i = s % G, j = s / G;
        fr[s] = cell_fraction_2d(corner[j * (G + 1) + i],
                                 corner[j * (G + 1) + i + 1],
                                 corner[(j + 1) * (G + 1) + i],
                                 corner[(j + 1) * (G + 1) + i + 1]);
      }
    }
    double num = 0.0, den = 0.0;
    for (int s = 0; s < nl; ++s) {
      GeomSample g = mesh.geom(e, &lat.pts[s * mesh.dim], mesh.nodes0);
      den += lat.wts[s] * g.detJ;
      num += lat.wts[s] * fr[s] * g.detJ;
    }
    const double a1 = num / den;
    if (a1 < 1e-10) {
      cls[e] = ElemClass::Pure2;
      alpha0[e] = 0.0;
      ++sliver_reclassified;
    } else if (1.0 - a1 < 1e-10) {
      cls[e] = ElemClass::Pure1;
      alpha0[e] = 1.0;
      ++sliver_reclassified;
    } else {
      alpha0[e] = a1;
      cut_index[e] = static_cast<int>(cut_elems.size());
      cut_elems.push_back(e);
      frac.insert(frac.end(), fr.begin(), fr.end());
    }
  }

  // face sets
  const int nf = static_cast<int>(mesh.faces.size());
  face_set.assign(nf, FaceSet::None);
  face_plus_lo.assign(nf, 1);
  active_faces.clear();
  for (int fi = 0; fi < nf; ++fi) {
    const MeshFace& f = mesh.faces[fi];
    const ElemClass c0 = cls[f.elo], c1 = cls[f.ehi];

    // the face itself cut: indicator changes sign along it
    int npos = 0, nneg = 0;
    const int ns = mesh.dim == 2 ? mesh.face_rule.n() + 2 : 1;
    for (int s = 0; s < ns; ++s) {
      double sp = 0.5;
      if (mesh.dim == 2)
        sp = s == 0 ? 0.0 : (s == 1 ? 1.0 : mesh.face_rule.x[s - 2]);
      double xi[2];
      mesh.face_ref_point(f, true, sp, xi);
      const double v = ls.value(mesh, f.elo, xi);
      if (v > tol) ++npos;
      else if (v < -tol) ++nneg;
    }
    if (npos > 0 && nneg > 0 &&
        (c0 == ElemClass::Cut || c1 == ElemClass::Cut)) {
      face_set[fi] = FaceSet::CutInterior;
    } else if (c0 == ElemClass::Cut && c1 == ElemClass::Pure1) {
      face_set[fi] = FaceSet::Surrogate1;
    } else if (c0 == ElemClass::Pure1 && c1 == ElemClass::Cut) {
      face_set[fi] = FaceSet::Surrogate1;
    } else if (c0 == ElemClass::Cut && c1 == ElemClass::Pure2) {
      face_set[fi] = FaceSet::Surrogate2;
    } else if (c0 == ElemClass::Pure2 && c1 == ElemClass::Cut) {
      face_set[fi] = FaceSet::Surrogate2;
    }
    if (face_set[fi] != FaceSet::None) {
      // '+' is the material-1-richer side; ties go to the elo element
      face_plus_lo[fi] = alpha0[f.elo] >= alpha0[f.ehi] ? 1 : 0;
      active_faces.push_back(fi);
    }
  }
}

std::vector<double> Topology::alpha1(const Mesh& mesh,
                                     const std::vector<double>& X) const {
  std::vector<double> a(mesh.nelems);
  for (int e = 0; e < mesh.nelems; ++e) {
    if (cls[e] == ElemClass::Pure1) { a[e] = 1.0; continue; }
    if (cls[e] == ElemClass::Pure2) { a[e] = 0.0; continue; }
    const int ci = cut_index[e];
    const int nl = lat.npts();
    double num = 0.0, den = 0.0;
    for (int s = 0; s < nl; ++s) {
      GeomSample g = mesh.geom(e, &lat.pts[s * mesh.dim], X);
      den += lat.wts[s] * g.detJ;
      num += lat.wts[s] * frac[ci * nl + s] * g.detJ;
    }
    a[e] = num / den;
  }
  return a;
}

}  // namespace hydro
