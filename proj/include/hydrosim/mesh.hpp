// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <vector>

#include "hydrosim/lagrange.hpp"
#include "hydrosim/quadrature.hpp"

namespace hydro {

// Geometry sample at one reference point of one element.
struct GeomSample {
  double x[2];        // physical position
  double J[4];        // Jacobian dx_r/dxi_c, row-major (dim x dim)
  double detJ;
  double invJ[4];
  bool valid;         // detJ > 0
};

// Interior mesh face between two axis-neighbors.  elo has the lower
// coordinate along `axis`; the face sits at reference coordinate 1 of elo
// and 0 of ehi along that axis.
struct MeshFace {
  int elo, ehi;
  int axis;  // normal direction (0 = x, 1 = y)
};

// Cartesian block mesh of Q_m quad/segment elements with a continuous
// kinematic space (order m, shared Gauss-Lobatto nodes, isoparametric
// geometry) and a discontinuous thermodynamic space (order m-1, per-element
// DOFs).  Node motion is carried externally as a coordinate vector so that
// several configurations (initial, current, stage) can coexist.
struct Mesh {
  int dim = 1;
  int order = 2;            // m
  int ne[2] = {1, 1};       // elements per axis
  double lo[2] = {0.0, 0.0};
  double hi[2] = {1.0, 1.0};

  TensorBasis kin;          // kinematic / geometry basis, order m
  TensorBasis ene;          // thermodynamic basis, order m-1
  int nkin = 0;             // kinematic DOFs per element
  int nene = 0;             // thermodynamic DOFs per element
  int nelems = 0;
  int nnodes = 0;           // global kinematic nodes
  int nx[2] = {1, 1};       // global node grid extents

  std::vector<int> conn;        // nelems*nkin global node ids
  std::vector<double> nodes0;   // initial coordinates, nnodes*dim
  std::vector<MeshFace> faces;  // interior faces

  // default volumetric quadrature: per-axis Gauss-Legendre exact to 3m+1
  TensorRule vol;
  // precomputed kinematic/thermodynamic basis tables at vol points
  std::vector<double> kin_val, kin_grad;  // [q*nkin + a], [q*nkin*dim + ...]
  std::vector<double> ene_val;            // [q*nene + b]
  // 1D face rule along a face (2D); exact to degree 3m+1
  Rule1D face_rule;

  Mesh() = default;
  Mesh(int dim_, int order_, int nex, int ney, const double* lo_,
       const double* hi_, int quad_degree = -1);

  int elem_index(int ex, int ey) const { return ex + ne[0] * ey; }
  int node_index(int ix, int iy) const { return ix + nx[0] * iy; }
  int edof(int e, int b) const { return e * nene + b; }

  double h0(int axis) const { return (hi[axis] - lo[axis]) / ne[axis]; }

  void gather_nodes(int e, const std::vector<double>& X, double* out) const;
  GeomSample geom(int e, const double* xi, const std::vector<double>& X) const;

  // reference coords in element e of the face point: face parameter s in
  // [0,1] along the face of `face` as seen from the given side
  void face_ref_point(const MeshFace& f, bool lo_side, double s,
                      double* xi) const;

  // evaluate a kinematic-space scalar field (nodal vector size nnodes)
  double eval_kin_scalar(int e, const double* xi, const std::vector<double>& f,
                         double* ref_grad = nullptr) const;
  // physical gradient wrt configuration X
  void eval_kin_scalar_grad(int e, const double* xi,
                            const std::vector<double>& f,
                            const std::vector<double>& X, double& val,
                            double* grad) const;

  // Newton inverse map: find xi with x(xi; X) = target in element e.
  // Returns true if converged with xi in [-tol_box, 1+tol_box]^dim
  // (xi clamped to [0,1]^dim on output).
  bool locate(int e, const double* target, const std::vector<double>& X,
              double* xi, double tol_box = 0.05) const;

  // nodes on the domain boundary whose `comp` velocity component is
  // constrained by a slip wall on that axis
  std::vector<std::pair<int, int>> boundary_normal_dofs() const;

  // neighbor element across +/- direction of axis, or -1
  int neighbor(int e, int axis, int dir) const;
};

}  // namespace hydro
