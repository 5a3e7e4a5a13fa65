// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace hydro {

Mesh::Mesh(int dim_, int order_, int nex, int ney, const double* lo_,
           const double* hi_, int quad_degree) {
  dim = dim_;
  order = order_;
  if (dim < 1 || dim > 2) throw std::invalid_argument("mesh: dim must be 1 or 2");
  if (order < 1 || order > 8) throw std::invalid_argument("mesh: bad order");
  ne[0] = nex;
  ne[1] = dim == 2 ? ney : 1;
  for (int a = 0; a < 2; ++a) { lo[a] = lo_ ? lo_[a] : 0.0; hi[a] = hi_ ? hi_[a] : 1.0; }

  kin = TensorBasis(dim, order, true);
  ene = TensorBasis(dim, order - 1, true);
  nkin = kin.ndof();
  nene = ene.ndof();
  nelems = ne[0] * (dim == 2 ? ne[1] : 1);

  nx[0] = ne[0] * order + 1;
  nx[1] = dim == 2 ? ne[1] * order + 1 : 1;
  nnodes = nx[0] * nx[1];

  // connectivity: element (ex,ey), local node (a,b) -> global (ex*m+a, ey*m+b)
  conn.resize(static_cast<size_t>(nelems) * nkin);
  const int npa = order + 1;
  for (int ey = 0; ey < (dim == 2 ? ne[1] : 1); ++ey)
    for (int ex = 0; ex < ne[0]; ++ex) {
      const int e = elem_index(ex, ey);
      int a = 0;
      for (int j = 0; j < (dim == 2 ? npa : 1); ++j)
        for (int i = 0; i < npa; ++i, ++a)
          conn[e * nkin + a] = node_index(ex * order + i, ey * order + j);
    }

  // initial coordinates from the Lobatto node layout
  const auto& nds = kin.line.nodes;
  nodes0.resize(static_cast<size_t>(nnodes) * dim);
  for (int iy = 0; iy < nx[1]; ++iy)
    for (int ix = 0; ix < nx[0]; ++ix) {
      const int n = node_index(ix, iy);
      const int ex = ix == nx[0] - 1 ? ne[0] - 1 : ix / order;
      const int i = ix - ex * order;
      nodes0[n * dim + 0] = lo[0] + (ex + nds[i]) * h0(0);
      if (dim == 2) {
        const int ey = iy == nx[1] - 1 ? ne[1] - 1 : iy / order;
        const int j = iy - ey * order;
        nodes0[n * dim + 1] = lo[1] + (ey + nds[j]) * h0(1);
      }
    }

  // interior faces
  for (int ey = 0; ey < (dim == 2 ? ne[1] : 1); ++ey)
    for (int ex = 0; ex < ne[0]; ++ex) {
      if (ex + 1 < ne[0])
        faces.push_back({elem_index(ex, ey), elem_index(ex + 1, ey), 0});
      if (dim == 2 && ey + 1 < ne[1])
        faces.push_back({elem_index(ex, ey), elem_index(ex, ey + 1), 1});
    }

  // quadrature and basis tables
  const int qdeg = quad_degree > 0 ? quad_degree : 3 * order + 1;
  vol = tensor_rule(gauss_legendre_for_degree(qdeg), dim);
  face_rule = gauss_legendre_for_degree(qdeg);
  const int nq = vol.npts();
  kin_val.resize(static_cast<size_t>(nq) * nkin);
  kin_grad.resize(static_cast<size_t>(nq) * nkin * dim);
  ene_val.resize(static_cast<size_t>(nq) * nene);
  std::vector<double> ev(nene);
  for (int q = 0; q < nq; ++q) {
    kin.eval(&vol.pts[q * dim], &kin_val[q * nkin], &kin_grad[q * nkin * dim]);
    ene.eval(&vol.pts[q * dim], ev.data(), nullptr);
    for (int b = 0; b < nene; ++b) ene_val[q * nene + b] = ev[b];
  }
}

void Mesh::gather_nodes(int e, const std::vector<double>& X, double* out) const {
  for (int a = 0; a < nkin; ++a) {
    const int n = conn[e * nkin + a];
    for (int c = 0; c < dim; ++c) out[a * dim + c] = X[n * dim + c];
  }
}

GeomSample Mesh::geom(int e, const double* xi, const std::vector<double>& X) const {
  double val[81], grad[162];
  kin.eval(xi, val, grad);
  GeomSample g{};
  for (int c = 0; c < 4; ++c) g.J[c] = 0.0;
  g.x[0] = g.x[1] = 0.0;
  for (int a = 0; a < nkin; ++a) {
    const int n = conn[e * nkin + a];
    for (int r = 0; r < dim; ++r) {
      const double xr = X[n * dim + r];
      g.x[r] += val[a] * xr;
      for (int c = 0; c < dim; ++c) g.J[r * dim + c] += xr * grad[a * dim + c];
    }
  }
  if (dim == 1) {
    g.detJ = g.J[0];
    g.invJ[0] = 1.0 / g.J[0];
  } else {
    g.detJ = g.J[0] * g.J[3] - g.J[1] * g.J[2];
    const double id = 1.0 / g.detJ;
    g.invJ[0] = g.J[3] * id;
    g.invJ[1] = -g.J[1] * id;
    g.invJ[2] = -g.J[2] * id;
    g.invJ[3] = g.J[0] * id;
  }
  g.valid = g.detJ > 0.0;
  return g;
}

void Mesh::face_ref_point(const MeshFace& f, bool lo_side, double s,
                          double* xi) const {
  if (dim == 1) {
    xi[0] = lo_side ? 1.0 : 0.0;
    return;
  }
  if (f.axis == 0) {
    xi[0] = lo_side ? 1.0 : 0.0;
    xi[1] = s;
  } else {
    xi[0] = s;
    xi[1] = lo_side ? 1.0 : 0.0;
  }
}

double Mesh::eval_kin_scalar(int e, const double* xi,
                             const std::vector<double>& f,
                             double* ref_grad) const {
  double val[81], grad[162];
  kin.eval(xi, val, ref_grad ? grad : nullptr);
  double acc = 0.0;
  if (ref_grad)
    for (int c = 0; c < dim; ++c) ref_grad[c] = 0.0;
  for (int a = 0; a < nkin; ++a) {
    const double fa = f[conn[e * nkin + a]];
    acc += val[a] * fa;
    if (ref_grad)
      for (int c = 0; c < dim; ++c) ref_grad[c] += fa * grad[a * dim + c];
  }
  return acc;
}

void Mesh::eval_kin_scalar_grad(int e, const double* xi,
                                const std::vector<double>& f,
                                const std::vector<double>& X, double& val,
                                double* grad) const {
  double rg[2];
  val = eval_kin_scalar(e, xi, f, rg);
  GeomSample g = geom(e, xi, X);
  // grad_x = J^{-T} grad_xi
  for (int r = 0; r < dim; ++r) {
    grad[r] = 0.0;
    for (int c = 0; c < dim; ++c) grad[r] += g.invJ[c * dim + r] * rg[c];
  }
}

bool Mesh::locate(int e, const double* target, const std::vector<double>& X,
                  double* xi, double tol_box) const {
  for (int c = 0; c < dim; ++c) xi[c] = 0.5;
  for (int it = 0; it < 30; ++it) {
    GeomSample g = geom(e, xi, X);
    double r[2] = {g.x[0] - target[0], dim == 2 ? g.x[1] - target[1] : 0.0};
    double nr = std::abs(r[0]) + std::abs(r[1]);
    double dxi[2] = {0.0, 0.0};
    for (int a = 0; a < dim; ++a)
      for (int c = 0; c < dim; ++c) dxi[a] += g.invJ[a * dim + c] * r[c];
    for (int c = 0; c < dim; ++c) xi[c] -= dxi[c];
    if (nr < 1e-13) break;
    // keep Newton from running away on curved elements
    for (int c = 0; c < dim; ++c) xi[c] = std::min(2.0, std::max(-1.0, xi[c]));
  }
  GeomSample g = geom(e, xi, X);
  double err = std::abs(g.x[0] - target[0]) +
               (dim == 2 ? std::abs(g.x[1] - target[1]) : 0.0);
  bool inside = err < 1e-9 * (std::abs(hi[0] - lo[0]) + 1.0);
  for (int c = 0; c < dim; ++c) {
    if (xi[c] < -tol_box || xi[c] > 1.0 + tol_box) inside = false;
    xi[c] = std::min(1.0, std::max(0.0, xi[c]));
  }
  return inside;
}

std::vector<std::pair<int, int>> Mesh::boundary_normal_dofs() const {
  std::vector<std::pair<int, int>> out;
  for (int iy = 0; iy < nx[1]; ++iy)
    for (int ix = 0; ix < nx[0]; ++ix) {
      const int n = node_index(ix, iy);
      if (ix == 0 || ix == nx[0] - 1) out.push_back({n, 0});
      if (dim == 2 && (iy == 0 || iy == nx[1] - 1)) out.push_back({n, 1});
    }
  return out;
}

int Mesh::neighbor(int e, int axis, int dir) const {
  int ex = e % ne[0];
  int ey = e / ne[0];
  if (axis == 0) ex += dir; else ey += dir;
  if (ex < 0 || ex >= ne[0] || ey < 0 || ey >= (dim == 2 ? ne[1] : 1)) return -1;
  return elem_index(ex, ey);
}

}  // namespace hydro
