// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/assembly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace hydro {

static void sym_min_eig(const double* g, int dim, double& lam, double* evec) {
  if (dim == 1) {
    lam = g[0];
    evec[0] = 1.0;
    return;
  }
  const double a = g[0], b = 0.5 * (g[1] + g[2]), c = g[3];
  const double mean = 0.5 * (a + c);
  const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
  lam = mean - disc;
  double vx = b, vy = lam - a;
  double n = std::sqrt(vx * vx + vy * vy);
  if (n < 1e-14 * (std::abs(a) + std::abs(c) + std::abs(b) + 1e-300)) {
    // (near-)diagonal tensor: eigenvector along an axis
    if (a <= c) { vx = 1.0; vy = 0.0; } else { vx = 0.0; vy = 1.0; }
    n = 1.0;
  }
  evec[0] = vx / n;
  evec[1] = vy / n;
}

Hydro::Hydro(const Mesh& mesh, const LevelSet& ls, const Topology& topo,
             const Materials& mat, AssemblyConfig cfg)
    : mesh_(mesh), ls_(ls), topo_(topo), mat_(mat), cfg_(cfg) {
  const int dim = mesh_.dim;
  bdofs_ = mesh_.boundary_normal_dofs();
  for (int c = 0; c < 2; ++c) constrained_[c].assign(mesh_.nnodes, 0);
  for (auto& [n, c] : bdofs_) constrained_[c][n] = 1;

  // kinematic mass matrix: weight (alpha1 rho1 + alpha2 rho2) dV is constant
  // in time and equals the cached initial products times detJ0
  const int nq = mesh_.vol.npts();
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<size_t>(mesh_.nelems) * mesh_.nkin * mesh_.nkin);
  for (int e = 0; e < mesh_.nelems; ++e) {
    Eigen::MatrixXd Me = Eigen::MatrixXd::Zero(mesh_.nkin, mesh_.nkin);
    for (int q = 0; q < nq; ++q) {
      const double w = mesh_.vol.wts[q] * mat_.detJ0_vol[e * nq + q] *
                       (mat_.rho0a0_vol[0][e * nq + q] +
                        mat_.rho0a0_vol[1][e * nq + q]);
      const double* N = &mesh_.kin_val[q * mesh_.nkin];
      for (int a = 0; a < mesh_.nkin; ++a)
        for (int b = 0; b < mesh_.nkin; ++b) Me(a, b) += w * N[a] * N[b];
    }
    for (int a = 0; a < mesh_.nkin; ++a)
      for (int b = 0; b < mesh_.nkin; ++b)
        trips.emplace_back(mesh_.conn[e * mesh_.nkin + a],
                           mesh_.conn[e * mesh_.nkin + b], Me(a, b));
  }
  Eigen::SparseMatrix<double> M(mesh_.nnodes, mesh_.nnodes);
  M.setFromTriplets(trips.begin(), trips.end());

  for (int comp = 0; comp < dim; ++comp) {
    Eigen::SparseMatrix<double> Mc = M;
    // strong slip: identity rows/cols on constrained nodes
    for (int k = 0; k < Mc.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(Mc, k); it; ++it) {
        if (constrained_[comp][it.row()] || constrained_[comp][it.col()])
          it.valueRef() = it.row() == it.col() ? 1.0 : 0.0;
      }
    Mc.prune(0.0);
    mass_solver_[comp] =
        std::make_unique<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>();
    mass_solver_[comp]->compute(Mc);
  }

  // per-element thermodynamic mass inverses (also time-constant)
  for (int i = 0; i < 2; ++i)
    emass_inv_[i].assign(
        static_cast<size_t>(mesh_.nelems) * mesh_.nene * mesh_.nene, 0.0);
  for (int e = 0; e < mesh_.nelems; ++e)
    for (int i = 0; i < 2; ++i) {
      if (!mat_.active[i][e]) continue;
      Eigen::MatrixXd Me = Eigen::MatrixXd::Zero(mesh_.nene, mesh_.nene);
      for (int q = 0; q < nq; ++q) {
        const double w = mesh_.vol.wts[q] * mat_.detJ0_vol[e * nq + q] *
                         mat_.rho0a0_vol[i][e * nq + q];
        const double* P = &mesh_.ene_val[q * mesh_.nene];
        for (int a = 0; a < mesh_.nene; ++a)
          for (int b = 0; b < mesh_.nene; ++b) Me(a, b) += w * P[a] * P[b];
      }
      Eigen::MatrixXd Mi = Me.inverse();
      for (int a = 0; a < mesh_.nene; ++a)
        for (int b = 0; b < mesh_.nene; ++b)
          emass_inv_[i][(static_cast<size_t>(e) * mesh_.nene + a) * mesh_.nene +
                        b] = Mi(a, b);
    }
}

void Hydro::mask_bc(std::vector<double>& v) const {
  for (auto& [n, c] : bdofs_) v[n * mesh_.dim + c] = 0.0;
}

void Hydro::build_cache(const State& s, StageCache& c) const {
  const int dim = mesh_.dim;
  const int nq = mesh_.vol.npts();
  const int nel = mesh_.nelems;
  const int d2 = dim * dim;

  c.geom_valid = true;
  c.alpha = topo_.alpha1(mesh_, s.x);
  c.detJ.assign(static_cast<size_t>(nel) * nq, 0.0);
  c.jdef.assign(static_cast<size_t>(nel) * nq, 0.0);
  c.invJ.assign(static_cast<size_t>(nel) * nq * d2, 0.0);
  c.xq.assign(static_cast<size_t>(nel) * nq * dim, 0.0);
  c.gradv.assign(static_cast<size_t>(nel) * nq * d2, 0.0);
  c.ell.assign(static_cast<size_t>(nel) * nq, 0.0);
  c.dvmin.assign(static_cast<size_t>(nel) * nq, 0.0);
  for (int i = 0; i < 2; ++i) {
    c.rho[i].assign(static_cast<size_t>(nel) * nq, 0.0);
    c.p[i].assign(static_cast<size_t>(nel) * nq, 0.0);
    c.cs[i].assign(static_cast<size_t>(nel) * nq, 0.0);
    c.mu[i].assign(static_cast<size_t>(nel) * nq, 0.0);
    c.sigma[i].assign(static_cast<size_t>(nel) * nq * d2, 0.0);
  }

  const double h0min = dim == 2 ? std::min(mesh_.h0(0), mesh_.h0(1))
                                : mesh_.h0(0);
  double dt_min = 1e300;

  std::vector<double> Xe(static_cast<size_t>(mesh_.nkin) * dim);
  std::vector<double> Ve(static_cast<size_t>(mesh_.nkin) * dim);
  for (int e = 0; e < nel; ++e) {
    mesh_.gather_nodes(e, s.x, Xe.data());
    mesh_.gather_nodes(e, s.v, Ve.data());
    // initial Jacobian (for the deformation gradient) via the same tables
    for (int q = 0; q < nq; ++q) {
      const size_t qi = static_cast<size_t>(e) * nq + q;
      const double* N = &mesh_.kin_val[q * mesh_.nkin];
      const double* G = &mesh_.kin_grad[q * mesh_.nkin * dim];
      double J[4] = {0, 0, 0, 0}, J0[4] = {0, 0, 0, 0}, x[2] = {0, 0};
      for (int a = 0; a < mesh_.nkin; ++a) {
        const int gn = mesh_.conn[e * mesh_.nkin + a];
        for (int r = 0; r < dim; ++r) {
          x[r] += N[a] * Xe[a * dim + r];
          for (int k = 0; k < dim; ++k) {
            J[r * dim + k] += Xe[a * dim + r] * G[a * dim + k];
            J0[r * dim + k] += mesh_.nodes0[gn * dim + r] * G[a * dim + k];
          }
        }
      }
      double detJ, invJ[4];
      if (dim == 1) {
        detJ = J[0];
        invJ[0] = 1.0 / J[0];
      } else {
        detJ = J[0] * J[3] - J[1] * J[2];
        const double id = 1.0 / detJ;
        invJ[0] = J[3] * id; invJ[1] = -J[1] * id;
        invJ[2] = -J[2] * id; invJ[3] = J[0] * id;
      }
      const double jdef = detJ / mat_.detJ0_vol[qi];
      if (!(detJ > 0.0) || !(jdef > 0.0)) {
        c.geom_valid = false;
        return;
      }
      c.detJ[qi] = detJ;
      c.jdef[qi] = jdef;
      for (int k = 0; k < d2; ++k) c.invJ[qi * d2 + k] = invJ[k];
      for (int r = 0; r < dim; ++r) c.xq[qi * dim + r] = x[r];

      // velocity gradient d v_c / d x_r
      double gv[4] = {0, 0, 0, 0};
      for (int a = 0; a < mesh_.nkin; ++a)
        for (int cc = 0; cc < dim; ++cc)
          for (int r = 0; r < dim; ++r) {
            double dndx = 0.0;
            for (int k = 0; k < dim; ++k)
              dndx += invJ[k * dim + r] * G[a * dim + k];
            gv[cc * dim + r] += Ve[a * dim + cc] * dndx;
          }
      for (int k = 0; k < d2; ++k) c.gradv[qi * d2 + k] = gv[k];

      // compression measure and directional length scale
      double sg[4];
      for (int r = 0; r < dim; ++r)
        for (int k = 0; k < dim; ++k)
          sg[r * dim + k] = 0.5 * (gv[r * dim + k] + gv[k * dim + r]);
      double lam, ev[2] = {1.0, 0.0};
      sym_min_eig(sg, dim, lam, ev);
      c.dvmin[qi] = lam;
      // deformation gradient F = J J0^{-1}; length = |F ev| * h0/order.
      // smin is the smallest principal stretch of F: the tightest node
      // spacing of the deformed element in any direction
      double Fv[2] = {0, 0};
      double smin;
      if (dim == 1) {
        Fv[0] = J[0] / J0[0];
        smin = std::abs(Fv[0]);
      } else {
        const double id0 = 1.0 / (J0[0] * J0[3] - J0[1] * J0[2]);
        const double i0[4] = {J0[3] * id0, -J0[1] * id0, -J0[2] * id0,
                              J0[0] * id0};
        double F[4];
        for (int r = 0; r < 2; ++r)
          for (int k = 0; k < 2; ++k)
            F[r * 2 + k] = J[r * 2 + 0] * i0[0 * 2 + k] +
                           J[r * 2 + 1] * i0[1 * 2 + k];
        Fv[0] = F[0] * ev[0] + F[1] * ev[1];
        Fv[1] = F[2] * ev[0] + F[3] * ev[1];
        const double a = F[0] * F[0] + F[2] * F[2];
        const double b = F[0] * F[1] + F[2] * F[3];
        const double cc2 = F[1] * F[1] + F[3] * F[3];
        const double lmin =
            0.5 * (a + cc2 - std::sqrt((a - cc2) * (a - cc2) + 4.0 * b * b));
        smin = std::sqrt(std::max(lmin, 0.0));
      }
      const double stretch =
          std::sqrt(Fv[0] * Fv[0] + (dim == 2 ? Fv[1] * Fv[1] : 0.0));
      const double ell = h0min / mesh_.order * std::max(stretch, 1e-14);
      const double ellm = h0min / mesh_.order * std::max(smin, 1e-14);
      c.ell[qi] = ell;

      // viscosity switches: psi0 turns the model on only under directional
      // compression; psi1 (divergence fraction of the velocity gradient)
      // further restricts the O(h) acoustic term to shock-like compression,
      // so that trace-free vortical shear keeps only the O(h^2) quadratic
      // damping and smooth flows stay convergent while coarse swirling
      // meshes do not tangle
      double frob = 0.0, divv = 0.0;
      for (int k = 0; k < d2; ++k) frob += gv[k] * gv[k];
      frob = std::sqrt(frob);
      for (int r = 0; r < dim; ++r) divv += gv[r * dim + r];
      const double psi1 = frob > 1e-300 ? std::min(1.0, std::abs(divv) / frob)
                                        : 0.0;
      const double psi0 = lam < 0.0 ? 1.0 : 0.0;

      const double a1 = c.alpha[e];
      const double aw[2] = {a1, 1.0 - a1};
      for (int i = 0; i < 2; ++i) {
        if (!mat_.active[i][e]) continue;
        const double rho =
            Materials::density(mat_.rho0a0_vol[i][qi], jdef, aw[i]);
        double en = 0.0;
        const double* P = &mesh_.ene_val[q * mesh_.nene];
        for (int b = 0; b < mesh_.nene; ++b)
          en += P[b] * s.e[i][mesh_.edof(e, b)];
        const double p = mat_.eos[i].pressure(rho, en);
        const double cs = mat_.eos[i].sound(rho, p);
        double mu = 0.0;
        if (cfg_.use_viscosity)
          mu = rho * (cfg_.q2 * ell * ell * std::abs(lam) +
                      psi0 * psi1 * cfg_.q1 * ell * cs);
        c.rho[i][qi] = rho;
        c.p[i][qi] = p;
        c.cs[i][qi] = cs;
        c.mu[i][qi] = mu;
        for (int r = 0; r < dim; ++r)
          for (int k = 0; k < dim; ++k)
            c.sigma[i][qi * d2 + r * dim + k] =
                mu * sg[r * dim + k] - (r == k ? p : 0.0);

        // the viscous characteristic speed carries an extra safety factor:
        // the explicit stability limit for the diffusive term is tighter
        // than the acoustic CFL by the mass-matrix eigenvalue spread
        const double denom = cs + std::abs(lam) * ell + 2.5 * mu / (rho * ell);
        if (denom > 1e-300) dt_min = std::min(dt_min, ell / denom);
      }
    }
  }
  c.dt_est = dt_min;

  // interface face data and band polynomials
  c.faces.clear();
  c.band_idx.assign(nel, -1);
  c.band.clear();
  c.invalid_normals = 0;
  if (!topo_.active_faces.empty()) {
    c.faces = build_face_data(mesh_, ls_, topo_, s.x, &c.invalid_normals);
    auto band = band_elements(mesh_, topo_);
    c.band.resize(band.size());
    for (size_t k = 0; k < band.size(); ++k) {
      const int e = band[k];
      c.band_idx[e] = static_cast<int>(k);
      BandPolys& bp = c.band[k];
      for (int i = 0; i < 2; ++i)
        if (mat_.active[i][e])
          bp.pres_ok[i] = mat_.reconstruct_pressure(mesh_, s.x, c.alpha, i, e,
                                                    s.e[i], bp.pres[i]);
      // thermodynamic test functions as local physical polynomials
      double ctr[2];
      double scale;
      Materials::local_frame(mesh_, s.x, e, ctr, scale);
      std::vector<double> pts(static_cast<size_t>(nq) * dim);
      for (int q = 0; q < nq; ++q)
        for (int r = 0; r < dim; ++r)
          pts[q * dim + r] = c.xq[(static_cast<size_t>(e) * nq + q) * dim + r];
      PolyFitter fit(dim, mesh_.order - 1, ctr, scale, pts);
      bp.phi.resize(mesh_.nene);
      std::vector<double> vals(nq);
      for (int b = 0; b < mesh_.nene; ++b) {
        for (int q = 0; q < nq; ++q) vals[q] = mesh_.ene_val[q * mesh_.nene + b];
        bp.phi[b] = fit.fit(vals);
      }
    }
  }
}

void Hydro::fit_band_velocity(const StageCache& c, const std::vector<double>& v,
                              std::vector<BandPolys>& band) const {
  const int dim = mesh_.dim;
  const int nq = mesh_.vol.npts();
  std::vector<double> Ve(static_cast<size_t>(mesh_.nkin) * dim);
  for (int e = 0; e < mesh_.nelems; ++e) {
    const int k = c.band_idx[e];
    if (k < 0) continue;
    mesh_.gather_nodes(e, v, Ve.data());
    // local frame from the cached quadrature positions
    double ctr[2] = {0.0, 0.0};
    double scale;
    for (int q = 0; q < nq; ++q)
      for (int r = 0; r < dim; ++r)
        ctr[r] += c.xq[(static_cast<size_t>(e) * nq + q) * dim + r];
    for (int r = 0; r < dim; ++r) ctr[r] /= nq;
    scale = 0.0;
    for (int q = 0; q < nq; ++q) {
      double d2 = 0.0;
      for (int r = 0; r < dim; ++r) {
        const double d =
            c.xq[(static_cast<size_t>(e) * nq + q) * dim + r] - ctr[r];
        d2 += d * d;
      }
      scale = std::max(scale, d2);
    }
    scale = std::max(std::sqrt(scale), 1e-300);

    std::vector<double> pts(static_cast<size_t>(nq) * dim);
    for (int q = 0; q < nq; ++q)
      for (int r = 0; r < dim; ++r)
        pts[q * dim + r] = c.xq[(static_cast<size_t>(e) * nq + q) * dim + r];
    PolyFitter fit(dim, mesh_.order, ctr, scale, pts);
    std::vector<double> vals(nq);
    for (int comp = 0; comp < dim; ++comp) {
      for (int q = 0; q < nq; ++q) {
        const double* N = &mesh_.kin_val[q * mesh_.nkin];
        double vv = 0.0;
        for (int a = 0; a < mesh_.nkin; ++a) vv += N[a] * Ve[a * dim + comp];
        vals[q] = vv;
      }
      band[k].vel[comp] = fit.fit(vals);
    }
  }
}

void Hydro::face_forces(const StageCache& c, std::vector<double>& f,
                        double* abs_sum) const {
  const int dim = mesh_.dim;
  if (abs_sum) *abs_sum = 0.0;
  double Nv[81];
  for (const FaceData& fd : c.faces) {
    for (const FaceQP& qp : fd.qps) {
      double coef = 0.0;
      if (fd.set == FaceSet::CutInterior) {
        const int bp = c.band_idx[fd.ep], bm = c.band_idx[fd.em];
        double tp = 0.0, tm = 0.0;
        if (bp >= 0) {
          if (c.band[bp].pres_ok[0])
            tp += c.band[bp].pres[0].taylor_tail(qp.x, qp.dist.d_vec,
                                                 cfg_.taylor_p);
          if (c.band[bp].pres_ok[1])
            tp -= c.band[bp].pres[1].taylor_tail(qp.x, qp.dist.d_vec,
                                                 cfg_.taylor_p);
        }
        if (bm >= 0) {
          if (c.band[bm].pres_ok[0])
            tm += c.band[bm].pres[0].taylor_tail(qp.x, qp.dist.d_vec,
                                                 cfg_.taylor_p);
          if (c.band[bm].pres_ok[1])
            tm -= c.band[bm].pres[1].taylor_tail(qp.x, qp.dist.d_vec,
                                                 cfg_.taylor_p);
        }
        coef = 0.5 * (c.alpha[fd.ep] - c.alpha[fd.em]) * (tp + tm);
      } else {
        const int ec = fd.cut_is_plus ? fd.ep : fd.em;
        const int bc = c.band_idx[ec];
        if (bc < 0) continue;
        double dT = 0.0;
        if (c.band[bc].pres_ok[0])
          dT += c.band[bc].pres[0].taylor_tail(qp.x, qp.dist.d_vec,
                                               cfg_.taylor_p);
        if (c.band[bc].pres_ok[1])
          dT -= c.band[bc].pres[1].taylor_tail(qp.x, qp.dist.d_vec,
                                               cfg_.taylor_p);
        const double aw = fd.set == FaceSet::Surrogate1 ? 1.0 - c.alpha[ec]
                                                        : c.alpha[ec];
        coef = aw * dT;
      }
      if (abs_sum) *abs_sum += qp.w * std::abs(coef);
      // continuous test space: deposit through the plus element's trace
      mesh_.kin.eval(qp.xi_p, Nv, nullptr);
      for (int a = 0; a < mesh_.nkin; ++a) {
        if (Nv[a] == 0.0) continue;
        const int gn = mesh_.conn[fd.ep * mesh_.nkin + a];
        for (int r = 0; r < dim; ++r)
          f[gn * dim + r] += qp.w * coef * Nv[a] * qp.nplus[r];
      }
    }
  }
}

void Hydro::force(const StageCache& c, std::vector<double>& f) const {
  const int dim = mesh_.dim;
  const int d2 = dim * dim;
  const int nq = mesh_.vol.npts();
  f.assign(static_cast<size_t>(mesh_.nnodes) * dim, 0.0);

  double dndx[81 * 2];
  for (int e = 0; e < mesh_.nelems; ++e) {
    const double a1 = c.alpha[e];
    const double aw[2] = {a1, 1.0 - a1};
    for (int q = 0; q < nq; ++q) {
      const size_t qi = static_cast<size_t>(e) * nq + q;
      const double wd = mesh_.vol.wts[q] * c.detJ[qi];
      const double* G = &mesh_.kin_grad[q * mesh_.nkin * dim];
      const double* iJ = &c.invJ[qi * d2];
      for (int a = 0; a < mesh_.nkin; ++a)
        for (int r = 0; r < dim; ++r) {
          double v = 0.0;
          for (int k = 0; k < dim; ++k) v += iJ[k * dim + r] * G[a * dim + k];
          dndx[a * dim + r] = v;
        }
      for (int i = 0; i < 2; ++i) {
        if (!mat_.active[i][e] || aw[i] == 0.0) continue;
        const double* sig = &c.sigma[i][qi * d2];
        const double w = wd * aw[i];
        for (int a = 0; a < mesh_.nkin; ++a) {
          const int gn = mesh_.conn[e * mesh_.nkin + a];
          for (int r = 0; r < dim; ++r) {
            double acc = 0.0;
            for (int k = 0; k < dim; ++k)
              acc += sig[r * dim + k] * dndx[a * dim + k];
            f[gn * dim + r] -= w * acc;
          }
        }
      }
    }
  }
  if (cfg_.shift && cfg_.face_momentum) face_forces(c, f, nullptr);
}

void Hydro::accel(const StageCache& c, std::vector<double>& dv) const {
  const int dim = mesh_.dim;
  std::vector<double> f;
  force(c, f);
  mask_bc(f);
  dv.assign(f.size(), 0.0);
  Eigen::VectorXd rhs(mesh_.nnodes), sol(mesh_.nnodes);
  for (int comp = 0; comp < dim; ++comp) {
    for (int n = 0; n < mesh_.nnodes; ++n) rhs[n] = f[n * dim + comp];
    sol = mass_solver_[comp]->solve(rhs);
    for (int n = 0; n < mesh_.nnodes; ++n) dv[n * dim + comp] = sol[n];
  }
  mask_bc(dv);
}

double Hydro::emom_proxy(const StageCache& c) const {
  std::vector<double> dummy(static_cast<size_t>(mesh_.nnodes) * mesh_.dim, 0.0);
  double s = 0.0;
  face_forces(c, dummy, &s);
  return s;
}

void Hydro::energy_rate(StageCache& c, const State& s,
                        const std::vector<double>& vbar,
                        std::vector<double> de[2]) const {
  const int dim = mesh_.dim;
  const int d2 = dim * dim;
  const int nq = mesh_.vol.npts();
  std::vector<double> L[2];
  for (int i = 0; i < 2; ++i) {
    L[i].assign(static_cast<size_t>(mesh_.nelems) * mesh_.nene, 0.0);
    de[i].assign(static_cast<size_t>(mesh_.nelems) * mesh_.nene, 0.0);
  }

  // volumetric work (sigma from the stage velocity, contracted with vbar)
  std::vector<double> Ve(static_cast<size_t>(mesh_.nkin) * dim);
  double dndx[81 * 2];
  for (int e = 0; e < mesh_.nelems; ++e) {
    mesh_.gather_nodes(e, vbar, Ve.data());
    const double a1 = c.alpha[e];
    const double aw[2] = {a1, 1.0 - a1};
    for (int q = 0; q < nq; ++q) {
      const size_t qi = static_cast<size_t>(e) * nq + q;
      const double wd = mesh_.vol.wts[q] * c.detJ[qi];
      const double* G = &mesh_.kin_grad[q * mesh_.nkin * dim];
      const double* iJ = &c.invJ[qi * d2];
      for (int a = 0; a < mesh_.nkin; ++a)
        for (int r = 0; r < dim; ++r) {
          double v = 0.0;
          for (int k = 0; k < dim; ++k) v += iJ[k * dim + r] * G[a * dim + k];
          dndx[a * dim + r] = v;
        }
      double gvb[4] = {0, 0, 0, 0};
      for (int a = 0; a < mesh_.nkin; ++a)
        for (int cc = 0; cc < dim; ++cc)
          for (int r = 0; r < dim; ++r)
            gvb[cc * dim + r] += Ve[a * dim + cc] * dndx[a * dim + r];

      double src = 0.0;
      if (esrc) src = esrc(&c.xq[qi * dim], s.t);
      const double* P = &mesh_.ene_val[q * mesh_.nene];
      for (int i = 0; i < 2; ++i) {
        if (!mat_.active[i][e]) continue;
        const double* sig = &c.sigma[i][qi * d2];
        double work = 0.0;
        for (int k = 0; k < d2; ++k) work += sig[k] * gvb[k];
        const double w = wd * aw[i] * (work + src);
        for (int b = 0; b < mesh_.nene; ++b)
          L[i][e * mesh_.nene + b] += w * P[b];
      }
    }
  }

  // interface face terms
  if (cfg_.shift && !c.faces.empty()) {
    fit_band_velocity(c, vbar, c.band);
    double Pp[81], Pm[81];
    std::vector<double> Vp(static_cast<size_t>(mesh_.nkin) * dim);
    for (const FaceData& fd : c.faces) {
      const int bp = c.band_idx[fd.ep], bm = c.band_idx[fd.em];
      if (bp < 0 || bm < 0) continue;
      // bound-preserving limits for the shifted traces: the Taylor
      // extrapolation may not create velocity extrema outside the nodal
      // range of its own element, otherwise overshoot on coarse distorted
      // bands feeds spurious energy through the consistency flux
      double vlo[2] = {1e300, 1e300}, vhi[2] = {-1e300, -1e300};
      const int es2[2] = {fd.ep, fd.em};
      for (int sdx = 0; sdx < 2; ++sdx) {
        mesh_.gather_nodes(es2[sdx], vbar, Vp.data());
        for (int comp = 0; comp < dim; ++comp)
          for (int a = 0; a < mesh_.nkin; ++a) {
            vlo[comp] = std::min(vlo[comp], Vp[a * dim + comp]);
            vhi[comp] = std::max(vhi[comp], Vp[a * dim + comp]);
          }
      }
      // face velocity-gradient scale from the cached element gradients;
      // polynomial band fits overshoot in under-resolved transients and
      // would make the face terms stiff
      double fr = 0.0;
      for (int side = 0; side < 2; ++side) {
        const int es = side == 0 ? fd.ep : fd.em;
        double g2 = 0.0;
        for (int q = 0; q < nq; ++q) {
          const double* gv = &c.gradv[(static_cast<size_t>(es) * nq + q) * d2];
          for (int k = 0; k < d2; ++k) g2 += gv[k] * gv[k];
        }
        fr += 0.5 * std::sqrt(g2 / nq);
      }
      for (const FaceQP& qp : fd.qps) {
        // shifted velocity jump dotted with the interface normal
        double svn = 0.0;
        for (int comp = 0; comp < dim; ++comp) {
          const double jp = std::clamp(c.band[bp].vel[comp].taylor_shift(
                                           qp.x, qp.dist.d_vec, cfg_.taylor_v),
                                       vlo[comp], vhi[comp]);
          const double jm = std::clamp(c.band[bm].vel[comp].taylor_shift(
                                           qp.x, qp.dist.d_vec, cfg_.taylor_v),
                                       vlo[comp], vhi[comp]);
          svn += (jp - jm) * qp.dist.n_true[comp];
        }
        // trust region: the velocity field is continuous across the true
        // interface, so the shifted jump of two local fits cannot credibly
        // exceed the fit variation over the shift distance
        const double svcap = 2.0 * std::abs(qp.dist.dist) * fr;
        svn = std::clamp(svn, -svcap, svcap);
        double ndot = 0.0;
        for (int comp = 0; comp < dim; ++comp)
          ndot += qp.nplus[comp] * qp.dist.n_true[comp];

        mesh_.ene.eval(qp.xi_p, Pp, nullptr);
        mesh_.ene.eval(qp.xi_m, Pm, nullptr);

        // transport flux: weighted average picks the cut side on surrogate
        // faces and the plain average on cut-interior faces
        struct Side { int e; const double* P; double gamma; };
        Side sides[2] = {{fd.ep, Pp, 0.5}, {fd.em, Pm, 0.5}};
        if (fd.set != FaceSet::CutInterior) {
          sides[0].gamma = fd.cut_is_plus ? 1.0 : 0.0;
          sides[1].gamma = fd.cut_is_plus ? 0.0 : 1.0;
        }
        for (const Side& sd : sides) {
          if (sd.gamma == 0.0 || !cfg_.face_energy_flux) continue;
          const double as1 = c.alpha[sd.e];
          const double asw[2] = {as1, 1.0 - as1};
          const int bs = c.band_idx[sd.e];
          for (int i = 0; i < 2; ++i) {
            if (!mat_.active[i][sd.e] || !c.band[bs].pres_ok[i]) continue;
            const double ptrace = c.band[bs].pres[i].eval(qp.x);
            const double coef =
                qp.w * svn * ndot * sd.gamma * asw[i] * ptrace;
            for (int b = 0; b < mesh_.nene; ++b)
              L[i][sd.e * mesh_.nene + b] += coef * sd.P[b];
          }
        }

        // pressure-gap dissipation (diffusion-type double jump): the shifted
        // gap between the material pressures at the true interface drives an
        // energy exchange tested with the shifted thermodynamic basis in the
        // cut element.  A positive gap cools material 1 and heats material
        // 2 there, pushing the two interface pressures together; this
        // orientation is the one with negative feedback through the
        // pressure reconstructions, so the exchange relaxes instead of
        // amplifying.
        if (fd.set != FaceSet::CutInterior && cfg_.face_energy_jump) {
          const int ec = fd.cut_is_plus ? fd.ep : fd.em;
          const int bc = fd.cut_is_plus ? bp : bm;
          // the heated material sits on the face toward the pure region of
          // the other material and carries that material's fraction
          const bool near1 = fd.set == FaceSet::Surrogate1;
          const double wa = near1 ? c.alpha[ec] : 1.0 - c.alpha[ec];
          const int i = near1 ? 1 : 0;
          const bool okG = c.band[bc].pres_ok[0] && c.band[bc].pres_ok[1];
          if (okG && wa > 0.0 && mat_.active[i][ec]) {
            // same bound-preserving rule as for the velocity traces: the
            // shifted material pressures may not leave the quadrature-value
            // range of the two face elements
            double plo = 1e300, phi = -1e300;
            for (int sdx = 0; sdx < 2; ++sdx)
              for (int ii = 0; ii < 2; ++ii) {
                if (!mat_.active[ii][es2[sdx]]) continue;
                const double* pv =
                    &c.p[ii][static_cast<size_t>(es2[sdx]) * nq];
                for (int q = 0; q < nq; ++q) {
                  plo = std::min(plo, pv[q]);
                  phi = std::max(phi, pv[q]);
                }
              }
            const double G = std::clamp(c.band[bc].pres[0].taylor_shift(
                                            qp.x, qp.dist.d_vec, cfg_.taylor_p),
                                        plo, phi) -
                             std::clamp(c.band[bc].pres[1].taylor_shift(
                                            qp.x, qp.dist.d_vec, cfg_.taylor_p),
                                        plo, phi);
            const double davg = std::abs(qp.dist.dist) * fr;
            const double sgn = i == 1 ? 1.0 : -1.0;
            const double coef = sgn * qp.w * wa * davg * G;
            for (int b = 0; b < mesh_.nene; ++b) {
              const double sc = c.band[bc].phi[b].taylor_shift(
                  qp.x, qp.dist.d_vec, cfg_.taylor_p);
              L[i][ec * mesh_.nene + b] += coef * sc;
            }
          }
        }
      }
    }
  }

  // thermodynamic mass solves (block diagonal)
  for (int e = 0; e < mesh_.nelems; ++e)
    for (int i = 0; i < 2; ++i) {
      if (!mat_.active[i][e]) continue;
      const double* Mi =
          &emass_inv_[i][static_cast<size_t>(e) * mesh_.nene * mesh_.nene];
      for (int a = 0; a < mesh_.nene; ++a) {
        double acc = 0.0;
        for (int b = 0; b < mesh_.nene; ++b)
          acc += Mi[a * mesh_.nene + b] * L[i][e * mesh_.nene + b];
        de[i][e * mesh_.nene + a] = acc;
      }
    }
}

}  // namespace hydro
