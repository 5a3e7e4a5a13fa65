// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include "hydrosim/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "hydrosim/riemann.hpp"

namespace hydro {

void Simulation::setup(const RunConfig& cfg) {
  if (cfg.order < 1 || cfg.order > 4)
    throw std::invalid_argument("order must be in 1..4");
  prob = make_problem(cfg.problem, cfg.refine);
  mesh = Mesh(prob.dim, cfg.order, prob.ne[0], prob.ne[1], prob.lo, prob.hi);
  ls.init(mesh, prob.eta0);
  topo.build(mesh, ls);
  const int rec = cfg.recon_order > 0 ? cfg.recon_order
                                      : std::max(4, cfg.order);
  mat.eos[0] = prob.eos[0];
  mat.eos[1] = prob.eos[1];
  mat.init(mesh, topo, prob.rho0, rec);
  AssemblyConfig acfg;
  acfg.taylor_p = cfg.taylor_terms;
  acfg.taylor_v = cfg.taylor_terms;
  acfg.shift = cfg.shift;
  op = std::make_unique<Hydro>(mesh, ls, topo, mat, acfg);
  op->esrc = prob.esrc;
  init_state(*this, state);
}

void init_state(const Simulation& sim, State& s) {
  const Mesh& mesh = sim.mesh;
  const int dim = mesh.dim;
  s.t = 0.0;
  s.x = mesh.nodes0;
  s.v.assign(static_cast<size_t>(mesh.nnodes) * dim, 0.0);
  for (int n = 0; n < mesh.nnodes; ++n) {
    double v[2] = {0, 0};
    sim.prob.v0(&mesh.nodes0[n * dim], v);
    for (int r = 0; r < dim; ++r) s.v[n * dim + r] = v[r];
  }
  // thermodynamic DOFs by nodal interpolation of the analytic extensions
  const auto& nds = mesh.ene.line.nodes;
  const int n1 = static_cast<int>(nds.size());
  for (int i = 0; i < 2; ++i) {
    s.e[i].assign(static_cast<size_t>(mesh.nelems) * mesh.nene, 0.0);
    for (int e = 0; e < mesh.nelems; ++e) {
      if (!sim.mat.active[i][e]) continue;
      int b = 0;
      for (int j = 0; j < (dim == 2 ? n1 : 1); ++j)
        for (int k = 0; k < n1; ++k, ++b) {
          double xi[2] = {nds[k], dim == 2 ? nds[j] : 0.0};
          GeomSample g = mesh.geom(e, xi, mesh.nodes0);
          s.e[i][mesh.edof(e, b)] = sim.prob.e0[i](g.x);
        }
    }
  }
}

static void write_vtk(const Simulation& sim, const StageCache& c,
                      const State& s, const std::string& path) {
  const Mesh& mesh = sim.mesh;
  if (mesh.dim != 2) return;
  std::ofstream f(path);
  f << "# vtk DataFile Version 3.0\nhydrosim fields\nASCII\n"
    << "DATASET UNSTRUCTURED_GRID\n";
  f << "POINTS " << mesh.nnodes << " double\n";
  f.precision(10);
  for (int n = 0; n < mesh.nnodes; ++n)
    f << s.x[n * 2] << " " << s.x[n * 2 + 1] << " 0\n";
  // each element subdivided into order x order bilinear quads
  const int m = mesh.order;
  const int ncell = mesh.nelems * m * m;
  f << "CELLS " << ncell << " " << 5 * ncell << "\n";
  for (int ey = 0; ey < mesh.ne[1]; ++ey)
    for (int ex = 0; ex < mesh.ne[0]; ++ex)
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
          const int ix = ex * m + i, iy = ey * m + j;
          f << "4 " << mesh.node_index(ix, iy) << " "
            << mesh.node_index(ix + 1, iy) << " "
            << mesh.node_index(ix + 1, iy + 1) << " "
            << mesh.node_index(ix, iy + 1) << "\n";
        }
  f << "CELL_TYPES " << ncell << "\n";
  for (int k = 0; k < ncell; ++k) f << "9\n";

  f << "POINT_DATA " << mesh.nnodes << "\n";
  f << "VECTORS velocity double\n";
  for (int n = 0; n < mesh.nnodes; ++n)
    f << s.v[n * 2] << " " << s.v[n * 2 + 1] << " 0\n";
  f << "SCALARS indicator double 1\nLOOKUP_TABLE default\n";
  for (int n = 0; n < mesh.nnodes; ++n) f << sim.ls.eta[n] << "\n";

  f << "CELL_DATA " << ncell << "\n";
  const int nq = mesh.vol.npts();
  auto emit_elem_scalar = [&](const char* nm, auto&& fn) {
    f << "SCALARS " << nm << " double 1\nLOOKUP_TABLE default\n";
    for (int e = 0; e < mesh.nelems; ++e) {
      const double v = fn(e);
      for (int k = 0; k < m * m; ++k) f << v << "\n";
    }
  };
  emit_elem_scalar("alpha1", [&](int e) { return c.alpha[e]; });
  for (int i = 0; i < 2; ++i) {
    std::string nm = "rho" + std::to_string(i + 1);
    emit_elem_scalar(nm.c_str(), [&](int e) {
      if (!sim.mat.active[i][e]) return 0.0;
      double acc = 0.0, w = 0.0;
      for (int q = 0; q < nq; ++q) {
        acc += c.rho[i][static_cast<size_t>(e) * nq + q];
        w += 1.0;
      }
      return acc / w;
    });
    nm = "p" + std::to_string(i + 1);
    emit_elem_scalar(nm.c_str(), [&](int e) {
      if (!sim.mat.active[i][e]) return 0.0;
      double acc = 0.0;
      for (int q = 0; q < nq; ++q)
        acc += c.p[i][static_cast<size_t>(e) * nq + q];
      return acc / nq;
    });
  }
}

static bool two_state_1d(const Simulation& sim, RiemannState& l,
                         RiemannState& r) {
  if (sim.mesh.dim != 1) return false;
  const double xl[1] = {sim.prob.lo[0] + 0.1 * (sim.prob.hi[0] - sim.prob.lo[0])};
  const double xr[1] = {sim.prob.hi[0] - 0.1 * (sim.prob.hi[0] - sim.prob.lo[0])};
  l.rho = sim.prob.rho0[0](xl);
  l.gamma = sim.mat.eos[0].gamma;
  l.pinf = sim.mat.eos[0].pinf;
  l.p = sim.mat.eos[0].pressure(l.rho, sim.prob.e0[0](xl));
  l.v = 0.0;
  r.rho = sim.prob.rho0[1](xr);
  r.gamma = sim.mat.eos[1].gamma;
  r.pinf = sim.mat.eos[1].pinf;
  r.p = sim.mat.eos[1].pressure(r.rho, sim.prob.e0[1](xr));
  r.v = 0.0;
  return true;
}

RunResult run_benchmark(const RunConfig& cfg) {
  RunResult res;
  Simulation sim;
  sim.setup(cfg);
  const double t_final = cfg.tmax > 0.0 ? cfg.tmax : sim.prob.t_final;

  const bool write = !cfg.out_dir.empty();
  if (write) std::filesystem::create_directories(cfg.out_dir);
  std::ofstream ts;
  if (write) {
    ts.open(cfg.out_dir + "/timeseries.csv");
    ts << "step,t,mass1,mass2,momentum_x,momentum_y,internal_energy,"
          "kinetic_energy,total_energy,emom_proxy,gap_p1,gap_p2\n";
    ts.precision(15);
  }

  StepperConfig scfg;
  scfg.cfl = cfg.cfl;
  scfg.progress = cfg.progress;
  Stepper stepper(*sim.op, scfg);

  bool have_initial = false;
  int max_bad_normals = 0;
  auto t0 = std::chrono::steady_clock::now();
  auto cb = [&](const State& s, const StageCache& c, long step) {
    max_bad_normals = std::max(max_bad_normals, c.invalid_normals);
    const bool last = s.t >= t_final * (1.0 - 1e-12);
    if (!have_initial) {
      res.initial = conservation(*sim.op, c, s);
      have_initial = true;
      if (write) write_vtk(sim, c, s, cfg.out_dir + "/fields_000000.vtk");
    }
    if (write && (step % cfg.output_every == 0 || last)) {
      Conservation cons = conservation(*sim.op, c, s);
      GapInfo gi = interface_gap_1d(*sim.op, c, s);
      ts << step << "," << s.t << "," << cons.mass[0] << "," << cons.mass[1]
         << "," << cons.momentum[0] << "," << cons.momentum[1] << ","
         << cons.internal_energy << "," << cons.kinetic_energy << ","
         << cons.total_energy << "," << cons.emom_proxy << "," << gi.p1 << ","
         << gi.p2 << "\n";
    }
  };

  RunStats st = stepper.run(sim.state, t_final, cb);
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  res.steps = st.steps;
  res.rejections = st.rejections;
  res.t_end = sim.state.t;
  res.ok = st.ok;
  res.error = st.error;
  res.invalid_normals = max_bad_normals;

  StageCache c;
  sim.op->build_cache(sim.state, c);
  res.final_ = conservation(*sim.op, c, sim.state);
  for (int i = 0; i < 2; ++i)
    res.mass_drift[i] = std::abs(res.final_.mass[i] - res.initial.mass[i]) /
                        std::max(std::abs(res.initial.mass[i]), 1e-300);
  double md = 0.0;
  for (int r = 0; r < 2; ++r) {
    const double d = res.final_.momentum[r] - res.initial.momentum[r];
    md += d * d;
  }
  res.momentum_drift = std::sqrt(md);
  res.energy_drift =
      std::abs(res.final_.total_energy - res.initial.total_energy) /
      std::max(std::abs(res.initial.total_energy), 1e-300);

  if (sim.prob.vexact) {
    res.vel_err = velocity_error(*sim.op, c, sim.state, sim.prob.vexact);
    res.has_vel_err = true;
  }
  res.gap = interface_gap_1d(*sim.op, c, sim.state);
  RiemannState rl, rr;
  if (two_state_1d(sim, rl, rr)) {
    try {
      res.p_star = solve_riemann(rl, rr).p_star;
      res.has_p_star = true;
    } catch (const std::exception&) {}
  }

  if (write) {
    auto samples = point_samples(*sim.op, c, sim.state);
    res.sample_rows = static_cast<long>(samples.size());
    std::ofstream ps(cfg.out_dir + "/point_samples.csv");
    ps << "material,x,y,rho,e,p,vx,vy\n";
    ps.precision(15);
    for (const auto& sm : samples)
      ps << sm.material + 1 << "," << sm.x[0] << "," << sm.x[1] << ","
         << sm.rho << "," << sm.e << "," << sm.p << "," << sm.v[0] << ","
         << sm.v[1] << "\n";

    char nm[64];
    std::snprintf(nm, sizeof nm, "/fields_%06ld.vtk", res.steps);
    write_vtk(sim, c, sim.state, cfg.out_dir + nm);

    nlohmann::json j;
    j["problem"] = cfg.problem;
    j["order"] = cfg.order;
    j["refine"] = cfg.refine;
    j["cfl"] = cfg.cfl;
    j["taylor_terms"] = cfg.taylor_terms;
    j["recon_order"] = sim.mat.recon_deg;
    j["shift"] = cfg.shift;
    j["t_final"] = res.t_end;
    j["steps"] = res.steps;
    j["rejections"] = res.rejections;
    j["ok"] = res.ok;
    if (!res.ok) j["error"] = res.error;
    j["wall_seconds"] = res.wall_seconds;
    j["distance_mode"] = "one-shot-renormalization";
    j["invalid_normals_max"] = res.invalid_normals;
    j["mass_drift"] = {res.mass_drift[0], res.mass_drift[1]};
    j["momentum_drift"] = res.momentum_drift;
    j["energy_drift"] = res.energy_drift;
    j["sample_rows"] = res.sample_rows;
    if (res.has_vel_err) {
      j["velocity_error_l1"] = res.vel_err.l1;
      j["velocity_error_l2"] = res.vel_err.l2;
      j["velocity_error_linf"] = res.vel_err.linf;
    }
    if (res.gap.found) {
      j["interface_p1"] = res.gap.p1;
      j["interface_p2"] = res.gap.p2;
    }
    if (res.has_p_star) j["p_star_oracle"] = res.p_star;
    std::ofstream js(cfg.out_dir + "/summary.json");
    js << j.dump(2) << "\n";
  }
  return res;
}

std::vector<ConvRow> convergence_study(const RunConfig& base,
                                       const std::vector<int>& orders,
                                       const std::vector<int>& refines,
                                       const std::string& out_dir) {
  std::vector<ConvRow> rows;
  for (int m : orders) {
    double prev = 0.0;
    for (size_t k = 0; k < refines.size(); ++k) {
      RunConfig cfg = base;
      cfg.order = m;
      cfg.refine = refines[k];
      cfg.out_dir.clear();
      RunResult r = run_benchmark(cfg);
      ConvRow row;
      row.order = m;
      row.refine = refines[k];
      row.l1 = r.has_vel_err ? r.vel_err.l1 : -1.0;
      row.rate = k > 0 && row.l1 > 0.0 ? std::log2(prev / row.l1) : 0.0;
      row.momentum_drift = r.momentum_drift;
      row.energy_drift = r.energy_drift;
      row.wall_seconds = r.wall_seconds;
      rows.push_back(row);
      prev = row.l1;
      std::fprintf(stderr, "converge order=%d refine=%d l1=%.3e rate=%.2f\n",
                   m, refines[k], row.l1, row.rate);
    }
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream f(out_dir + "/convergence.csv");
    f << "order,refine,l1_velocity_error,rate,momentum_drift,energy_drift,"
         "wall_seconds\n";
    f.precision(15);
    for (const auto& r : rows)
      f << r.order << "," << r.refine << "," << r.l1 << "," << r.rate << ","
        << r.momentum_drift << "," << r.energy_drift << "," << r.wall_seconds
        << "\n";
  }
  return rows;
}

}  // namespace hydro
