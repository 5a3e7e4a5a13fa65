#include <doctest.h>

#include <cmath>

#include "hydrosim/assembly.hpp"

using namespace hydro;

namespace {

struct Setup {
  Mesh mesh;
  LevelSet ls;
  Topology topo;
  Materials mat;
  std::unique_ptr<Hydro> op;
  State s;
};

// Two stiffened gases separated by a vertical mid-element interface on a
// unit square, both at uniform pressure p0 and rest.
Setup uniform_pressure_setup(int order, int n, double p0, bool shift) {
  Setup su;
  const double lo[2] = {0, 0}, hi[2] = {1, 1};
  su.mesh = Mesh(2, order, n, n, lo, hi);
  const double xc = 0.5 + 0.5 / n;
  su.ls.init(su.mesh, [xc](const double* x) { return xc - x[0]; });
  su.topo.build(su.mesh, su.ls);
  std::function<double(const double*)> rho0[2] = {
      [](const double*) { return 1.0; }, [](const double*) { return 0.125; }};
  su.mat.eos[0] = Eos{5.0 / 3.0, 0.0};
  su.mat.eos[1] = Eos{1.4, 0.0};
  su.mat.init(su.mesh, su.topo, rho0, std::max(4, order));
  AssemblyConfig cfg;
  cfg.shift = shift;
  su.op = std::make_unique<Hydro>(su.mesh, su.ls, su.topo, su.mat, cfg);
  su.s.x = su.mesh.nodes0;
  su.s.v.assign(su.mesh.nnodes * 2, 0.0);
  const double ev[2] = {su.mat.eos[0].energy(1.0, p0),
                        su.mat.eos[1].energy(0.125, p0)};
  for (int i = 0; i < 2; ++i) {
    su.s.e[i].assign(static_cast<size_t>(su.mesh.nelems) * su.mesh.nene, 0.0);
    for (int e = 0; e < su.mesh.nelems; ++e)
      if (su.mat.active[i][e])
        for (int b = 0; b < su.mesh.nene; ++b)
          su.s.e[i][su.mesh.edof(e, b)] = ev[i];
  }
  return su;
}

}  // namespace

TEST_CASE("uniform pressure across the interface produces no motion") {
  for (int order : {2, 3}) {
    Setup su = uniform_pressure_setup(order, 6, 1.0, true);
    StageCache c;
    su.op->build_cache(su.s, c);
    REQUIRE(c.geom_valid);
    CHECK(c.dt_est > 0.0);

    // interior forces vanish; walls only carry the (masked) normal pressure
    std::vector<double> f;
    su.op->force(c, f);
    su.op->mask_bc(f);
    double fmax = 0.0;
    for (double v : f) fmax = std::max(fmax, std::abs(v));
    CHECK(fmax < 1e-11);

    std::vector<double> dv;
    su.op->accel(c, dv);
    double amax = 0.0;
    for (double v : dv) amax = std::max(amax, std::abs(v));
    CHECK(amax < 1e-10);

    std::vector<double> de[2];
    su.op->energy_rate(c, su.s, su.s.v, de);
    double emax = 0.0;
    for (int i = 0; i < 2; ++i)
      for (double v : de[i]) emax = std::max(emax, std::abs(v));
    CHECK(emax < 1e-11);
  }
}

TEST_CASE("cache fields are physically consistent at the initial state") {
  Setup su = uniform_pressure_setup(2, 6, 2.5, true);
  StageCache c;
  su.op->build_cache(su.s, c);
  const int nq = su.mesh.vol.npts();
  for (int e = 0; e < su.mesh.nelems; ++e)
    for (int q = 0; q < nq; ++q) {
      CHECK(c.jdef[e * nq + q] == doctest::Approx(1.0).epsilon(1e-12));
      for (int i = 0; i < 2; ++i) {
        if (!su.mat.active[i][e]) continue;
        CHECK(c.p[i][e * nq + q] == doctest::Approx(2.5).epsilon(1e-12));
        CHECK(c.rho[i][e * nq + q] ==
              doctest::Approx(i == 0 ? 1.0 : 0.125).epsilon(1e-12));
      }
    }
  // cached volume fractions agree with the topology recomputation
  auto a = su.topo.alpha1(su.mesh, su.s.x);
  for (int e = 0; e < su.mesh.nelems; ++e)
    CHECK(c.alpha[e] == doctest::Approx(a[e]).epsilon(1e-14));
}

TEST_CASE("assembly is deterministic") {
  Setup su = uniform_pressure_setup(3, 4, 1.7, true);
  // a perturbed, asymmetric state
  for (int n = 0; n < su.mesh.nnodes; ++n) {
    const double x = su.mesh.nodes0[n * 2], y = su.mesh.nodes0[n * 2 + 1];
    su.s.v[n * 2 + 0] = 0.1 * std::sin(M_PI * x) * std::cos(M_PI * y);
    su.s.v[n * 2 + 1] = -0.07 * std::cos(M_PI * x) * std::sin(M_PI * y);
    su.s.x[n * 2 + 0] += 0.01 * std::sin(M_PI * x) * std::sin(2 * M_PI * y);
  }
  for (int i = 0; i < 2; ++i)
    for (auto& e : su.s.e[i]) e *= 1.1;
  su.op->mask_bc(su.s.v);

  StageCache c1, c2;
  su.op->build_cache(su.s, c1);
  su.op->build_cache(su.s, c2);
  std::vector<double> f1, f2, dv1;
  su.op->force(c1, f1);
  su.op->force(c2, f2);
  CHECK(f1 == f2);  // bitwise
  std::vector<double> da[2], db[2];
  su.op->energy_rate(c1, su.s, su.s.v, da);
  su.op->energy_rate(c2, su.s, su.s.v, db);
  CHECK(da[0] == db[0]);
  CHECK(da[1] == db[1]);
}

TEST_CASE("volumetric energy exchange balances the work of the forces") {
  // single material, no interface terms: the kinetic power v.F must cancel
  // the weighted internal-energy rate exactly (same quadrature both sides)
  Setup su;
  const double lo[2] = {0, 0}, hi[2] = {1, 1};
  su.mesh = Mesh(2, 3, 4, 4, lo, hi);
  su.ls.init(su.mesh, [](const double*) { return 1.0; });
  su.topo.build(su.mesh, su.ls);
  std::function<double(const double*)> rho0[2] = {
      [](const double* x) { return 1.0 + 0.2 * x[0]; },
      [](const double*) { return 1.0; }};
  su.mat.eos[0] = Eos{5.0 / 3.0, 0.0};
  su.mat.init(su.mesh, su.topo, rho0, 4);
  AssemblyConfig cfg;
  su.op = std::make_unique<Hydro>(su.mesh, su.ls, su.topo, su.mat, cfg);

  su.s.x = su.mesh.nodes0;
  su.s.v.assign(su.mesh.nnodes * 2, 0.0);
  for (int n = 0; n < su.mesh.nnodes; ++n) {
    const double x = su.mesh.nodes0[n * 2], y = su.mesh.nodes0[n * 2 + 1];
    su.s.v[n * 2 + 0] = std::sin(M_PI * x) * std::cos(M_PI * y);
    su.s.v[n * 2 + 1] = -std::cos(M_PI * x) * std::sin(M_PI * y);
  }
  su.op->mask_bc(su.s.v);
  su.s.e[0].assign(static_cast<size_t>(su.mesh.nelems) * su.mesh.nene, 1.0);
  su.s.e[1].assign(su.s.e[0].size(), 0.0);
  for (int e = 0; e < su.mesh.nelems; ++e)
    for (int b = 0; b < su.mesh.nene; ++b)
      su.s.e[0][su.mesh.edof(e, b)] = 1.0 + 0.1 * (e % 5) + 0.02 * b;

  StageCache c;
  su.op->build_cache(su.s, c);
  std::vector<double> f;
  su.op->force(c, f);
  su.op->mask_bc(f);
  double power = 0.0;
  for (size_t k = 0; k < f.size(); ++k) power += su.s.v[k] * f[k];

  std::vector<double> de[2];
  su.op->energy_rate(c, su.s, su.s.v, de);
  // internal energy rate: de weighted by the (time-constant) energy mass
  const int nq = su.mesh.vol.npts();
  double ie_rate = 0.0;
  for (int e = 0; e < su.mesh.nelems; ++e)
    for (int q = 0; q < nq; ++q) {
      double dloc = 0.0;
      for (int b = 0; b < su.mesh.nene; ++b)
        dloc += su.mesh.ene_val[q * su.mesh.nene + b] *
                de[0][su.mesh.edof(e, b)];
      ie_rate += su.mesh.vol.wts[q] * su.mat.detJ0_vol[e * nq + q] *
                 su.mat.rho0a0_vol[0][e * nq + q] * dloc;
    }
  CHECK(std::abs(power + ie_rate) < 1e-11 * (std::abs(power) + 1.0));
}

TEST_CASE("slip-wall mask zeroes exactly the wall-normal components") {
  Setup su = uniform_pressure_setup(2, 4, 1.0, false);
  std::vector<double> v(su.mesh.nnodes * 2, 1.0);
  su.op->mask_bc(v);
  for (int n = 0; n < su.mesh.nnodes; ++n) {
    const double x = su.mesh.nodes0[n * 2], y = su.mesh.nodes0[n * 2 + 1];
    const bool wx = x == 0.0 || x == 1.0;
    const bool wy = y == 0.0 || y == 1.0;
    CHECK(v[n * 2 + 0] == (wx ? 0.0 : 1.0));
    CHECK(v[n * 2 + 1] == (wy ? 0.0 : 1.0));
  }
}
