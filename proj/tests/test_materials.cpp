#include <doctest.h>

#include <cmath>
#include <random>

#include "hydrosim/materials.hpp"

using namespace hydro;

TEST_CASE("stiffened-gas closed forms and round trips") {
  Eos air{1.4, 0.0};
  CHECK(air.pressure(1.0, 2.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(air.energy(1.0, 1.0) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(air.sound(1.0, 1.0) == doctest::Approx(std::sqrt(1.4)).epsilon(1e-14));

  Eos water{4.4, 6.0e8};
  const double rho = 1000.0, p = 1.0e9;
  const double e = water.energy(rho, p);
  CHECK(water.pressure(rho, e) == doctest::Approx(p).epsilon(1e-13));
  CHECK(water.sound(rho, p) ==
        doctest::Approx(std::sqrt(4.4 * (p + 6.0e8) / rho)).epsilon(1e-14));
  // sound speed floors at zero below the cavitation pressure
  CHECK(water.sound(rho, -7.0e8) == 0.0);
}

TEST_CASE("density law inverts the deformation and floors tiny fractions") {
  CHECK(Materials::density(0.6, 2.0, 0.5) ==
        doctest::Approx(0.6).epsilon(1e-14));
  CHECK(Materials::density(1.0, 1.0, 0.0) ==
        doctest::Approx(1e10).epsilon(1e-12));
}

namespace {

// total mass of material i on configuration X, using the density law and the
// current volume fractions
double material_mass(const Mesh& m, const Topology& topo, const Materials& mat,
                     const std::vector<double>& X) {
  auto a = topo.alpha1(m, X);
  double mass[2] = {0, 0};
  const int nq = m.vol.npts();
  for (int e = 0; e < m.nelems; ++e)
    for (int q = 0; q < nq; ++q) {
      GeomSample g = m.geom(e, &m.vol.pts[q * m.dim], X);
      const double jdef = g.detJ / mat.detJ0_vol[e * nq + q];
      for (int i = 0; i < 2; ++i) {
        if (!mat.active[i][e]) continue;
        const double ai = i == 0 ? a[e] : 1.0 - a[e];
        const double rho =
            Materials::density(mat.rho0a0_vol[i][e * nq + q], jdef, ai);
        mass[i] += m.vol.wts[q] * g.detJ * std::max(ai, 1e-10) * rho;
      }
    }
  return mass[0] + 1000.0 * mass[1];  // pack both into one comparable scalar
}

}  // namespace

TEST_CASE("mass is conserved exactly under random mesh deformation") {
  const double lo[2] = {0, 0}, hi[2] = {1, 1};
  Mesh m(2, 2, 6, 6, lo, hi);
  LevelSet ls;
  ls.init(m, [](const double* x) { return 0.52 - x[0] + 0.07 * x[1]; });
  Topology topo;
  topo.build(m, ls);
  std::function<double(const double*)> rho0[2] = {
      [](const double* x) { return 1.0 + 0.3 * x[1]; },
      [](const double* x) { return 0.125 + 0.1 * x[0]; }};
  Materials mat;
  mat.init(m, topo, rho0, 4);

  const double m0 = material_mass(m, topo, mat, m.nodes0);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-0.02, 0.02);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<double> X = m.nodes0;
    for (int n = 0; n < m.nnodes; ++n) {
      const double x = m.nodes0[n * 2], y = m.nodes0[n * 2 + 1];
      // keep walls on the walls, randomize the interior
      X[n * 2 + 0] += u(rng) * std::sin(M_PI * x) * (0.5 + 0.5 * y);
      X[n * 2 + 1] += u(rng) * std::sin(M_PI * y) * (0.5 + 0.5 * x);
    }
    const double mX = material_mass(m, topo, mat, X);
    CHECK(std::abs(mX - m0) / m0 < 1e-12);
  }
}

TEST_CASE("pressure reconstruction reproduces polynomial pressure fields") {
  const double lo[2] = {0, 0}, hi[2] = {1, 1};
  Mesh m(2, 3, 4, 4, lo, hi);
  LevelSet ls;
  ls.init(m, [](const double*) { return 1.0; });  // all material 1
  Topology topo;
  topo.build(m, ls);
  std::function<double(const double*)> rho0[2] = {
      [](const double*) { return 2.0; }, [](const double*) { return 1.0; }};
  Materials mat;
  mat.eos[0] = Eos{5.0 / 3.0, 0.0};
  mat.init(m, topo, rho0, 4);

  // energy DOFs interpolating a Q2 polynomial -> p = (gamma-1) rho e exact
  auto efun = [](const double* x) {
    return 1.0 + 0.5 * x[0] - 0.2 * x[1] + 0.3 * x[0] * x[0] * x[1];
  };
  std::vector<double> edofs(static_cast<size_t>(m.nelems) * m.nene);
  // project by interpolation at the thermodynamic nodes
  Rule1D lob = gauss_lobatto(m.order);  // order-1 basis nodes
  for (int e = 0; e < m.nelems; ++e)
    for (int b = 0; b < m.nene; ++b) {
      const double xi[2] = {lob.x[b % m.order], lob.x[b / m.order]};
      GeomSample g = m.geom(e, xi, m.nodes0);
      edofs[m.edof(e, b)] = efun(g.x);
    }

  auto a = topo.alpha1(m, m.nodes0);
  for (int e : {0, 5, 10, 15}) {
    TensorPoly p;
    REQUIRE(mat.reconstruct_pressure(m, m.nodes0, a, 0, e, edofs, p));
    for (double s : {0.2, 0.8}) {
      const double xi[2] = {s, 1.0 - s};
      GeomSample g = m.geom(e, xi, m.nodes0);
      const double pref = (5.0 / 3.0 - 1.0) * 2.0 * efun(g.x);
      CHECK(p.eval(g.x) == doctest::Approx(pref).epsilon(1e-10));
    }
  }
}

TEST_CASE("activity flags follow the initial volume fractions") {
  const double lo[2] = {0, 0}, hi[2] = {1, 1};
  Mesh m(1, 2, 10, 1, lo, hi);
  LevelSet ls;
  ls.init(m, [](const double* x) { return 0.55 - x[0]; });
  Topology topo;
  topo.build(m, ls);
  std::function<double(const double*)> rho0[2] = {
      [](const double*) { return 1.0; }, [](const double*) { return 0.125; }};
  Materials mat;
  mat.init(m, topo, rho0, 4);
  for (int e = 0; e < m.nelems; ++e) {
    CHECK((mat.active[0][e] != 0) == (topo.alpha0[e] > 0.0));
    CHECK((mat.active[1][e] != 0) == (topo.alpha0[e] < 1.0));
  }
}
