#include <doctest.h>

#include <cmath>

#include "hydrosim/diagnostics.hpp"

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

Setup two_material(int dim, int order, int n, double p0) {
  Setup su;
  const double lo[2] = {0, 0}, hi[2] = {1, 1};
  su.mesh = Mesh(dim, order, n, dim == 2 ? n : 1, lo, hi);
  const double xc = 0.5 + 0.5 / n;
  su.ls.init(su.mesh, [xc](const double* x) { return xc - x[0]; });
  su.topo.build(su.mesh, su.ls);
  std::function<double(const double*)> rho0[2] = {
      [](const double*) { return 1.0; }, [](const double*) { return 0.125; }};
  su.mat.eos[0] = Eos{5.0 / 3.0, 0.0};
  su.mat.eos[1] = Eos{1.4, 0.0};
  su.mat.init(su.mesh, su.topo, rho0, std::max(4, order));
  su.op = std::make_unique<Hydro>(su.mesh, su.ls, su.topo, su.mat,
                                  AssemblyConfig{});
  su.s.x = su.mesh.nodes0;
  su.s.v.assign(static_cast<size_t>(su.mesh.nnodes) * dim, 0.0);
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

TEST_CASE("conserved quantities match the analytic initial data") {
  const int n = 6;
  Setup su = two_material(2, 2, n, 1.0);
  StageCache c;
  su.op->build_cache(su.s, c);
  Conservation cc = conservation(*su.op, c, su.s);

  const double xc = 0.5 + 0.5 / n;
  // planar interface: masses are the slab areas times the densities, up to
  // the volume-fraction sampling error on the cut column
  CHECK(cc.mass[0] == doctest::Approx(1.0 * xc).epsilon(5e-3));
  CHECK(cc.mass[1] == doctest::Approx(0.125 * (1.0 - xc)).epsilon(5e-3));
  CHECK(std::abs(cc.momentum[0]) < 1e-14);
  CHECK(std::abs(cc.momentum[1]) < 1e-14);
  CHECK(cc.kinetic_energy == 0.0);
  // uniform e: internal energy = m1 e1 + m2 e2 with the computed masses
  const double e1 = su.mat.eos[0].energy(1.0, 1.0);
  const double e2 = su.mat.eos[1].energy(0.125, 1.0);
  CHECK(cc.internal_energy ==
        doctest::Approx(cc.mass[0] * e1 + cc.mass[1] * e2).epsilon(1e-12));
  CHECK(cc.total_energy == cc.internal_energy);
}

TEST_CASE("velocity error vanishes for a represented field and scales") {
  Setup su = two_material(2, 2, 4, 1.0);
  for (int n = 0; n < su.mesh.nnodes; ++n) {
    su.s.v[n * 2 + 0] = su.mesh.nodes0[n * 2 + 0];
    su.s.v[n * 2 + 1] = -su.mesh.nodes0[n * 2 + 1];
  }
  StageCache c;
  su.op->build_cache(su.s, c);
  auto exact = [](const double* x, double* v) {
    v[0] = x[0];
    v[1] = -x[1];
  };
  ErrNorms e0 = velocity_error(*su.op, c, su.s, exact);
  CHECK(e0.l1 < 1e-13);
  CHECK(e0.l2 < 1e-13);
  CHECK(e0.linf < 1e-13);
  // constant offset of magnitude 1: L1 = Linf = 1, L2 = sqrt(volume)
  auto off = [](const double* x, double* v) {
    v[0] = x[0] + 1.0;
    v[1] = -x[1];
  };
  ErrNorms e1 = velocity_error(*su.op, c, su.s, off);
  CHECK(e1.l1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e1.l2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e1.linf == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("density error integrates over each material's own region") {
  Setup su = two_material(2, 2, 6, 1.0);
  StageCache c;
  su.op->build_cache(su.s, c);
  // exact densities: zero error for the true values
  CHECK(density_error_l1(*su.op, c, 0, [](const double*) { return 1.0; }) <
        1e-12);
  CHECK(density_error_l1(*su.op, c, 1, [](const double*) { return 0.125; }) <
        1e-12);
  // offsetting material 1's reference by 0.1 integrates to 0.1 * its area
  const double xc = 0.5 + 0.5 / 6.0;
  const double err =
      density_error_l1(*su.op, c, 0, [](const double*) { return 1.1; });
  CHECK(err == doctest::Approx(0.1 * xc).epsilon(0.02));
}

TEST_CASE("point samples partition by the indicator sign") {
  Setup su = two_material(2, 2, 6, 1.0);
  StageCache c;
  su.op->build_cache(su.s, c);
  auto samples = point_samples(*su.op, c, su.s);
  CHECK(!samples.empty());
  const double xc = 0.5 + 0.5 / 6.0;
  long n1 = 0, n2 = 0;
  for (const auto& ps : samples) {
    if (ps.material == 0) {
      ++n1;
      CHECK(ps.x[0] <= xc + 1e-10);
      CHECK(ps.rho == doctest::Approx(1.0).epsilon(1e-12));
    } else {
      ++n2;
      CHECK(ps.x[0] >= xc - 1e-10);
      CHECK(ps.rho == doctest::Approx(0.125).epsilon(1e-12));
    }
    CHECK(ps.p == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ps.v[0] == 0.0);
  }
  CHECK(n1 > 0);
  CHECK(n2 > 0);
}

TEST_CASE("1D interface pressure gap is zero at uniform pressure") {
  Setup su = two_material(1, 2, 100, 1.0);
  StageCache c;
  su.op->build_cache(su.s, c);
  GapInfo gi = interface_gap_1d(*su.op, c, su.s);
  REQUIRE(gi.found);
  CHECK(gi.x == doctest::Approx(0.5 + 0.5 / 100.0).epsilon(1e-10));
  CHECK(gi.p1 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(gi.p2 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("indicator sign changes count one crossing per node row") {
  const double lo[2] = {0, 0}, hi[2] = {1, 1};
  Mesh m(2, 2, 8, 8, lo, hi);
  LevelSet ls;
  const double xc = 0.5 + 0.5 / 8.0;
  ls.init(m, [xc](const double* x) { return xc - x[0]; });
  std::vector<int> rows, cols;
  eta_sign_changes(m, ls, rows, cols);
  REQUIRE(static_cast<int>(rows.size()) == m.nx[1]);
  for (int r : rows) CHECK(r == 1);
  for (int c : cols) CHECK(c == 0);
}
