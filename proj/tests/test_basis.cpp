#include <doctest.h>

#include <cmath>

#include "hydrosim/lagrange.hpp"
#include "hydrosim/quadrature.hpp"

using namespace hydro;

TEST_CASE("gauss-legendre nodes and weights match reference values") {
  // 4-point rule on [0,1], reference values from an independent computation
  Rule1D r = gauss_legendre(4);
  const double xs[4] = {0.069431844202974, 0.330009478207572,
                        0.669990521792428, 0.930568155797026};
  const double ws[4] = {0.173927422568727, 0.326072577431273,
                        0.326072577431273, 0.173927422568727};
  for (int i = 0; i < 4; ++i) {
    CHECK(r.x[i] == doctest::Approx(xs[i]).epsilon(1e-13));
    CHECK(r.w[i] == doctest::Approx(ws[i]).epsilon(1e-13));
  }
}

TEST_CASE("gauss-legendre is exact for its design degree") {
  for (int n = 1; n <= 8; ++n) {
    Rule1D r = gauss_legendre(n);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += r.w[i] * std::pow(r.x[i], d);
      CHECK(acc == doctest::Approx(1.0 / (d + 1)).epsilon(1e-13));
    }
  }
}

TEST_CASE("rule selection covers the requested degree") {
  for (int deg = 1; deg <= 14; ++deg) {
    Rule1D r = gauss_legendre_for_degree(deg);
    CHECK(2 * r.n() - 1 >= deg);
  }
  CHECK(gauss_legendre_for_degree(7).n() == 4);  // order-2 default rule
}

TEST_CASE("gauss-lobatto includes endpoints and integrates exactly") {
  Rule1D r = gauss_lobatto(5);
  CHECK(r.x.front() == 0.0);
  CHECK(r.x.back() == 1.0);
  CHECK(r.x[1] == doctest::Approx(0.172673164646011).epsilon(1e-13));
  CHECK(r.x[2] == doctest::Approx(0.5).epsilon(1e-13));
  // n-point Lobatto is exact to degree 2n-3
  for (int d = 0; d <= 7; ++d) {
    double acc = 0.0;
    for (int i = 0; i < r.n(); ++i) acc += r.w[i] * std::pow(r.x[i], d);
    CHECK(acc == doctest::Approx(1.0 / (d + 1)).epsilon(1e-13));
  }
}

TEST_CASE("quadrature approximates a transcendental integral") {
  // int_0^1 exp(x) sin(3x) dx, reference from an independent computation
  const double exact = 1.145683979500051;
  Rule1D r = gauss_legendre(8);
  double acc = 0.0;
  for (int i = 0; i < r.n(); ++i)
    acc += r.w[i] * std::exp(r.x[i]) * std::sin(3.0 * r.x[i]);
  CHECK(acc == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("tensor rule integrates a separable 2D function") {
  // int exp(x)cos(2y) over [0,1]^2
  const double exact = 0.781214622589569;
  TensorRule t = tensor_rule(gauss_legendre(8), 2);
  double acc = 0.0;
  for (int q = 0; q < t.npts(); ++q)
    acc += t.wts[q] * std::exp(t.pt(q, 0)) * std::cos(2.0 * t.pt(q, 1));
  CHECK(acc == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("lagrange basis: partition of unity, nodal values, derivatives") {
  for (int order = 1; order <= 4; ++order) {
    Lagrange1D l(gauss_lobatto(order + 1).x);
    double v[8], d[8];
    // partition of unity and derivative sum zero at arbitrary points
    for (double x : {0.0, 0.12, 0.5, 0.77, 1.0}) {
      l.eval(x, v, d);
      double sv = 0.0, sd = 0.0;
      for (int i = 0; i < l.n(); ++i) { sv += v[i]; sd += d[i]; }
      CHECK(sv == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(std::abs(sd) < 1e-11);
    }
    // Kronecker property at the nodes
    for (int j = 0; j < l.n(); ++j) {
      l.eval(l.nodes[j], v, d);
      for (int i = 0; i < l.n(); ++i)
        CHECK(v[i] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-13));
    }
    // derivative reproduces polynomials of the basis degree
    for (double x : {0.3, 0.9}) {
      l.eval(x, v, d);
      double acc = 0.0, dacc = 0.0;
      for (int i = 0; i < l.n(); ++i) {
        acc += v[i] * std::pow(l.nodes[i], order);
        dacc += d[i] * std::pow(l.nodes[i], order);
      }
      CHECK(acc == doctest::Approx(std::pow(x, order)).epsilon(1e-12));
      CHECK(dacc ==
            doctest::Approx(order * std::pow(x, order - 1)).epsilon(1e-11));
    }
  }
}

TEST_CASE("tensor basis reproduces bivariate polynomials") {
  TensorBasis b(2, 3, true);
  double v[16], g[32];
  const double xi[2] = {0.37, 0.81};
  b.eval(xi, v, g);
  // f = x^3 y^2 interpolated at the tensor nodes
  const auto& nd = b.line.nodes;
  double acc = 0.0, gx = 0.0, gy = 0.0;
  int a = 0;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i, ++a) {
      const double f = std::pow(nd[i], 3) * std::pow(nd[j], 2);
      acc += v[a] * f;
      gx += g[a * 2 + 0] * f;
      gy += g[a * 2 + 1] * f;
    }
  CHECK(acc == doctest::Approx(std::pow(xi[0], 3) * xi[1] * xi[1])
                   .epsilon(1e-13));
  CHECK(gx == doctest::Approx(3 * xi[0] * xi[0] * xi[1] * xi[1])
                  .epsilon(1e-12));
  CHECK(gy ==
        doctest::Approx(2 * std::pow(xi[0], 3) * xi[1]).epsilon(1e-12));
}
