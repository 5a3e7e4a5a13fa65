#include <doctest.h>

#include <cmath>
#include <random>

#include "hydrosim/poly.hpp"
#include "hydrosim/quadrature.hpp"

using namespace hydro;

static TensorPoly random_poly(int dim, int deg, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TensorPoly p;
  p.dim = dim;
  p.deg = deg;
  p.center[0] = 0.2;
  p.center[1] = -0.1;
  p.scale = 0.7;
  p.c.resize(p.ncoef());
  for (auto& c : p.c) c = u(rng);
  return p;
}

TEST_CASE("taylor shift of a polynomial is exact when enough terms are used") {
  std::mt19937 rng(12345);
  for (int dim : {1, 2})
    for (int deg : {1, 2, 3, 4}) {
      TensorPoly p = random_poly(dim, deg, rng);
      const double x0[2] = {0.31, -0.44};
      const double d[2] = {0.17, 0.23};
      double xt[2] = {x0[0] + d[0], x0[1] + d[1]};
      const double exact = p.eval(xt);
      const double shifted = p.taylor_shift(x0, d, dim * deg);
      CHECK(shifted == doctest::Approx(exact).epsilon(1e-12));
      // tail + value decomposition
      CHECK(p.taylor_tail(x0, d, dim * deg) + p.eval(x0) ==
            doctest::Approx(exact).epsilon(1e-12));
      // zero step: tail vanishes
      const double z[2] = {0.0, 0.0};
      CHECK(std::abs(p.taylor_tail(x0, z, 4)) < 1e-14);
    }
}

TEST_CASE("truncated taylor shift converges at the expected rate") {
  // transcendental target: remainder should scale like |d|^{terms+1}
  const double x0[2] = {0.3, 0.4};
  TensorPoly p;  // fit exp(x+y/2) on a small patch
  std::vector<double> pts, vals;
  TensorRule tr = tensor_rule(gauss_legendre(7), 2);
  for (int q = 0; q < tr.npts(); ++q) {
    const double x = 0.2 + 0.3 * tr.pt(q, 0);
    const double y = 0.3 + 0.3 * tr.pt(q, 1);
    pts.push_back(x);
    pts.push_back(y);
    vals.push_back(std::exp(x + 0.5 * y));
  }
  const double ctr[2] = {0.35, 0.45};
  REQUIRE(fit_poly(2, 6, ctr, 0.3, pts, vals, p));
  for (int terms : {1, 2, 3}) {
    double e1 = 0.0, e2 = 0.0;
    for (int k = 0; k < 2; ++k) {
      const double h = k == 0 ? 0.08 : 0.04;
      const double d[2] = {h, 0.5 * h};
      const double xt[2] = {x0[0] + d[0], x0[1] + d[1]};
      const double err =
          std::abs(p.taylor_shift(x0, d, terms) - std::exp(xt[0] + 0.5 * xt[1]));
      (k == 0 ? e1 : e2) = err;
    }
    const double rate = std::log2(e1 / e2);
    CHECK(rate > terms + 0.5);
  }
}

TEST_CASE("directional line restriction matches finite differences") {
  std::mt19937 rng(99);
  TensorPoly p = random_poly(2, 3, rng);
  const double x0[2] = {0.1, 0.2};
  const double d[2] = {0.6, -0.3};
  auto g = p.line_coeffs(x0, d);
  // g(s) must equal p(x0 + s d)
  for (double s : {0.0, 0.25, 1.0, -0.5}) {
    double acc = 0.0;
    for (int k = static_cast<int>(g.size()) - 1; k >= 0; --k)
      acc = acc * s + g[k];
    const double xt[2] = {x0[0] + s * d[0], x0[1] + s * d[1]};
    CHECK(acc == doctest::Approx(p.eval(xt)).epsilon(1e-12));
  }
}

TEST_CASE("gradient matches central differences") {
  std::mt19937 rng(7);
  for (int dim : {1, 2}) {
    TensorPoly p = random_poly(dim, 4, rng);
    const double x0[2] = {0.15, -0.35};
    double g[2];
    p.gradient(x0, g);
    const double h = 1e-6;
    for (int c = 0; c < dim; ++c) {
      double xp[2] = {x0[0], x0[1]}, xm[2] = {x0[0], x0[1]};
      xp[c] += h;
      xm[c] -= h;
      const double fd = (p.eval(xp) - p.eval(xm)) / (2 * h);
      CHECK(g[c] == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("least-squares fit reproduces an exact polynomial") {
  std::mt19937 rng(2024);
  TensorPoly truth = random_poly(2, 4, rng);
  TensorRule tr = tensor_rule(gauss_legendre(6), 2);
  std::vector<double> pts, vals;
  for (int q = 0; q < tr.npts(); ++q) {
    const double x[2] = {tr.pt(q, 0), tr.pt(q, 1)};
    pts.push_back(x[0]);
    pts.push_back(x[1]);
    vals.push_back(truth.eval(x));
  }
  const double ctr[2] = {0.5, 0.5};
  TensorPoly fitted;
  REQUIRE(fit_poly(2, 4, ctr, 0.5, pts, vals, fitted));
  for (double x : {0.1, 0.9})
    for (double y : {0.2, 0.8}) {
      const double xx[2] = {x, y};
      CHECK(fitted.eval(xx) == doctest::Approx(truth.eval(xx)).epsilon(1e-10));
    }
}

TEST_CASE("rank-deficient sampling is reported") {
  // all samples on a line cannot determine a 2D quadratic
  std::vector<double> pts, vals;
  for (int k = 0; k < 12; ++k) {
    const double t = k / 11.0;
    pts.push_back(t);
    pts.push_back(0.5);
    vals.push_back(t * t);
  }
  const double ctr[2] = {0.5, 0.5};
  TensorPoly p;
  CHECK_FALSE(fit_poly(2, 2, ctr, 0.5, pts, vals, p));
}
