#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "hydrosim/runner.hpp"

using namespace hydro;
namespace fs = std::filesystem;

TEST_CASE("problem catalog validates names and refinements") {
  CHECK_THROWS_AS(make_problem("nosuch", 0), std::invalid_argument);
  CHECK_THROWS_AS(make_problem("sod", -1), std::invalid_argument);
  Problem sod = make_problem("sod", 0);
  CHECK(sod.dim == 1);
  CHECK(sod.ne[0] == 100);
  CHECK(sod.t_final == doctest::Approx(0.2));
  CHECK(sod.eos[0].gamma == doctest::Approx(2.0));
  CHECK(sod.eos[1].gamma == doctest::Approx(1.4));
  Problem sod1 = make_problem("sod", 1);
  CHECK(sod1.ne[0] == 200);

  Problem tg = make_problem("taylor-green", 2);
  CHECK(tg.dim == 2);
  CHECK(tg.ne[0] == 8);
  CHECK(static_cast<bool>(tg.vexact));
  CHECK(static_cast<bool>(tg.esrc));

  Problem wa = make_problem("water-air", 0);
  CHECK(wa.eos[0].pinf == doctest::Approx(6.0e8));
  Problem tp = make_problem("triple-point", 0);
  CHECK(tp.ne[0] == 70);
  CHECK(tp.ne[1] == 30);
  CHECK(tp.hi[0] == doctest::Approx(7.0));
}

TEST_CASE("setup and state initialization interpolate the analytic data") {
  RunConfig cfg;
  cfg.problem = "taylor-green";
  cfg.order = 2;
  cfg.refine = 1;
  Simulation sim;
  sim.setup(cfg);
  CHECK(sim.mesh.nelems == 16);
  State s;
  init_state(sim, s);
  for (int n = 0; n < sim.mesh.nnodes; ++n) {
    double v[2];
    sim.prob.v0(&sim.mesh.nodes0[n * 2], v);
    CHECK(s.v[n * 2 + 0] == doctest::Approx(v[0]).epsilon(1e-13));
    CHECK(s.v[n * 2 + 1] == doctest::Approx(v[1]).epsilon(1e-13));
  }
  CHECK(s.e[0].size() == static_cast<size_t>(sim.mesh.nelems) * sim.mesh.nene);

  CHECK_THROWS_AS(
      [] {
        RunConfig bad;
        bad.order = 7;
        Simulation sm;
        sm.setup(bad);
      }(),
      std::invalid_argument);
}

TEST_CASE("benchmark runner writes the advertised artifacts") {
  fs::path out = fs::temp_directory_path() / "hydrosim_test_run";
  fs::remove_all(out);
  RunConfig cfg;
  cfg.problem = "sod";
  cfg.order = 2;
  cfg.refine = 0;
  cfg.tmax = 0.05;
  cfg.out_dir = out.string();
  cfg.output_every = 10;
  cfg.progress = false;
  RunResult r = run_benchmark(cfg);
  REQUIRE(r.ok);
  CHECK(r.t_end == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(r.steps > 5);
  CHECK(r.mass_drift[0] < 1e-11);
  CHECK(r.mass_drift[1] < 1e-11);
  CHECK(r.gap.found);
  CHECK(r.has_p_star);
  CHECK(r.p_star == doctest::Approx(0.43033193719713).epsilon(1e-10));

  // timeseries.csv with the documented header
  std::ifstream ts(out / "timeseries.csv");
  REQUIRE(ts.good());
  std::string header;
  std::getline(ts, header);
  CHECK(header ==
        "step,t,mass1,mass2,momentum_x,momentum_y,internal_energy,"
        "kinetic_energy,total_energy,emom_proxy,gap_p1,gap_p2");
  int rows = 0;
  for (std::string line; std::getline(ts, line);)
    if (!line.empty()) ++rows;
  CHECK(rows >= 2);

  // point_samples.csv: 1-based material ids and x,rho,e,p columns
  std::ifstream psf(out / "point_samples.csv");
  REQUIRE(psf.good());
  std::getline(psf, header);
  CHECK(header == "material,x,y,rho,e,p,vx,vy");

  // summary.json parses and echoes the run
  std::ifstream js(out / "summary.json");
  REQUIRE(js.good());
  nlohmann::json j = nlohmann::json::parse(js);
  CHECK(j["problem"] == "sod");
  CHECK(j["order"] == 2);
  CHECK(j["ok"] == true);
  CHECK(j["distance_mode"] == "one-shot-renormalization");
  CHECK(j.contains("mass_drift"));
  CHECK(j.contains("wall_seconds"));
  fs::remove_all(out);
}

TEST_CASE("2D runs emit legacy VTK files") {
  fs::path out = fs::temp_directory_path() / "hydrosim_test_vtk";
  fs::remove_all(out);
  RunConfig cfg;
  cfg.problem = "taylor-green";
  cfg.order = 2;
  cfg.refine = 0;
  cfg.tmax = 0.02;
  cfg.out_dir = out.string();
  cfg.progress = false;
  RunResult r = run_benchmark(cfg);
  REQUIRE(r.ok);
  CHECK(r.has_vel_err);
  REQUIRE(fs::exists(out / "fields_000000.vtk"));
  std::ifstream v(out / "fields_000000.vtk");
  std::string line;
  std::getline(v, line);
  CHECK(line.rfind("# vtk DataFile", 0) == 0);
  bool found_final = false;
  for (const auto& ent : fs::directory_iterator(out)) {
    const std::string n = ent.path().filename().string();
    if (n.rfind("fields_", 0) == 0 && n != "fields_000000.vtk")
      found_final = true;
  }
  CHECK(found_final);
  fs::remove_all(out);
}

TEST_CASE("convergence study refines and reports rates") {
  RunConfig base;
  base.problem = "taylor-green";
  base.order = 2;
  base.cfl = 0.5;
  base.tmax = 0.1;  // short horizon keeps the ladder cheap
  base.progress = false;
  auto rows = convergence_study(base, {2}, {0, 1}, "");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].refine == 0);
  CHECK(rows[1].refine == 1);
  CHECK(rows[1].l1 < rows[0].l1);
  CHECK(rows[1].rate > 1.0);
}
