// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include <CLI11.hpp>
#include <Eigen/Core>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hydrosim/runner.hpp"

int main(int argc, char** argv) {
  // HYDROSIM_THREADS caps worker threads (the solver itself is serial and
  // deterministic; this only bounds the linear algebra backend)
  if (const char* t = std::getenv("HYDROSIM_THREADS")) {
    const int n = std::atoi(t);
    if (n > 0) Eigen::setNbThreads(n);
  } else {
    Eigen::setNbThreads(1);
  }

  CLI::App app{"two-material Lagrangian hydrodynamics on moving meshes"};
  app.require_subcommand(1);

  hydro::RunConfig cfg;
  std::string shift = "on";

  auto* run = app.add_subcommand("run", "run one benchmark problem");
  run->add_option("--problem", cfg.problem,
                  "taylor-green | sod | water-air | triple-point")
      ->required();
  run->add_option("--order", cfg.order, "kinematic polynomial order (1..4)");
  run->add_option("--refine", cfg.refine, "refinement level (>= 0)");
  run->add_option("--cfl", cfg.cfl, "CFL factor");
  run->add_option("--tmax", cfg.tmax, "final time (default: problem's)");
  run->add_option("--taylor-terms", cfg.taylor_terms,
                  "Taylor terms in the shifted jumps");
  run->add_option("--recon-order", cfg.recon_order,
                  "pressure reconstruction degree (default max(4, order))");
  run->add_option("--shift", shift, "on | off: interface face integrals");
  run->add_option("--out", cfg.out_dir, "output directory");
  run->add_option("--output-every", cfg.output_every,
                  "timeseries cadence in steps");

  std::string orders_s = "2,3,4", refines_s = "0..4", conv_out;
  std::string conv_problem = "taylor-green";
  auto* conv = app.add_subcommand("converge", "refinement convergence study");
  conv->add_option("--problem", conv_problem, "problem (taylor-green)");
  conv->add_option("--orders", orders_s, "comma-separated orders");
  conv->add_option("--refines", refines_s, "a..b or comma-separated levels");
  conv->add_option("--cfl", cfg.cfl, "CFL factor");
  conv->add_option("--out", conv_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      if (shift != "on" && shift != "off") {
        std::fprintf(stderr, "error: --shift must be 'on' or 'off'\n");
        return 2;
      }
      cfg.shift = shift == "on";
      hydro::RunResult r = hydro::run_benchmark(cfg);
      if (!r.ok) {
        std::fprintf(stderr, "numerical abort: %s\n", r.error.c_str());
        return 3;
      }
      std::printf("problem=%s order=%d refine=%d t=%.6g steps=%ld wall=%.2fs\n",
                  cfg.problem.c_str(), cfg.order, cfg.refine, r.t_end, r.steps,
                  r.wall_seconds);
      if (r.has_vel_err)
        std::printf("velocity L1 error = %.6e\n", r.vel_err.l1);
      if (r.gap.found)
        std::printf("interface pressures: p1=%.6e p2=%.6e\n", r.gap.p1,
                    r.gap.p2);
      return 0;
    }

    // converge
    auto parse_list = [](const std::string& s) {
      std::vector<int> out;
      const auto dots = s.find("..");
      if (dots != std::string::npos) {
        const int a = std::stoi(s.substr(0, dots));
        const int b = std::stoi(s.substr(dots + 2));
        for (int k = a; k <= b; ++k) out.push_back(k);
      } else {
        size_t p = 0;
        while (p < s.size()) {
          size_t q = s.find(',', p);
          if (q == std::string::npos) q = s.size();
          out.push_back(std::stoi(s.substr(p, q - p)));
          p = q + 1;
        }
      }
      return out;
    };
    cfg.problem = conv_problem;
    auto rows = hydro::convergence_study(cfg, parse_list(orders_s),
                                         parse_list(refines_s), conv_out);
    for (const auto& r : rows)
      std::printf("order=%d refine=%d l1=%.6e rate=%.3f\n", r.order, r.refine,
                  r.l1, r.rate);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical abort: %s\n", e.what());
    return 3;
  }
}
