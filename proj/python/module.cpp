// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hydrosim/riemann.hpp"
#include "hydrosim/runner.hpp"

namespace py = pybind11;
using namespace hydro;

PYBIND11_MODULE(_core, m) {
  m.doc() = "two-material Lagrangian hydrodynamics with a shifted interface";

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("problem", &RunConfig::problem)
      .def_readwrite("order", &RunConfig::order)
      .def_readwrite("refine", &RunConfig::refine)
      .def_readwrite("cfl", &RunConfig::cfl)
      .def_readwrite("tmax", &RunConfig::tmax)
      .def_readwrite("taylor_terms", &RunConfig::taylor_terms)
      .def_readwrite("recon_order", &RunConfig::recon_order)
      .def_readwrite("shift", &RunConfig::shift)
      .def_readwrite("out_dir", &RunConfig::out_dir)
      .def_readwrite("output_every", &RunConfig::output_every)
      .def_readwrite("progress", &RunConfig::progress);

  py::class_<Conservation>(m, "Conservation")
      .def_property_readonly(
          "mass",
          [](const Conservation& c) {
            return py::make_tuple(c.mass[0], c.mass[1]);
          })
      .def_property_readonly(
          "momentum",
          [](const Conservation& c) {
            return py::make_tuple(c.momentum[0], c.momentum[1]);
          })
      .def_readonly("internal_energy", &Conservation::internal_energy)
      .def_readonly("kinetic_energy", &Conservation::kinetic_energy)
      .def_readonly("total_energy", &Conservation::total_energy)
      .def_readonly("emom_proxy", &Conservation::emom_proxy);

  py::class_<ErrNorms>(m, "ErrNorms")
      .def_readonly("l1", &ErrNorms::l1)
      .def_readonly("l2", &ErrNorms::l2)
      .def_readonly("linf", &ErrNorms::linf);

  py::class_<GapInfo>(m, "GapInfo")
      .def_readonly("found", &GapInfo::found)
      .def_readonly("x", &GapInfo::x)
      .def_readonly("p1", &GapInfo::p1)
      .def_readonly("p2", &GapInfo::p2);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("ok", &RunResult::ok)
      .def_readonly("error", &RunResult::error)
      .def_readonly("steps", &RunResult::steps)
      .def_readonly("rejections", &RunResult::rejections)
      .def_readonly("t_end", &RunResult::t_end)
      .def_readonly("wall_seconds", &RunResult::wall_seconds)
      .def_readonly("initial", &RunResult::initial)
      .def_readonly("final", &RunResult::final_)
      .def_property_readonly(
          "mass_drift",
          [](const RunResult& r) {
            return py::make_tuple(r.mass_drift[0], r.mass_drift[1]);
          })
      .def_readonly("momentum_drift", &RunResult::momentum_drift)
      .def_readonly("energy_drift", &RunResult::energy_drift)
      .def_readonly("vel_err", &RunResult::vel_err)
      .def_readonly("has_vel_err", &RunResult::has_vel_err)
      .def_readonly("gap", &RunResult::gap)
      .def_readonly("p_star", &RunResult::p_star)
      .def_readonly("has_p_star", &RunResult::has_p_star)
      .def_readonly("invalid_normals", &RunResult::invalid_normals)
      .def_readonly("sample_rows", &RunResult::sample_rows);

  py::class_<ConvRow>(m, "ConvRow")
      .def_readonly("order", &ConvRow::order)
      .def_readonly("refine", &ConvRow::refine)
      .def_readonly("l1", &ConvRow::l1)
      .def_readonly("rate", &ConvRow::rate)
      .def_readonly("momentum_drift", &ConvRow::momentum_drift)
      .def_readonly("energy_drift", &ConvRow::energy_drift)
      .def_readonly("wall_seconds", &ConvRow::wall_seconds);

  m.def("run_benchmark", &run_benchmark, py::arg("config"),
        py::call_guard<py::gil_scoped_release>(),
        "Run one benchmark and return its summary; writes CSV/VTK/JSON "
        "artifacts when config.out_dir is set.");
  m.def("convergence_study", &convergence_study, py::arg("base"),
        py::arg("orders"), py::arg("refines"), py::arg("out_dir") = "",
        py::call_guard<py::gil_scoped_release>(),
        "Run a refinement ladder and return one row per (order, refine).");

  py::class_<RiemannState>(m, "RiemannState")
      .def(py::init([](double rho, double v, double p, double gamma,
                       double pinf) {
             return RiemannState{rho, v, p, gamma, pinf};
           }),
           py::arg("rho"), py::arg("v"), py::arg("p"), py::arg("gamma"),
           py::arg("pinf") = 0.0)
      .def_readwrite("rho", &RiemannState::rho)
      .def_readwrite("v", &RiemannState::v)
      .def_readwrite("p", &RiemannState::p)
      .def_readwrite("gamma", &RiemannState::gamma)
      .def_readwrite("pinf", &RiemannState::pinf);

  py::class_<RiemannSolution>(m, "RiemannSolution")
      .def_readonly("p_star", &RiemannSolution::p_star)
      .def_readonly("v_star", &RiemannSolution::v_star)
      .def_readonly("rho_star_l", &RiemannSolution::rho_star_l)
      .def_readonly("rho_star_r", &RiemannSolution::rho_star_r)
      .def_readonly("iterations", &RiemannSolution::iterations)
      .def(
          "sample",
          [](const RiemannSolution& s, double xi) {
            double rho, v, p;
            bool is_left;
            s.sample(xi, rho, v, p, is_left);
            return py::make_tuple(rho, v, p, is_left);
          },
          py::arg("xi"),
          "Self-similar state (rho, v, p, is_left) at xi = x/t.");

  m.def("solve_riemann", &solve_riemann, py::arg("left"), py::arg("right"),
        py::arg("tol") = 1e-14,
        "Exact two-material stiffened-gas Riemann solution.");
}
