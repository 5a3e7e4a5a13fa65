# Copyright (c) 2026, the hydrosim authors.
# SPDX-License-Identifier: BSD-3-Clause
"""Two-material Lagrangian shock hydrodynamics with a shifted interface."""

from ._core import (
    Conservation,
    ConvRow,
    ErrNorms,
    GapInfo,
    RiemannSolution,
    RiemannState,
    RunConfig,
    RunResult,
    convergence_study,
    run_benchmark,
    solve_riemann,
)

__all__ = [
    "Conservation",
    "ConvRow",
    "ErrNorms",
    "GapInfo",
    "RiemannSolution",
    "RiemannState",
    "RunConfig",
    "RunResult",
    "convergence_study",
    "run_benchmark",
    "solve_riemann",
]
