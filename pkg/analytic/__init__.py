from analytic import approximation
from analytic import fourier
from analytic import increment
from analytic import trace
from analytic import weyl
from analytic.approximation import diophantine_approx, major_arc_mask, major_arc_membership
from analytic.fourier import (
    BalancedIndicator,
    arc_kernel_rates,
    arc_kernel_report,
    fourier_transform,
    major_arc_energy,
    parseval_check,
    progression_measure_hat,
)
from analytic.increment import (
    Branch,
    IncrementIteration,
    IncrementOutcome,
    density_increment_iterate,
    increment_search,
)
from analytic.trace import IterationTrace, TraceStage, iteration_trace
from analytic.weyl import (
    WeylEvaluation,
    evaluate_weyl,
    weyl_envelope,
    weyl_envelope_report,
    weyl_grid,
    weyl_sum,
)

__all__ = [
    "approximation",
    "fourier",
    "increment",
    "trace",
    "weyl",
    "diophantine_approx",
    "major_arc_mask",
    "major_arc_membership",
    "BalancedIndicator",
    "arc_kernel_rates",
    "arc_kernel_report",
    "fourier_transform",
    "major_arc_energy",
    "parseval_check",
    "progression_measure_hat",
    "Branch",
    "IncrementIteration",
    "IncrementOutcome",
    "density_increment_iterate",
    "increment_search",
    "IterationTrace",
    "TraceStage",
    "iteration_trace",
    "WeylEvaluation",
    "evaluate_weyl",
    "weyl_envelope",
    "weyl_envelope_report",
    "weyl_grid",
    "weyl_sum",
]
