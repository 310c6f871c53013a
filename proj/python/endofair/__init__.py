"""Optimal and fairness-constrained policies in an endogenous-crime model.

The heavy lifting lives in the compiled ``_endofair`` module; this package
re-exports it.
"""

from ._endofair import (
    FileError,
    HypothesisError,
    InfeasibleError,
    InvalidScenario,
    Scenario,
    SchemaError,
    canonical,
    extremality_check,
    fair,
    first_best,
    load_scenario,
    metrics,
    scenario_from_text,
    second_best,
    simulate,
    solve,
    sweep_csv,
    verify,
)

__all__ = [
    "FileError",
    "HypothesisError",
    "InfeasibleError",
    "InvalidScenario",
    "Scenario",
    "SchemaError",
    "canonical",
    "extremality_check",
    "fair",
    "first_best",
    "load_scenario",
    "metrics",
    "scenario_from_text",
    "second_best",
    "simulate",
    "solve",
    "sweep_csv",
    "verify",
]
