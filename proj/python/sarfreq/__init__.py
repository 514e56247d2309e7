"""Exact two-objective receiver-to-frequency assignment.

Thin re-export of the compiled ``_core`` extension.
"""

from ._core import (
    Frontier,
    InfeasibleError,
    InputError,
    NPoint,
    Scenario,
    ScenarioFile,
    SolveResult,
    brute_force_oracle,
    compute_coefficients,
    dump_scenario,
    excess,
    fair_share_default,
    load_scenario,
    max_excess_budget,
    objective1,
    parse_scenario,
    solve_budgeted,
    sweep,
    validate_scenario,
    weight_range,
    weight_sequence_study,
)

__all__ = [
    "Frontier",
    "InfeasibleError",
    "InputError",
    "NPoint",
    "Scenario",
    "ScenarioFile",
    "SolveResult",
    "brute_force_oracle",
    "compute_coefficients",
    "dump_scenario",
    "excess",
    "fair_share_default",
    "load_scenario",
    "max_excess_budget",
    "objective1",
    "parse_scenario",
    "solve_budgeted",
    "sweep",
    "validate_scenario",
    "weight_range",
    "weight_sequence_study",
]
