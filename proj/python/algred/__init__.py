"""Exact algebraic reduction and reduced geometric quantization workbench."""

from ._algred import (
    AlgredError,
    canonical,
    groebner_basis,
    normal_form,
    poisson_bracket,
    run_scenario_file,
    run_scenario_text,
)

__all__ = [
    "AlgredError",
    "canonical",
    "groebner_basis",
    "normal_form",
    "poisson_bracket",
    "run_scenario_file",
    "run_scenario_text",
]
