"""Finite-model engine for component spaces, hypercoverings and their cohomology."""

from ._core import (
    bg,
    cohomology,
    components,
    group_cohomology,
    pi1_bg,
    run_cli,
)

__all__ = [
    "bg",
    "cohomology",
    "components",
    "group_cohomology",
    "pi1_bg",
    "run_cli",
]
