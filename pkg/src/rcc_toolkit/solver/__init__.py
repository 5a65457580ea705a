"""Constraint solver package initialization"""

from .closure import Inconsistent, Sat, Unsat, a_closure, brute_force_sat, satisfiable_rs
from .network import ConstraintNetwork, merge_equalities
from .realize import (
    Realization,
    default_fork_cap,
    embed_reals,
    grid_interval_realizable,
    realize,
    realize_forks,
)

__all__ = [
    "Inconsistent",
    "Sat",
    "Unsat",
    "a_closure",
    "brute_force_sat",
    "satisfiable_rs",
    "ConstraintNetwork",
    "merge_equalities",
    "Realization",
    "default_fork_cap",
    "embed_reals",
    "grid_interval_realizable",
    "realize",
    "realize_forks",
]
