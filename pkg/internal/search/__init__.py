"""
反例 / 紧性搜索
"""
from .objectives import (
    LIE_TROTTER_Z_THRESHOLD,
    OBJECTIVE_MAP,
    get_objective,
    is_proved,
    list_objective_ids,
)
from .projection import FamilyShape, InstanceShape, PartShape, perturb
from .hill_climb import PROVED_FLOOR, climb, minimize_margin, objective_margin

__all__ = [
    "LIE_TROTTER_Z_THRESHOLD",
    "OBJECTIVE_MAP",
    "get_objective",
    "is_proved",
    "list_objective_ids",
    "FamilyShape",
    "InstanceShape",
    "PartShape",
    "perturb",
    "PROVED_FLOOR",
    "climb",
    "minimize_margin",
    "objective_margin",
]
