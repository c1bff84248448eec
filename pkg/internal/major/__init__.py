"""
优超关系判定
"""
from .majorization import (
    weak_log_majorize,
    log_majorize,
    super_weak_log_majorize,
    weak_majorize,
    weak_log_majorize_by_compound,
    weak_log_majorize_values,
    log_majorize_values,
    super_weak_log_majorize_values,
    weak_majorize_values,
)
from .scalar import scalar_inequality

__all__ = [
    "weak_log_majorize",
    "log_majorize",
    "super_weak_log_majorize",
    "weak_majorize",
    "weak_log_majorize_by_compound",
    "weak_log_majorize_values",
    "log_majorize_values",
    "super_weak_log_majorize_values",
    "weak_majorize_values",
    "scalar_inequality",
]
