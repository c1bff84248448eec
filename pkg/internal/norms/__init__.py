"""
对称范数族
"""
from .symmetric_norm import (
    NormKind,
    SymmetricNorm,
    evaluate,
    log_evaluate_singulars,
    norm_family,
)
from .dominance import kyfan_dominance, cauchy_schwarz_check

__all__ = [
    "NormKind",
    "SymmetricNorm",
    "evaluate",
    "log_evaluate_singulars",
    "norm_family",
    "kyfan_dominance",
    "cauchy_schwarz_check",
]
