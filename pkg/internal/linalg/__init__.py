"""
稠密复线性代数内核

Hermitian 特征分解（循环 Jacobi）、SVD、矩阵指数、谱半径，以及共享容差策略。
"""
from .tolerance import Tolerance, DEFAULT_TOLERANCE, resolve_tolerance
from .matrix import (
    as_matrix,
    check_same_dim,
    hermitian_part,
    is_hermitian,
    commutator_defect,
    max_abs,
)
from .eigen import EigenSystem, hermitian_eigen, spectral_radius
from .decomposition import SvdSystem, svd, orthonormal_completion, operator_norm
from .exponential import expm, expm_hermitian, expm_general

__all__ = [
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "resolve_tolerance",
    "as_matrix",
    "check_same_dim",
    "hermitian_part",
    "is_hermitian",
    "commutator_defect",
    "max_abs",
    "EigenSystem",
    "hermitian_eigen",
    "spectral_radius",
    "SvdSystem",
    "svd",
    "orthonormal_completion",
    "operator_norm",
    "expm",
    "expm_hermitian",
    "expm_general",
]
