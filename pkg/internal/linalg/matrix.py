"""
ComplexMatrix 载体：稠密复方阵的校验与基础谓词
"""
from typing import Optional

import numpy as np

from internal.linalg.tolerance import Tolerance, resolve_tolerance
from pkg.errors import DimMismatch, BadDomain


def as_matrix(M, name: str = "M") -> np.ndarray:
    """
    校验并转换为 complex128 方阵（返回新数组，不修改输入）

    Raises:
        DimMismatch: 非方阵
        BadDomain: 含 NaN / Inf
    """
    arr = np.array(M, dtype=np.complex128, copy=True)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise DimMismatch(f"{name} 必须是非空方阵", shape=arr.shape)
    if not np.all(np.isfinite(arr)):
        raise BadDomain(f"{name} 含有非有限元素")
    return arr


def check_same_dim(X: np.ndarray, Y: np.ndarray) -> int:
    """两个方阵维度一致时返回 n"""
    if X.shape != Y.shape:
        raise DimMismatch("矩阵维度不一致", left=X.shape, right=Y.shape)
    return X.shape[0]


def hermitian_part(M: np.ndarray) -> np.ndarray:
    """(M + M*)/2"""
    return 0.5 * (M + M.conj().T)


def max_abs(M: np.ndarray) -> float:
    return float(np.max(np.abs(M))) if M.size else 0.0


def is_hermitian(M: np.ndarray, tol: Optional[Tolerance] = None) -> bool:
    """‖M − M*‖_max ≤ hermitian·max(1, ‖M‖_max)"""
    tol = resolve_tolerance(tol)
    return max_abs(M - M.conj().T) <= tol.hermitian * max(1.0, max_abs(M))


def commutator_defect(N: np.ndarray) -> float:
    """‖N*N − NN*‖_max"""
    Nh = N.conj().T
    return max_abs(Nh @ N - N @ Nh)
