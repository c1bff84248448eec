"""
Hermitian 特征分解

默认后端是循环双边 Jacobi（复 Hermitian 版本）：每次旋转先用对角相位
把 2×2 子块化为实对称，再做实 Jacobi 旋转；只更新 p、q 两行两列。
配置 [eigen].backend = "lapack" 时改用 numpy.linalg.eigh，返回同样的
EigenSystem 约定（特征值降序）。
"""
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from internal.config import config
from internal.linalg.matrix import as_matrix, hermitian_part, is_hermitian, max_abs
from internal.linalg.tolerance import Tolerance, resolve_tolerance
from log import logger
from pkg.errors import NotHermitian, NoConvergence, ConfigError

# 非对角元低于 ‖H‖_F 的这个比例时跳过旋转
_SKIP_RATIO = 1e-15


@dataclass(frozen=True)
class EigenSystem:
    """
    特征系统

    Attributes:
        values: 降序实特征值 λ_1 ≥ … ≥ λ_n
        vectors: 列为对应特征向量的酉矩阵
    """
    values: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float, copy=True)
        vectors = np.array(self.vectors, dtype=np.complex128, copy=True)
        values.setflags(write=False)
        vectors.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "vectors", vectors)

    @property
    def dim(self) -> int:
        return int(self.values.shape[0])

    @property
    def increasing(self) -> np.ndarray:
        """ν_1 ≤ … ≤ ν_n"""
        return self.values[::-1].copy()

    def reconstruct(self, values: Optional[np.ndarray] = None) -> np.ndarray:
        """V diag(values) V*（values 缺省为自身特征值）"""
        w = self.values if values is None else np.asarray(values)
        return (self.vectors * w) @ self.vectors.conj().T


def _jacobi_rotation(a_pp: float, a_qq: float, b: complex) -> Tuple[np.ndarray, float, float]:
    """
    计算消去 b = A[p, q] 的 2×2 酉旋转 G = D·R

    D = diag(1, e^{-iφ}) 使子块变为实对称，R = [[c, s], [-s, c]]。

    Returns:
        (G, 新 A[p,p], 新 A[q,q])
    """
    r = abs(b)
    phase = b / r
    theta = 0.5 * math.atan2(2.0 * r, a_qq - a_pp)
    c, s = math.cos(theta), math.sin(theta)
    G = np.array([[c, s],
                  [-s * phase.conjugate(), c * phase.conjugate()]], dtype=np.complex128)
    new_pp = c * c * a_pp - 2.0 * c * s * r + s * s * a_qq
    new_qq = s * s * a_pp + 2.0 * c * s * r + c * c * a_qq
    return G, new_pp, new_qq


def _jacobi_eigen(H: np.ndarray, budget: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    循环 Jacobi 主循环

    Args:
        H: Hermitian 矩阵（会被复制）
        budget: 旋转次数上限

    Returns:
        (未排序特征值, 特征向量)
    """
    n = H.shape[0]
    A = H.copy()
    V = np.eye(n, dtype=np.complex128)
    skip_tol = max(np.finfo(float).tiny, _SKIP_RATIO * float(np.linalg.norm(A)))
    rotations = 0

    while True:
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = A[p, q]
                if abs(b) <= skip_tol:
                    continue
                if rotations >= budget:
                    raise NoConvergence("Jacobi 旋转超出预算", dim=n, budget=budget)

                G, new_pp, new_qq = _jacobi_rotation(A[p, p].real, A[q, q].real, b)
                idx = [p, q]
                A[:, idx] = A[:, idx] @ G
                A[idx, :] = G.conj().T @ A[idx, :]
                A[p, p] = new_pp
                A[q, q] = new_qq
                A[p, q] = 0.0
                A[q, p] = 0.0
                V[:, idx] = V[:, idx] @ G

                rotations += 1
                rotated = True
        if not rotated:
            break

    logger.debug("Jacobi 收敛", dim=n, rotations=rotations)
    return np.real(np.diag(A)).copy(), V


def hermitian_eigen(H, tol: Optional[Tolerance] = None, backend: Optional[str] = None) -> EigenSystem:
    """
    Hermitian 矩阵的完整特征分解

    Args:
        H: Hermitian 方阵（‖H − H*‖_max ≤ 1e-12·max(1, ‖H‖_max)）
        tol: 容差策略
        backend: "jacobi" / "lapack"，缺省取配置

    Returns:
        EigenSystem: 特征值降序；相同特征值保持原下标顺序

    Raises:
        NotHermitian: 输入不是 Hermitian
        NoConvergence: Jacobi 超出 30·n² 次旋转预算
    """
    tol = resolve_tolerance(tol)
    M = as_matrix(H, "H")
    if not is_hermitian(M, tol):
        raise NotHermitian("输入矩阵不是 Hermitian", defect=max_abs(M - M.conj().T))
    M = hermitian_part(M)
    n = M.shape[0]

    eigen_cfg = config.eigen_config
    backend = backend or eigen_cfg.get("backend", "jacobi")

    if backend == "jacobi":
        budget = int(eigen_cfg.get("rotation_budget_factor", 30)) * n * n
        values, vectors = _jacobi_eigen(M, budget)
    elif backend == "lapack":
        try:
            values, vectors = np.linalg.eigh(M)
        except np.linalg.LinAlgError as e:
            raise NoConvergence("eigh 未收敛", reason=e)
        vectors = vectors.astype(np.complex128)
    else:
        raise ConfigError("未知的特征分解后端", backend=backend)

    order = np.argsort(-values, kind="stable")
    return EigenSystem(values=values[order].copy(), vectors=vectors[:, order].copy())


def spectral_radius(M) -> float:
    """
    谱半径 ρ(M) = max |eigenvalue|（一般方阵，走 numpy.linalg.eigvals）

    Raises:
        NoConvergence: LAPACK 未收敛
    """
    A = as_matrix(M)
    try:
        eigenvalues = np.linalg.eigvals(A)
    except np.linalg.LinAlgError as e:
        raise NoConvergence("eigvals 未收敛", reason=e)
    return float(np.max(np.abs(eigenvalues)))
