"""
SVD 与正交补全

SVD 通过 M*M 的特征分解得到：右奇异向量 V 取自特征向量，奇异值取
‖M v_j‖（比 sqrt(λ_j) 对小奇异值更准），左因子 u_j = M v_j / σ_j，
再经 Gram–Schmidt 重正交化并按标准基补全为酉矩阵。
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from internal.linalg.eigen import hermitian_eigen
from internal.linalg.matrix import as_matrix, hermitian_part
from internal.linalg.tolerance import Tolerance, resolve_tolerance

# 补全时，标准基向量的残差低于此值视为已被张成
_COMPLETION_RESIDUAL = 1e-6


@dataclass(frozen=True)
class SvdSystem:
    """
    奇异值分解 M = left · diag(singulars) · right*

    Attributes:
        singulars: 降序非负奇异值
        left: 左奇异向量（酉）
        right: 右奇异向量（酉）
    """
    singulars: np.ndarray
    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        for name, dtype in (("singulars", float), ("left", np.complex128), ("right", np.complex128)):
            arr = np.array(getattr(self, name), dtype=dtype, copy=True)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def dim(self) -> int:
        return int(self.singulars.shape[0])

    def reconstruct(self) -> np.ndarray:
        return (self.left * self.singulars) @ self.right.conj().T


def orthonormal_completion(columns: np.ndarray, n: int) -> np.ndarray:
    """
    把若干近似正交的列重正交化，并用标准基补全为 n×n 酉矩阵

    给定列保持原位置；若某列在正交化后塌缩，则该位置由补全向量填充。

    Args:
        columns: n×r 矩阵（r ≤ n）
        n: 维度

    Returns:
        n×n 酉矩阵，前 r 列张成与输入相同的空间
    """
    columns = np.asarray(columns, dtype=np.complex128).reshape(n, -1)
    slots = [None] * n
    accepted = []

    def _orthogonalize(v: np.ndarray) -> np.ndarray:
        # 两遍 MGS
        for _ in range(2):
            for b in accepted:
                v = v - (b.conj() @ v) * b
        return v

    for j in range(columns.shape[1]):
        v = _orthogonalize(columns[:, j].copy())
        norm = np.linalg.norm(v)
        if norm > _COMPLETION_RESIDUAL:
            v = v / norm
            slots[j] = v
            accepted.append(v)

    free = [j for j in range(n) if slots[j] is None]
    for i in range(n):
        if not free:
            break
        e = np.zeros(n, dtype=np.complex128)
        e[i] = 1.0
        v = _orthogonalize(e)
        norm = np.linalg.norm(v)
        if norm > _COMPLETION_RESIDUAL:
            v = v / norm
            slots[free.pop(0)] = v
            accepted.append(v)

    return np.column_stack(slots)


def svd(M, tol: Optional[Tolerance] = None) -> SvdSystem:
    """
    奇异值分解

    Args:
        M: 有限元素方阵
        tol: 容差策略（决定左因子中视为零的奇异值下限）

    Returns:
        SvdSystem: singulars 降序

    Raises:
        NoConvergence: 来自特征分解
    """
    tol = resolve_tolerance(tol)
    A = as_matrix(M)
    n = A.shape[0]

    gram = hermitian_part(A.conj().T @ A)
    eig = hermitian_eigen(gram, tol)
    right = np.array(eig.vectors)
    images = A @ right
    singulars = np.linalg.norm(images, axis=0)

    order = np.argsort(-singulars, kind="stable")
    singulars = singulars[order]
    right = right[:, order]
    images = images[:, order]

    floor = tol.abs_floor * max(1.0, float(singulars[0]))
    rank = int(np.sum(singulars > floor))
    left_cols = images[:, :rank] / singulars[:rank]
    left = orthonormal_completion(left_cols, n)

    singulars = singulars.copy()
    singulars[rank:] = 0.0
    return SvdSystem(singulars=singulars, left=left, right=right)


def operator_norm(M) -> float:
    """‖M‖_∞ = σ_1(M)"""
    return float(svd(M).singulars[0])
