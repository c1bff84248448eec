"""
PSD / 正规矩阵包装与矩阵函数

- PsdMatrix：缓存谱数据的半正定矩阵（构造时钳位负特征值）
- psd_power：分数幂，零特征值恒映射为 0（广义逆约定）
- abs_val / polar：经由 SVD 的绝对值与极分解
"""
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple, Union

import numpy as np
from scipy.linalg import block_diag

from internal.linalg import (
    EigenSystem,
    Tolerance,
    as_matrix,
    commutator_defect,
    hermitian_eigen,
    hermitian_part,
    resolve_tolerance,
    svd,
)
from pkg.errors import BadDomain, NotNormal, NotPsd


@dataclass(frozen=True)
class PsdMatrix:
    """
    半正定矩阵

    Attributes:
        matrix: 由钳位后的谱重构的 Hermitian 矩阵
        spectrum: 缓存的 EigenSystem（降序，零特征值为精确 0）
    """
    matrix: np.ndarray
    spectrum: EigenSystem

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.complex128, copy=True)
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    # ==================== 构造 ====================

    @classmethod
    def from_matrix(cls, M, tol: Optional[Tolerance] = None) -> "PsdMatrix":
        """
        校验并包装 PSD 矩阵

        Raises:
            NotHermitian: 非 Hermitian
            NotPsd: 最小特征值 < −psd_clamp·max(1, λ_1)
        """
        tol = resolve_tolerance(tol)
        eig = hermitian_eigen(M, tol)
        return cls.from_spectrum(eig.values, eig.vectors, tol)

    @classmethod
    def from_spectrum(cls, values, vectors, tol: Optional[Tolerance] = None) -> "PsdMatrix":
        """由（可能含舍入负值的）谱构造，应用钳位与秩下限"""
        tol = resolve_tolerance(tol)
        values = np.asarray(values, dtype=float)
        top = max(1.0, float(np.max(values)))
        lowest = float(np.min(values))
        if lowest < -tol.psd_clamp * top:
            raise NotPsd("矩阵不是半正定", min_eigenvalue=lowest, max_eigenvalue=float(np.max(values)))
        values = np.where(values > tol.rank_floor * top, values, 0.0)
        return cls._from_clean_spectrum(values, vectors)

    @classmethod
    def _from_clean_spectrum(cls, values, vectors) -> "PsdMatrix":
        """谱已非负时直接构造（按降序重排，不再钳位）"""
        values = np.asarray(values, dtype=float)
        vectors = np.asarray(vectors, dtype=np.complex128)
        order = np.argsort(-values, kind="stable")
        eig = EigenSystem(values=values[order], vectors=vectors[:, order])
        return cls(matrix=eig.reconstruct(), spectrum=eig)

    @classmethod
    def identity(cls, n: int) -> "PsdMatrix":
        return cls._from_clean_spectrum(np.ones(n), np.eye(n))

    @classmethod
    def direct_sum(cls, blocks: Iterable["PsdMatrix"]) -> "PsdMatrix":
        """分块谱拼接，无需新的特征分解"""
        blocks = list(blocks)
        values = np.concatenate([b.values for b in blocks])
        vectors = block_diag(*[np.asarray(b.spectrum.vectors) for b in blocks])
        return cls._from_clean_spectrum(values, vectors)

    # ==================== 谱数据 ====================

    @property
    def dim(self) -> int:
        return self.spectrum.dim

    @property
    def values(self) -> np.ndarray:
        """λ_1 ≥ … ≥ λ_n"""
        return self.spectrum.values

    @property
    def increasing(self) -> np.ndarray:
        """ν_1 ≤ … ≤ ν_n"""
        return self.spectrum.increasing

    @property
    def down(self) -> np.ndarray:
        """A^↓ = diag(λ_1, …, λ_n)"""
        return np.diag(self.values).astype(np.complex128)

    @property
    def rank(self) -> int:
        return int(np.count_nonzero(self.values))

    @property
    def is_invertible(self) -> bool:
        return self.rank == self.dim

    def power(self, t: float) -> "PsdMatrix":
        return psd_power(self, t)


@dataclass(frozen=True)
class NormalMatrix:
    """
    正规矩阵及其极分解 N = U|N|，U 与 |N| 交换

    Attributes:
        matrix: N
        abs: |N|
        phase: 酉因子 U
    """
    matrix: np.ndarray
    abs: PsdMatrix
    phase: np.ndarray

    def __post_init__(self):
        for name in ("matrix", "phase"):
            arr = np.array(getattr(self, name), dtype=np.complex128, copy=True)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def from_matrix(cls, N, tol: Optional[Tolerance] = None) -> "NormalMatrix":
        return polar(N, require_normal=True, tol=tol)

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])


# ==================== 矩阵函数 ====================

def psd_power(A: PsdMatrix, t: float) -> PsdMatrix:
    """
    A^t（广义逆约定）

    正特征值映射为 λ^t，零特征值恒映射为 0；因此 t=0 给出值域投影 E，
    t<0 给出 (A+F)^t·E。

    示例:
        psd_power(diag(4, 9), 0.5)  -> diag(2, 3)
        psd_power(diag(4, 0), -1)   -> diag(0.25, 0)
    """
    t = float(t)
    if not np.isfinite(t):
        raise BadDomain("幂指数必须有限", t=t)
    values = np.array(A.values)
    positive = values > 0.0
    new_values = np.zeros_like(values)
    new_values[positive] = values[positive] ** t
    return PsdMatrix._from_clean_spectrum(new_values, A.spectrum.vectors)


def range_projection(A: PsdMatrix) -> PsdMatrix:
    """值域投影 E = A^0"""
    return psd_power(A, 0.0)


def null_projection(A: PsdMatrix) -> np.ndarray:
    """零空间投影 F = I − E"""
    return np.eye(A.dim, dtype=np.complex128) - range_projection(A).matrix


def psd_log(A: PsdMatrix) -> np.ndarray:
    """
    正定矩阵的 Hermitian 对数

    Raises:
        BadDomain: A 奇异
    """
    if not A.is_invertible:
        raise BadDomain("psd_log 需要正定矩阵", rank=A.rank, dim=A.dim)
    return A.spectrum.reconstruct(np.log(A.values))


def abs_val(M, tol: Optional[Tolerance] = None) -> PsdMatrix:
    """|M| = (M*M)^{1/2}，特征值即 M 的奇异值"""
    s = svd(M, tol)
    return PsdMatrix._from_clean_spectrum(s.singulars, s.right)


def matrix_power_abs(M, r: float, tol: Optional[Tolerance] = None) -> PsdMatrix:
    """|M|^r（经由 SVD）"""
    return psd_power(abs_val(M, tol), r)


def polar(
    N,
    require_normal: bool = False,
    tol: Optional[Tolerance] = None
) -> Union[NormalMatrix, Tuple[np.ndarray, PsdMatrix]]:
    """
    极分解 N = U|N|

    U = W·V*，其中 W 为 SVD 左因子（零空间上由 Gram–Schmidt 按标准基补全）。

    Args:
        N: 方阵
        require_normal: 为 True 时校验正规性并返回 NormalMatrix
        tol: 容差策略

    Returns:
        NormalMatrix（require_normal）或 (U, |N|)

    Raises:
        NotNormal: require_normal 且 ‖N*N − NN*‖_max > 1e-10·max(1, ‖N‖_∞²)
    """
    tol = resolve_tolerance(tol)
    A = as_matrix(N, "N")
    s = svd(A, tol)
    if require_normal:
        defect = commutator_defect(A)
        scale = max(1.0, float(s.singulars[0]) ** 2)
        if defect > tol.normal * scale:
            raise NotNormal("矩阵不是正规矩阵", commutator_defect=defect)

    phase = np.asarray(s.left) @ np.asarray(s.right).conj().T
    absolute = PsdMatrix._from_clean_spectrum(s.singulars, s.right)
    if require_normal:
        return NormalMatrix(matrix=A, abs=absolute, phase=phase)
    return phase, absolute


def psd_congruence(A: PsdMatrix, Z) -> PsdMatrix:
    """Z* A Z（矩形 Z 需先 zero_pad），结果按 PSD 重新分解"""
    Z = np.asarray(Z, dtype=np.complex128)
    return PsdMatrix.from_matrix(hermitian_part(Z.conj().T @ A.matrix @ Z))


def psd_product(*factors) -> PsdMatrix:
    """
    形如 X_1 X_2 … X_k 且数学上 Hermitian 半正定的乘积（如 ABA、A Z* B Z A）

    先做 Hermitian 对称化再构造 PsdMatrix。
    """
    result = np.asarray(factors[0].matrix if isinstance(factors[0], PsdMatrix) else factors[0],
                        dtype=np.complex128)
    for f in factors[1:]:
        result = result @ np.asarray(f.matrix if isinstance(f, PsdMatrix) else f, dtype=np.complex128)
    return PsdMatrix.from_matrix(hermitian_part(result))
