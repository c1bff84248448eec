"""
Kraus 和形式的正线性映射 Φ(X) = Σ_i Z_i* X Z_i

Z_i 形状为 m×n：Φ 把 𝕄_m 映到 𝕄_n。映射只以 Kraus 形式存储，
正性由形式本身保证。
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from internal.linalg import (
    Tolerance,
    as_matrix,
    hermitian_eigen,
    hermitian_part,
    max_abs,
    resolve_tolerance,
)
from internal.matfun import PsdMatrix
from pkg.errors import DimMismatch


@dataclass(frozen=True, eq=False)
class KrausMap:
    """
    正线性映射

    Attributes:
        kraus: 形状 (r, m, n) 的 Kraus 算子堆叠（r 可为 0，此时是零映射）
        in_dim: m
        out_dim: n
        sub_unital: Σ Z_i* Z_i ≤ I + tol
        unital: ‖Σ Z_i* Z_i − I‖_max ≤ tol
    """
    kraus: np.ndarray
    in_dim: int
    out_dim: int
    sub_unital: bool = field(init=False)
    unital: bool = field(init=False)
    tol: Tolerance = field(default=None, compare=False)

    def __post_init__(self):
        tol = resolve_tolerance(self.tol)
        ops = np.array(self.kraus, dtype=np.complex128, copy=True).reshape(-1, self.in_dim, self.out_dim)
        ops.setflags(write=False)
        object.__setattr__(self, "kraus", ops)
        object.__setattr__(self, "tol", tol)

        S = hermitian_part(self.unit_image())
        top = float(hermitian_eigen(S, tol).values[0])
        object.__setattr__(self, "sub_unital", top <= 1.0 + tol.rel)
        object.__setattr__(self, "unital", max_abs(S - np.eye(self.out_dim)) <= tol.rel)

    # ==================== 构造 ====================

    @classmethod
    def from_kraus(cls, ops: Sequence, in_dim: Optional[int] = None, out_dim: Optional[int] = None,
                   tol=None) -> "KrausMap":
        """
        由 Kraus 算子列表构造

        Raises:
            DimMismatch: 算子形状不一致，或空列表且未给出维度
        """
        mats = [np.atleast_2d(np.asarray(z, dtype=np.complex128)) for z in ops]
        if not mats:
            if in_dim is None or out_dim is None:
                raise DimMismatch("空 Kraus 列表需要显式给出维度")
            return cls(kraus=np.zeros((0, in_dim, out_dim)), in_dim=in_dim, out_dim=out_dim, tol=tol)
        shape = mats[0].shape
        if any(z.shape != shape for z in mats):
            raise DimMismatch("Kraus 算子形状不一致", shapes=[z.shape for z in mats])
        if (in_dim is not None and in_dim != shape[0]) or (out_dim is not None and out_dim != shape[1]):
            raise DimMismatch("Kraus 算子形状与给定维度不符", shape=shape, in_dim=in_dim, out_dim=out_dim)
        return cls(kraus=np.stack(mats), in_dim=shape[0], out_dim=shape[1], tol=tol)

    # ==================== 求值 ====================

    @property
    def terms(self) -> int:
        return int(self.kraus.shape[0])

    def unit_image(self) -> np.ndarray:
        """Φ(I) = Σ Z_i* Z_i"""
        return np.einsum("kji,kjl->il", self.kraus.conj(), self.kraus)

    def apply(self, X) -> np.ndarray:
        """
        Φ(X) = Σ Z_i* X Z_i

        Raises:
            DimMismatch: X 不是 m×m
        """
        A = as_matrix(X, "X")
        if A.shape[0] != self.in_dim:
            raise DimMismatch("映射输入维度不符", expected=self.in_dim, actual=A.shape[0])
        return np.einsum("kji,jl,klm->im", self.kraus.conj(), A, self.kraus)

    def apply_psd(self, A: PsdMatrix) -> PsdMatrix:
        """PSD 输入的像，按 PSD 重新分解"""
        return PsdMatrix.from_matrix(hermitian_part(self.apply(A.matrix)), self.tol)

    def __call__(self, X) -> np.ndarray:
        return self.apply(X)

    def kraus_list(self) -> List[np.ndarray]:
        return [np.array(z) for z in self.kraus]
