"""
矩阵构造：Cartesian 分解、Schur 积、直和、Kronecker 积、复合矩阵（反对称幂）、补零
"""
import itertools
from typing import List, Sequence, Tuple

import numpy as np
from scipy.linalg import block_diag

from internal.linalg import as_matrix, check_same_dim
from pkg.errors import BadDomain, BadOrder, DimMismatch


def cartesian(T) -> Tuple[np.ndarray, np.ndarray]:
    """
    Cartesian 分解 T = X + iY

    Returns:
        (X, Y)：X = (T+T*)/2，Y = (T−T*)/2i，均为 Hermitian
    """
    A = as_matrix(T, "T")
    Ah = A.conj().T
    return 0.5 * (A + Ah), (A - Ah) / 2j


def schur_product(X, Y) -> np.ndarray:
    """
    Schur（Hadamard）积 X∘Y

    Raises:
        DimMismatch: 维度不一致
    """
    A = as_matrix(X, "X")
    B = as_matrix(Y, "Y")
    check_same_dim(A, B)
    return A * B


def direct_sum(blocks: Sequence) -> np.ndarray:
    """分块对角直和 X_1 ⊕ … ⊕ X_m"""
    mats = [as_matrix(b, "block") for b in blocks]
    if not mats:
        raise DimMismatch("直和至少需要一个分块")
    return np.asarray(block_diag(*mats), dtype=np.complex128)


def kron(X, Y) -> np.ndarray:
    """Kronecker 积 X⊗Y"""
    return np.kron(as_matrix(X, "X"), as_matrix(Y, "Y"))


def index_sets(n: int, k: int) -> List[Tuple[int, ...]]:
    """字典序的 k 元递增下标集"""
    return list(itertools.combinations(range(n), k))


def compound(M, k: int) -> np.ndarray:
    """
    k 阶复合矩阵 ∧^k M

    C(n,k) 维，元素为 k×k 子式 det M[I, J]，I、J 按字典序排列。

    示例:
        compound(diag(1, 2, 3), 2) -> diag(2, 3, 6)

    Raises:
        BadOrder: k 不在 [1, n]
    """
    A = as_matrix(M)
    n = A.shape[0]
    if not isinstance(k, (int, np.integer)) or k < 1 or k > n:
        raise BadOrder("复合矩阵阶数越界", k=k, n=n)
    idx = np.array(index_sets(n, int(k)))
    minors = A[idx[:, None, :, None], idx[None, :, None, :]]
    return np.linalg.det(minors).astype(np.complex128)


def zero_pad(Z, n: int) -> np.ndarray:
    """
    把 r×c 矩阵补零嵌入 n×n（左上角），用于矩形 Z 的合同变换

    Raises:
        DimMismatch: r 或 c 超过 n
        BadDomain: 含非有限元素
    """
    A = np.atleast_2d(np.asarray(Z, dtype=np.complex128))
    if A.ndim != 2 or A.shape[0] > n or A.shape[1] > n:
        raise DimMismatch("补零目标维度过小", shape=A.shape, n=n)
    if not np.all(np.isfinite(A)):
        raise BadDomain("补零输入含非有限元素")
    out = np.zeros((n, n), dtype=np.complex128)
    out[:A.shape[0], :A.shape[1]] = A
    return out


def isometry_det(A, V, W) -> float:
    """
    |det(V* A W)|，V、W ∈ Θ(k, n)（列正交的 n×k 等距）

    变分公式：对所有等距取上确界等于 ∏_{j≤k} λ_j(|A|)。
    """
    M = as_matrix(A)
    V = np.asarray(V, dtype=np.complex128)
    W = np.asarray(W, dtype=np.complex128)
    if V.shape != W.shape or V.shape[0] != M.shape[0]:
        raise DimMismatch("等距维度不一致", V=V.shape, W=W.shape, n=M.shape[0])
    return float(abs(np.linalg.det(V.conj().T @ M @ W)))
