"""
矩阵指数

- Hermitian 输入：特征分解路径 V diag(e^{λ_j}) V*
- 一般输入：13 阶 Padé 缩放平方法（θ_13 = 5.37…）
"""
import math
from typing import Optional

import numpy as np

from internal.linalg.eigen import hermitian_eigen
from internal.linalg.matrix import as_matrix, hermitian_part, is_hermitian
from internal.linalg.tolerance import Tolerance, resolve_tolerance
from pkg.errors import NoConvergence

# 13 阶 Padé 分子系数 b_0 … b_13
_PADE13 = (
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0, 129060195264000.0, 10559470521600.0,
    670442572800.0, 33522128640.0, 1323241920.0,
    40840800.0, 960960.0, 16380.0, 182.0, 1.0,
)
_THETA13 = 5.371920351148152


def expm_hermitian(H, tol: Optional[Tolerance] = None) -> np.ndarray:
    """Hermitian 矩阵指数（特征分解路径）"""
    eig = hermitian_eigen(H, tol)
    return eig.reconstruct(np.exp(eig.values))


def expm_general(M) -> np.ndarray:
    """
    一般方阵的矩阵指数：[13/13] Padé 近似 + 缩放平方

    ‖M/2^s‖_1 ≤ θ_13 后求有理近似，再平方 s 次。
    """
    A = as_matrix(M)
    n = A.shape[0]
    norm1 = float(np.linalg.norm(A, 1))
    s = 0 if norm1 <= _THETA13 else int(math.ceil(math.log2(norm1 / _THETA13)))
    A = A / (2.0 ** s)

    b = _PADE13
    ident = np.eye(n, dtype=np.complex128)
    A2 = A @ A
    A4 = A2 @ A2
    A6 = A4 @ A2
    U = A @ (A6 @ (b[13] * A6 + b[11] * A4 + b[9] * A2)
             + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * ident)
    V = (A6 @ (b[12] * A6 + b[10] * A4 + b[8] * A2)
         + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * ident)
    try:
        R = np.linalg.solve(V - U, V + U)
    except np.linalg.LinAlgError as e:
        raise NoConvergence("Padé 分母奇异", reason=e)

    for _ in range(s):
        R = R @ R
    return R


def expm(H, tol: Optional[Tolerance] = None) -> np.ndarray:
    """
    矩阵指数

    Args:
        H: 有限元素方阵（调用方负责缩放）
        tol: 容差策略（用于判断是否走 Hermitian 路径）

    示例:
        expm(np.zeros((2, 2)))            # 单位阵
        expm(np.array([[0, 1], [1, 0]]))  # [[cosh1, sinh1], [sinh1, cosh1]]
    """
    tol = resolve_tolerance(tol)
    M = as_matrix(H, "H")
    if is_hermitian(M, tol):
        return expm_hermitian(hermitian_part(M), tol)
    return expm_general(M)
