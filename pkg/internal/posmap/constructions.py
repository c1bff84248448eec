"""
具体的正线性映射构造与块扩张
"""
from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np

from internal.linalg import as_matrix, resolve_tolerance
from internal.matfun import PsdMatrix, psd_power
from internal.posmap.kraus_map import KrausMap
from log import logger
from pkg.errors import DimMismatch, NotHermitian, NotPsd, NotSubUnital


def congruence(Z, tol=None) -> KrausMap:
    """X ↦ Z* X Z（单项 Kraus 和）"""
    return KrausMap.from_kraus([np.asarray(Z, dtype=np.complex128)], tol=tol)


def pinching(n: int, tol=None) -> KrausMap:
    """对角压缩 X ↦ I∘X，Kraus 为 e_i e_i*"""
    eye = np.eye(n, dtype=np.complex128)
    return KrausMap.from_kraus([np.outer(eye[:, i], eye[:, i]) for i in range(n)], tol=tol)


def schur_multiplier(C, tol=None) -> KrausMap:
    """
    Schur 乘子 X ↦ C∘X

    C = Σ c_i c_i*（钳位后的特征分解，c_i = √λ_i v_i），Kraus 项 diag(c̄_i)。
    diag(C) ≤ 1 时 sub_unital。

    示例:
        schur_multiplier(J)  -> 恒等映射（unital）
        schur_multiplier(I)  -> 对角压缩

    Raises:
        NotPsd: C 不是半正定（包括非 Hermitian）
    """
    tol = resolve_tolerance(tol)
    if isinstance(C, PsdMatrix):
        P = C
    else:
        try:
            P = PsdMatrix.from_matrix(C, tol)
        except NotHermitian as e:
            raise NotPsd("Schur 乘子矩阵不是半正定", reason=e.message)
    n = P.dim
    ops = []
    for value, vec in zip(P.values, P.spectrum.vectors.T):
        if value <= 0.0:
            continue
        ops.append(np.diag(np.conj(np.sqrt(value) * vec)))
    return KrausMap.from_kraus(ops, in_dim=n, out_dim=n, tol=tol)


def block_average(m: int, n: int, tol=None) -> KrausMap:
    """
    𝕄_{mn} → 𝕄_n：(S_{k,l}) ↦ (1/m) Σ_k S_{k,k}，unital

    Z_k = E_k/√m，E_k 为第 k 个 n 列块嵌入。
    """
    if m < 1 or n < 1:
        raise DimMismatch("块平均需要 m, n ≥ 1", m=m, n=n)
    ops = []
    for k in range(m):
        Z = np.zeros((m * n, n), dtype=np.complex128)
        Z[k * n:(k + 1) * n, :] = np.eye(n) / np.sqrt(m)
        ops.append(Z)
    return KrausMap.from_kraus(ops, tol=tol)


def block_full_average(m: int, n: int, tol=None) -> KrausMap:
    """
    𝕄_{mn} → 𝕄_n：(S_{k,l}) ↦ (1/m) Σ_{k,l} S_{k,l}，unital

    m=2 时 [[B, C], [D, E]] ↦ (B+C+D+E)/2。
    """
    if m < 1 or n < 1:
        raise DimMismatch("块平均需要 m, n ≥ 1", m=m, n=n)
    Z = np.vstack([np.eye(n, dtype=np.complex128)] * m) / np.sqrt(m)
    return KrausMap.from_kraus([Z], tol=tol)


def schur_extraction(n: int, tol=None) -> KrausMap:
    """
    𝕄_{n²} → 𝕄_n 的主子矩阵映射，Φ(X⊗Y) = X∘Y
    """
    Z = np.zeros((n * n, n), dtype=np.complex128)
    for j in range(n):
        Z[j * n + j, j] = 1.0
    return KrausMap.from_kraus([Z], tol=tol)


# ==================== 块扩张 ====================

def dilate(phi: KrausMap, A: PsdMatrix, B: PsdMatrix) -> Tuple[PsdMatrix, PsdMatrix, np.ndarray]:
    """
    把 sub-unital 映射约化为单个压缩的合同变换

    Ã = A⊕0⊕…⊕0，B̃ = B⊕…⊕B，Z̃ 的第 (i, 0) 块为 Z_i（其余为 0）。
    此时 Ã Z̃* B̃^p Z̃ Ã 的左上块等于 A Φ(B^p) A，且 ‖Z̃‖_∞ ≤ 1。

    Raises:
        NotSubUnital: 映射不是 sub-unital
        DimMismatch: 映射不是 𝕄_n → 𝕄_n 或与 A、B 维度不符
    """
    if not phi.sub_unital:
        raise NotSubUnital("块扩张需要 sub-unital 映射", unit_image_top=float(
            np.max(np.linalg.eigvalsh(phi.unit_image()))))
    n = A.dim
    if phi.in_dim != n or phi.out_dim != n or B.dim != n:
        raise DimMismatch("块扩张维度不一致", in_dim=phi.in_dim, out_dim=phi.out_dim, a=n, b=B.dim)
    m = max(phi.terms, 1)

    zero = PsdMatrix._from_clean_spectrum(np.zeros(n), np.eye(n))
    A_tilde = PsdMatrix.direct_sum([A] + [zero] * (m - 1))
    B_tilde = PsdMatrix.direct_sum([B] * m)
    Z_tilde = np.zeros((m * n, m * n), dtype=np.complex128)
    for i, Z in enumerate(phi.kraus):
        Z_tilde[i * n:(i + 1) * n, :n] = Z
    logger.debug("块扩张完成", terms=phi.terms, dim=n)
    return A_tilde, B_tilde, Z_tilde


# ==================== 交换定义域上的 Kraus 分解 ====================

@dataclass(frozen=True, eq=False)
class SpectralImage:
    """A 的一个秩一谱投影 E_i = x_i x_i* 及其像 Φ(E_i)"""
    eigenvalue: float
    vector: np.ndarray
    image: np.ndarray


def spectral_images(map_fn: Callable[[np.ndarray], np.ndarray], A: PsdMatrix) -> List[SpectralImage]:
    """对 A 的每个特征向量 x_i 计算 (λ_i, x_i, Φ(x_i x_i*))"""
    images = []
    for value, vec in zip(A.values, A.spectrum.vectors.T):
        x = np.array(vec, dtype=np.complex128)
        images.append(SpectralImage(float(value), x, as_matrix(map_fn(np.outer(x, x.conj())), "Phi(E)")))
    return images


def kraus_on_commutative(images: List[SpectralImage], tol=None) -> KrausMap:
    """
    交换定义域上的正映射的 Kraus 形式

    Z_{i,j} = x_i R_{i,j}，R_{i,j} 为 Φ(E_i)^{1/2} 的第 j 行；于是对 A 的
    所有幂 A^t 有 Σ Z_{i,j}* A^t Z_{i,j} = Σ λ_i^t Φ(E_i)。零行跳过。

    Raises:
        NotPsd: 某个 Φ(E_i) 不是半正定
    """
    tol = resolve_tolerance(tol)
    if not images:
        raise DimMismatch("谱像列表为空")
    m = images[0].vector.shape[0]
    n = images[0].image.shape[0]
    ops = []
    for item in images:
        try:
            root = psd_power(PsdMatrix.from_matrix(item.image, tol), 0.5).matrix
        except NotHermitian as e:
            raise NotPsd("谱像不是半正定", eigenvalue=item.eigenvalue, reason=e.message)
        for j in range(n):
            row = root[j, :]
            if not np.any(row):
                continue
            ops.append(np.outer(item.vector, row))
    return KrausMap.from_kraus(ops, in_dim=m, out_dim=n, tol=tol)
