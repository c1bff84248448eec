"""
随机实例生成器

所有生成器接受 Generator 或整数种子；同一种子两次调用逐位相同。
"""
from typing import List, Optional

import numpy as np

from internal.config import config
from internal.matfun import PsdMatrix
from internal.posmap import KrausMap
from internal.suites.rng import RngLike, as_rng
from pkg.errors import ConfigError

# ==================== 谱 profile ====================

WELL_CONDITIONED = "well-conditioned"
NEAR_SINGULAR = "near-singular"
RANK_DEFICIENT = "rank-deficient"
PROFILES = (WELL_CONDITIONED, NEAR_SINGULAR, RANK_DEFICIENT)

# 良态谱区间
_SPECTRUM_LOW, _SPECTRUM_HIGH = 0.5, 2.0
# 近奇异谱的几何衰减终点
_NEAR_SINGULAR_FLOOR = 1e-4


def sample_profile(rng: np.random.Generator, allowed=PROFILES) -> str:
    """按 [suite.profile_weights] 抽样 profile（限定在 allowed 内）"""
    weights = config.suite_config.get("profile_weights", {})
    names = [p for p in PROFILES if p in allowed]
    w = np.array([float(weights.get(p, 1.0)) for p in names])
    return names[int(rng.choice(len(names), p=w / w.sum()))]


def spectrum(rng_or_seed: RngLike, n: int, profile: str = WELL_CONDITIONED) -> np.ndarray:
    """
    降序非负谱

    - well-conditioned: [0.5, 2] 内均匀
    - near-singular: 从 1 几何衰减到 1e-4（带 ±10% 扰动）
    - rank-deficient: 秩 n//2，其余为精确 0（n = 1 时为零矩阵）
    """
    rng = as_rng(rng_or_seed)
    if profile == WELL_CONDITIONED:
        values = rng.uniform(_SPECTRUM_LOW, _SPECTRUM_HIGH, n)
    elif profile == NEAR_SINGULAR:
        values = np.geomspace(1.0, _NEAR_SINGULAR_FLOOR, n) if n > 1 else np.ones(1)
        values = values * rng.uniform(0.9, 1.1, n)
    elif profile == RANK_DEFICIENT:
        rank = n // 2
        values = np.zeros(n)
        values[:rank] = rng.uniform(_SPECTRUM_LOW, _SPECTRUM_HIGH, rank)
    else:
        raise ConfigError("未知的谱 profile", profile=profile)
    return np.sort(values)[::-1]


# ==================== 基本矩阵 ====================

def haar_unitary(rng_or_seed: RngLike, n: int) -> np.ndarray:
    """Haar 酉矩阵（复 Ginibre 的 QR，R 对角相位归一）"""
    rng = as_rng(rng_or_seed)
    G = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    Q, R = np.linalg.qr(G)
    d = np.diag(R)
    return Q * (d / np.abs(d))


def gen_ginibre(rng_or_seed: RngLike, n: int, m: Optional[int] = None) -> np.ndarray:
    """复 Ginibre 矩阵，元素方差 1/n"""
    rng = as_rng(rng_or_seed)
    m = n if m is None else m
    return (rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))) / np.sqrt(2.0 * n)


def gen_with_singulars(rng_or_seed: RngLike, singulars) -> np.ndarray:
    """U diag(s) V*，U、V 为独立 Haar 酉"""
    rng = as_rng(rng_or_seed)
    s = np.asarray(singulars, dtype=float)
    n = s.shape[0]
    return (haar_unitary(rng, n) * s) @ haar_unitary(rng, n).conj().T


def gen_psd(rng_or_seed: RngLike, n: int, profile: str = WELL_CONDITIONED) -> PsdMatrix:
    """
    随机 PSD 矩阵 U diag(λ) U*

    示例:
        gen_psd(7, 3, "rank-deficient").rank -> 1
    """
    rng = as_rng(rng_or_seed)
    values = spectrum(rng, n, profile)
    return PsdMatrix.from_spectrum(values, haar_unitary(rng, n))


def gen_hermitian(rng_or_seed: RngLike, n: int, scale: float = 1.0) -> np.ndarray:
    """Hermitian 矩阵，‖H‖_∞ 在 [0.5, 1]·scale 内"""
    rng = as_rng(rng_or_seed)
    G = gen_ginibre(rng, n)
    H = 0.5 * (G + G.conj().T)
    top = float(np.linalg.norm(H, 2))
    if top == 0.0:
        return H
    return H * (rng.uniform(0.5, 1.0) * scale / top)


def gen_normal(rng_or_seed: RngLike, n: int, profile: str = WELL_CONDITIONED) -> np.ndarray:
    """正规矩阵 U diag(r e^{iθ}) U*，模长取自 profile 谱"""
    rng = as_rng(rng_or_seed)
    moduli = spectrum(rng, n, profile)
    phases = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, n))
    U = haar_unitary(rng, n)
    return (U * (moduli * phases)) @ U.conj().T


def gen_contraction(rng_or_seed: RngLike, n: int, floor: float = 0.5) -> np.ndarray:
    """压缩矩阵：奇异值在 [floor, 1] 内"""
    rng = as_rng(rng_or_seed)
    return gen_with_singulars(rng, rng.uniform(floor, 1.0, n))


def gen_expansive(rng_or_seed: RngLike, n: int, ceiling: float = 2.0) -> np.ndarray:
    """扩张矩阵：奇异值在 [1, ceiling] 内（Z*Z ≥ I）"""
    rng = as_rng(rng_or_seed)
    return gen_with_singulars(rng, rng.uniform(1.0, ceiling, n))


def gen_kraus(rng_or_seed: RngLike, m: int, n: int, k_terms: int) -> List[np.ndarray]:
    """
    sub-unital 的 Kraus 算子族（m×n）

    先取 Ginibre 算子，再整体缩放使 λ_max(Σ Z_i* Z_i) = r ∈ [0.5, 1]。
    """
    rng = as_rng(rng_or_seed)
    ops = [gen_ginibre(rng, m, n) for _ in range(k_terms)]
    S = sum(Z.conj().T @ Z for Z in ops)
    top = float(np.max(np.linalg.eigvalsh(0.5 * (S + S.conj().T))))
    factor = np.sqrt(rng.uniform(0.5, 1.0) / top)
    return [Z * factor for Z in ops]


def gen_subunital_map(rng_or_seed: RngLike, m: int, n: int, k_terms: int) -> KrausMap:
    """sub-unital 正线性映射 𝕄_m → 𝕄_n"""
    return KrausMap.from_kraus(gen_kraus(rng_or_seed, m, n, k_terms))
