"""
核心泛函 F(p, t) = ‖ |A^{t/p} Z B^{t/p}|^{αp} ‖ 及其截面与变体

所有求值都在 log 空间完成：先取 M 的奇异值 s，再把 αp·log s 交给
SymmetricNorm.log_of_singulars，指数 αp 很大时也不会上溢。
"""
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

import numpy as np

from internal.linalg import Tolerance, resolve_tolerance, svd
from internal.matfun import PsdMatrix, psd_power, zero_pad
from internal.norms import SymmetricNorm
from pkg.errors import BadDomain, DimMismatch

# 截面变体固定坐标的判等阈值
_SECTION_ATOL = 1e-12


class Variant(str, Enum):
    """泛函变体"""
    TWO_VAR = "two_var"                 # (p, t) ↦ ‖|A^{t/p}ZB^{t/p}|^{αp}‖
    SECTION_T1 = "section_t1"           # p ↦ F(p, 1)
    SECTION_P1 = "section_p1"           # t ↦ F(1, t) = ‖|A^tZB^t|^α‖
    POWER_P = "power_p"                 # (p, t) ↦ ‖|A^{t/p}ZB^{t/p}|^α‖^p，t > 0
    CONGRUENCE = "congruence"           # (p, t) ↦ ‖(Z*A^{t/p}Z)^{αp}‖
    FIXED_EXPONENT = "fixed_exponent"   # 反例对照：‖|A^{t/p}ZB^{t/p}|^c‖，c 固定


@dataclass(frozen=True, eq=False)
class FunctionalSpec:
    """
    泛函定义

    Attributes:
        A: PSD 矩阵（n×n）
        B: PSD 矩阵（n×n；CONGRUENCE 变体忽略）
        Z: 权重矩阵（CONGRUENCE 允许 n×m 矩形）
        alpha: α > 0
        norm: 对称范数
        variant: 变体
        exponent: FIXED_EXPONENT 的固定指数 c
    """
    A: PsdMatrix
    B: Optional[PsdMatrix]
    Z: np.ndarray
    alpha: float
    norm: SymmetricNorm
    variant: Variant = Variant.TWO_VAR
    exponent: Optional[float] = None
    tol: Optional[Tolerance] = field(default=None)

    def __post_init__(self):
        Z = np.atleast_2d(np.array(self.Z, dtype=np.complex128, copy=True))
        Z.setflags(write=False)
        object.__setattr__(self, "Z", Z)
        object.__setattr__(self, "tol", resolve_tolerance(self.tol))
        object.__setattr__(self, "variant", Variant(self.variant))

        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise BadDomain("α 必须为正", alpha=self.alpha)
        n = self.A.dim
        if self.variant == Variant.CONGRUENCE:
            if Z.shape[0] != n:
                raise DimMismatch("Z 的行数必须等于 A 的维度", z_shape=Z.shape, n=n)
            return
        if self.B is None or self.B.dim != n or Z.shape != (n, n):
            raise DimMismatch("A、B、Z 维度不一致", a=n, b=None if self.B is None else self.B.dim,
                              z_shape=Z.shape)
        if self.variant == Variant.FIXED_EXPONENT and not (self.exponent and self.exponent > 0):
            raise BadDomain("FIXED_EXPONENT 需要正的固定指数", exponent=self.exponent)

    @property
    def dim(self) -> int:
        return max(self.A.dim, self.Z.shape[1])

    def with_variant(self, variant: Variant, **changes) -> "FunctionalSpec":
        return replace(self, variant=Variant(variant), **changes)


def _log_singulars(M: np.ndarray, tol: Tolerance) -> np.ndarray:
    """降序奇异值的 log（零奇异值为 −inf）"""
    s = svd(M, tol).singulars
    with np.errstate(divide="ignore"):
        return np.log(s)


def _check_domain(spec: FunctionalSpec, p: float, t: float) -> None:
    if not (math.isfinite(p) and p > 0):
        raise BadDomain("p 必须为正", p=p)
    if not math.isfinite(t):
        raise BadDomain("t 必须有限", t=t)
    if spec.variant == Variant.SECTION_T1 and abs(t - 1.0) > _SECTION_ATOL:
        raise BadDomain("SECTION_T1 截面要求 t = 1", t=t)
    if spec.variant == Variant.SECTION_P1 and abs(p - 1.0) > _SECTION_ATOL:
        raise BadDomain("SECTION_P1 截面要求 p = 1", p=p)
    if spec.variant == Variant.POWER_P and t <= 0:
        raise BadDomain("POWER_P 变体要求 t > 0", t=t)


def log_evaluate_F(spec: FunctionalSpec, p: float, t: float) -> float:
    """
    log F(p, t)

    Raises:
        BadDomain: p ≤ 0，或截面 / 变体的定义域之外
    """
    p = float(p)
    t = float(t)
    _check_domain(spec, p, t)
    s = t / p
    tol = spec.tol

    if spec.variant == Variant.CONGRUENCE:
        # Z*A^{s}Z 的特征值 = σ(A^{s/2} Z)²
        half = psd_power(spec.A, 0.5 * s).matrix @ spec.Z
        log_s = _log_singulars(zero_pad(half, spec.dim), tol)
        return spec.norm.log_of_singulars(2.0 * spec.alpha * p * log_s)

    M = psd_power(spec.A, s).matrix @ spec.Z @ psd_power(spec.B, s).matrix
    log_s = _log_singulars(M, tol)

    if spec.variant == Variant.POWER_P:
        return p * spec.norm.log_of_singulars(spec.alpha * log_s)
    if spec.variant == Variant.FIXED_EXPONENT:
        return spec.norm.log_of_singulars(float(spec.exponent) * log_s)
    return spec.norm.log_of_singulars(spec.alpha * p * log_s)


def evaluate_F(spec: FunctionalSpec, p: float, t: float) -> float:
    """
    F(p, t)

    示例:
        A = B = Z = I，任意 (p, t)，算子范数 -> 1
        A = B = diag(1, 4)，Z = I，α = 1，算子范数 -> 16^t（与 p 无关）
    """
    value = log_evaluate_F(spec, p, t)
    if value == float("-inf"):
        return 0.0
    with np.errstate(over="ignore"):
        return float(np.exp(value))


def build_spec(A, B, Z, alpha: float, norm, variant=Variant.TWO_VAR, exponent=None, tol=None) -> FunctionalSpec:
    """由原始数组构造 FunctionalSpec（PSD 校验在此完成）"""
    tol = resolve_tolerance(tol)
    A_psd = A if isinstance(A, PsdMatrix) else PsdMatrix.from_matrix(A, tol)
    B_psd = None
    if B is not None:
        B_psd = B if isinstance(B, PsdMatrix) else PsdMatrix.from_matrix(B, tol)
    if isinstance(norm, str):
        norm = SymmetricNorm.parse(norm)
    return FunctionalSpec(A=A_psd, B=B_psd, Z=np.asarray(Z, dtype=np.complex128), alpha=float(alpha),
                          norm=norm, variant=Variant(variant), exponent=exponent, tol=tol)
