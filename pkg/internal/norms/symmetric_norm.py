"""
对称（酉不变）范数族

封闭枚举：Operator、Trace、Schatten(p ≥ 1)、KyFan(k)、NormalizedKyFan(k)。
一律经由奇异值（SVD）求值；log 空间求值用于 |M|^{αp} 这类大指数情形。
"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import numpy as np
from scipy.special import logsumexp

from internal.linalg import svd
from pkg.errors import BadOrder, ConfigError


class NormKind(str, Enum):
    """范数种类"""
    OPERATOR = "operator"
    TRACE = "trace"
    SCHATTEN = "schatten"
    KYFAN = "kyfan"
    NORMALIZED_KYFAN = "nkyfan"


@dataclass(frozen=True)
class SymmetricNorm:
    """
    对称范数

    Attributes:
        kind: 种类
        order: Schatten 的 p 或 Ky Fan 的 k
    """
    kind: NormKind
    order: Optional[float] = None

    # ==================== 构造 ====================

    @classmethod
    def operator(cls) -> "SymmetricNorm":
        return cls(NormKind.OPERATOR)

    @classmethod
    def trace(cls) -> "SymmetricNorm":
        return cls(NormKind.TRACE)

    @classmethod
    def schatten(cls, p: float) -> "SymmetricNorm":
        p = float(p)
        if not p >= 1.0:
            raise BadOrder("Schatten 指数必须 ≥ 1", p=p)
        return cls(NormKind.SCHATTEN, p)

    @classmethod
    def kyfan(cls, k: int) -> "SymmetricNorm":
        if int(k) != k or k < 1:
            raise BadOrder("Ky Fan 阶必须是正整数", k=k)
        return cls(NormKind.KYFAN, int(k))

    @classmethod
    def normalized_kyfan(cls, k: int) -> "SymmetricNorm":
        if int(k) != k or k < 1:
            raise BadOrder("Ky Fan 阶必须是正整数", k=k)
        return cls(NormKind.NORMALIZED_KYFAN, int(k))

    @classmethod
    def parse(cls, label: str) -> "SymmetricNorm":
        """
        解析报告中的短标签

        示例:
            SymmetricNorm.parse("kyfan:3")
            SymmetricNorm.parse("schatten:2.0")
        """
        name, _, arg = label.strip().partition(":")
        try:
            if name == NormKind.OPERATOR.value and not arg:
                return cls.operator()
            if name == NormKind.TRACE.value and not arg:
                return cls.trace()
            if name == NormKind.SCHATTEN.value:
                return cls.schatten(float(arg))
            if name == NormKind.KYFAN.value:
                return cls.kyfan(int(arg))
            if name == NormKind.NORMALIZED_KYFAN.value:
                return cls.normalized_kyfan(int(arg))
        except ValueError:
            pass
        raise ConfigError("无法解析的范数标签", label=label)

    # ==================== 标签 ====================

    @property
    def label(self) -> str:
        if self.kind in (NormKind.OPERATOR, NormKind.TRACE):
            return self.kind.value
        if self.kind == NormKind.SCHATTEN:
            return f"schatten:{float(self.order)}"
        return f"{self.kind.value}:{int(self.order)}"

    def __str__(self) -> str:
        return self.label

    # ==================== 求值 ====================

    def check_dim(self, n: int) -> None:
        """Ky Fan 类要求 k ≤ n"""
        if self.kind in (NormKind.KYFAN, NormKind.NORMALIZED_KYFAN) and int(self.order) > n:
            raise BadOrder("Ky Fan 阶超过维度", k=int(self.order), n=n)

    def of_singulars(self, singulars) -> float:
        """对称规范函数（输入降序奇异值）"""
        s = np.asarray(singulars, dtype=float)
        self.check_dim(s.shape[0])
        if self.kind == NormKind.OPERATOR:
            return float(s[0])
        if self.kind == NormKind.TRACE:
            return float(np.sum(s))
        if self.kind == NormKind.SCHATTEN:
            p = float(self.order)
            top = float(s[0])
            if top == 0.0:
                return 0.0
            return top * float(np.sum((s / top) ** p)) ** (1.0 / p)
        k = int(self.order)
        total = float(np.sum(s[:k]))
        return total / k if self.kind == NormKind.NORMALIZED_KYFAN else total

    def log_of_singulars(self, log_singulars) -> float:
        """
        log 空间求值：输入降序的 log 奇异值（可含 −inf）

        用于 |M|^{r} 的奇异值为 s^r 的情形：传入 r·log s 即可，避免上溢。
        """
        ls = np.asarray(log_singulars, dtype=float)
        self.check_dim(ls.shape[0])
        if np.all(np.isneginf(ls)):
            return float("-inf")
        if self.kind == NormKind.OPERATOR:
            return float(np.max(ls))
        if self.kind == NormKind.TRACE:
            return float(logsumexp(ls))
        if self.kind == NormKind.SCHATTEN:
            p = float(self.order)
            return float(logsumexp(p * ls)) / p
        k = int(self.order)
        head = np.sort(ls)[::-1][:k]
        if np.all(np.isneginf(head)):
            return float("-inf")
        value = float(logsumexp(head))
        return value - np.log(k) if self.kind == NormKind.NORMALIZED_KYFAN else value


def evaluate(norm: SymmetricNorm, M) -> float:
    """
    ‖M‖（经由 SVD）

    示例:
        evaluate(SymmetricNorm.kyfan(2), diag(3, 1, -2))            -> 5
        evaluate(SymmetricNorm.normalized_kyfan(2), diag(3, 1, -2)) -> 2.5

    Raises:
        BadOrder: Ky Fan 阶 k > n
    """
    s = svd(M).singulars
    return norm.of_singulars(s)


def log_evaluate_singulars(norm: SymmetricNorm, log_singulars) -> float:
    """log ‖·‖（输入 log 奇异值）"""
    return norm.log_of_singulars(log_singulars)


def norm_family(n: int) -> List[SymmetricNorm]:
    """维度 n 下实例化的范数族"""
    family = [SymmetricNorm.operator(), SymmetricNorm.trace()]
    family += [SymmetricNorm.schatten(p) for p in (1.5, 2.0, 3.0)]
    family += [SymmetricNorm.kyfan(k) for k in range(1, n + 1)]
    family += [SymmetricNorm.normalized_kyfan(k) for k in range(1, n + 1)]
    return family
